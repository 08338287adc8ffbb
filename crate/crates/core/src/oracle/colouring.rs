use serde::{Deserialize, Serialize};

use super::{edge_masks, OracleBudget};
use crate::error::{Error, Result};
use crate::hypergraph::HypergraphSpec;

/// Least and greatest colour counts of an `(α, β)`-colouring; both absent when none exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringSpectrum {
    pub chi: Option<usize>,
    pub chi_bar: Option<usize>,
}

/// Scans every colouring up to renaming of colours (set partitions of the vertex set),
/// keeping those where each edge sees between `alpha_param` and `beta_param` colours.
pub fn bf_colouring_spectrum(
    spec: &HypergraphSpec,
    alpha_param: usize,
    beta_param: usize,
    budget: &OracleBudget,
) -> Result<ColouringSpectrum> {
    if alpha_param == 0 || alpha_param > beta_param {
        return Err(Error::validation("need 1 <= alpha <= beta"));
    }
    let vertices = spec.vertex_count();
    budget.check_vertices(vertices)?;
    let edges: Vec<Vec<usize>> = edge_masks(spec, budget)?
        .into_iter()
        .map(|m| (0..vertices).filter(|v| m >> v & 1 == 1).collect())
        .collect();

    let mut clock = budget.clock();
    let mut colours = vec![0usize; vertices];
    let mut spectrum = ColouringSpectrum { chi: None, chi_bar: None };
    scan(0, 0, &mut colours, &mut |colouring, used| {
        clock.tick()?;
        let valid = edges.iter().all(|e| {
            let mut seen = 0u64;
            for &v in e {
                seen |= 1 << colouring[v];
            }
            (alpha_param..=beta_param).contains(&(seen.count_ones() as usize))
        });
        if valid {
            spectrum.chi = Some(spectrum.chi.map_or(used, |c| c.min(used)));
            spectrum.chi_bar = Some(spectrum.chi_bar.map_or(used, |c| c.max(used)));
        }
        Ok(())
    })?;
    Ok(spectrum)
}

/// Restricted growth strings: vertex `i` takes a colour already used or the next new one.
fn scan(
    i: usize,
    used: usize,
    colours: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], usize) -> Result<()>,
) -> Result<()> {
    if i == colours.len() {
        return visit(colours, used);
    }
    for c in 0..=used {
        colours[i] = c;
        scan(i + 1, used.max(c + 1), colours, visit)?;
    }
    Ok(())
}
