use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{verify_matching, Edge, EdgePart, HypergraphSpec, Matching};

/// One `h × m` band of the diagonal pattern, `h = Σ parts`.
///
/// Each class column is cut top-down into consecutive blocks of the given sizes; group `j`
/// takes block `i` from `classes[(j + i) % m]`. Needs `classes.len() >= parts.len()`.
pub(crate) fn diagonal_band(parts: &[usize], top: usize, classes: &[usize]) -> Vec<Vec<EdgePart>> {
    let m = classes.len();
    debug_assert!(m >= parts.len());
    let mut offsets = Vec::with_capacity(parts.len());
    let mut row = top;
    for &a in parts {
        offsets.push(row);
        row += a;
    }
    (0..m)
        .map(|j| {
            parts
                .iter()
                .zip(&offsets)
                .enumerate()
                .map(|(i, (&a, &first))| EdgePart::block(classes[(j + i) % m], first, a))
                .collect()
        })
        .collect()
}

/// Diagonal strips of height `r` over the rows `top..top + strips * r` and the given classes.
pub(crate) fn diagonal_strips(spec: &HypergraphSpec, top: usize, strips: usize, classes: &[usize]) -> Vec<Edge> {
    let parts = spec.sigma().parts();
    (0..strips)
        .flat_map(|k| diagonal_band(parts, top + k * spec.r(), classes))
        .map(Edge::new)
        .collect()
}

/// Perfect matching when `r | q` and `n >= s`, built strip by strip.
pub fn diagonal_perfect_matching(spec: &HypergraphSpec) -> Result<Matching> {
    let (n, q, r) = (spec.n(), spec.q(), spec.r());
    if q % r != 0 {
        return Err(Error::regime(format!("r = {r} does not divide q = {q}")));
    }
    if n < spec.s() {
        return Err(Error::regime(format!("n = {n} is smaller than s = {}", spec.s())));
    }
    let classes: Vec<usize> = (1..=n).collect();
    Ok(Matching::from_edges(spec, diagonal_strips(spec, 1, q / r, &classes)))
}

/// What `gcd(σ) = d` forces: every edge uses a multiple of `d` rows per class, so each class
/// keeps at least `q mod d` vertices unmatched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdBound {
    pub d: usize,
    pub residue: usize,
    pub unmatched_lower: usize,
    pub nu_upper: usize,
}

pub fn gcd_unmatched_lower_bound(spec: &HypergraphSpec) -> GcdBound {
    let d = spec.sigma().gcd();
    let residue = spec.q() % d;
    GcdBound {
        d,
        residue,
        unmatched_lower: residue * spec.n(),
        nu_upper: spec.n() * (spec.q() - residue) / spec.r(),
    }
}

/// `H(n, r/d, m | σ/d)` for `q = m·d + t`, dropping the top `t` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub contracted: HypergraphSpec,
    pub factor: usize,
    pub dropped_rows: usize,
}

pub fn contract(spec: &HypergraphSpec) -> Result<Contraction> {
    let d = spec.sigma().gcd();
    if d < 2 {
        return Err(Error::regime(format!("gcd of {} is 1; nothing to contract", spec.sigma())));
    }
    let m = spec.q() / d;
    if m == 0 {
        return Err(Error::regime(format!("q = {} is smaller than gcd = {d}", spec.q())));
    }
    let contracted = HypergraphSpec::new(spec.n(), m, spec.sigma().divided_by(d)?)?;
    Ok(Contraction { contracted, factor: d, dropped_rows: spec.q() % d })
}

/// Lifts a matching of the contracted hypergraph back to `spec`.
///
/// Contracted row `j` becomes rows `t + (j-1)d + 1 ..= t + jd`; the top `t` rows stay unmatched.
pub fn expand(spec: &HypergraphSpec, contracted_matching: &Matching) -> Result<Matching> {
    let Contraction { contracted, factor, dropped_rows } = contract(spec)?;
    let report = verify_matching(&contracted, contracted_matching);
    if !report.is_valid() {
        return Err(Error::validation(format!(
            "matching is not valid for the contracted hypergraph {contracted}: {:?}",
            report.violations
        )));
    }
    let edges = contracted_matching
        .edges
        .iter()
        .map(|e| {
            Edge::new(
                e.parts()
                    .iter()
                    .map(|p| {
                        let rows = p
                            .rows
                            .iter()
                            .flat_map(|&j| dropped_rows + (j - 1) * factor + 1..=dropped_rows + j * factor)
                            .collect();
                        EdgePart::new(p.class, rows)
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(Matching::from_edges(spec, edges))
}
