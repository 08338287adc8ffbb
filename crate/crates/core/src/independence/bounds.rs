use serde::{Deserialize, Serialize};

use super::formula::{alpha, alpha_k};
use crate::error::{Error, Result};
use crate::hypergraph::HypergraphSpec;

/// Bounds tying `(α, β)`-colourings to independence numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringBounds {
    /// `α_β(H)`, an upper bound on the number of colours.
    pub alpha_beta_ind: usize,
    /// `α(H)`.
    pub alpha_ind: usize,
    /// `⌈(α-1)|V| / α(H)⌉`, a lower bound on the number of colours.
    pub chi_lower: usize,
    /// False when no `(α, β)`-colouring can exist.
    pub feasible: bool,
}

pub fn colouring_bounds(spec: &HypergraphSpec, alpha_param: usize, beta_param: usize) -> Result<ColouringBounds> {
    let r = spec.r();
    if !(1 <= alpha_param && alpha_param <= beta_param && beta_param <= r) {
        return Err(Error::validation(format!(
            "need 1 <= alpha <= beta <= r = {r}, got alpha = {alpha_param}, beta = {beta_param}"
        )));
    }
    let vertices = spec.vertex_count();
    let alpha_beta_ind = if beta_param < r { alpha_k(spec, beta_param)? } else { vertices };
    let alpha_ind = alpha(spec);
    if !spec.has_edges() || alpha_param == 1 {
        return Ok(ColouringBounds { alpha_beta_ind, alpha_ind, chi_lower: 1, feasible: true });
    }
    let weight = (alpha_param - 1) * vertices;
    Ok(ColouringBounds {
        alpha_beta_ind,
        alpha_ind,
        chi_lower: weight.div_ceil(alpha_ind),
        feasible: weight <= alpha_ind * alpha_beta_ind,
    })
}
