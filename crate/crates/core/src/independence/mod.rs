//! k-independence numbers and the colouring bounds derived from them.

mod bounds;
mod feasible;
mod formula;

pub use bounds::{colouring_bounds, ColouringBounds};
pub use feasible::{enumerate_maximal_feasible, FeasibleSequence};
pub use formula::{
    alpha, alpha_closed_form, alpha_k, alpha_k_detail, is_k_independent, max_intersection_edge, KIndependence,
};
