use crate::hypergraph::{Edge, EdgePart, HypergraphSpec, Matching};

use super::MatchingReport;

/// Repeatedly places the parts of σ, largest first, into the classes with the most free
/// vertices (ties to the lower class), taking the lowest free rows. Stops once no edge fits.
pub fn greedy_matching(spec: &HypergraphSpec) -> MatchingReport {
    let parts = spec.sigma().parts();
    let (n, q) = (spec.n(), spec.q());
    // rows next_row[c]..=q of class c are free
    let mut next_row = vec![1usize; n + 1];
    let mut order: Vec<usize> = (1..=n).collect();
    let mut edges = Vec::new();
    if n >= parts.len() {
        loop {
            order.sort_by_key(|&c| (next_row[c], c));
            let fits = parts.iter().zip(&order).all(|(&a, &c)| q + 1 - next_row[c] >= a);
            if !fits {
                break;
            }
            let edge: Vec<EdgePart> = parts
                .iter()
                .zip(&order)
                .map(|(&a, &c)| {
                    let part = EdgePart::block(c, next_row[c], a);
                    next_row[c] += a;
                    part
                })
                .collect();
            edges.push(Edge::new(edge));
        }
    }
    MatchingReport::new(Matching::from_edges(spec, edges), "greedy")
}
