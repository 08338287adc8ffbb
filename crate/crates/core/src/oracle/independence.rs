use itertools::Itertools;

use super::{edge_masks, OracleBudget};
use crate::error::{Error, Result};
use crate::hypergraph::{enumerate_edges, HypergraphSpec, VertexSet};

/// Weakly decreasing profiles of length `n` with entries in `0..=q`, visited recursively.
fn for_each_profile(
    n: usize,
    cap: usize,
    prefix: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if prefix.len() == n {
        return visit(prefix);
    }
    for v in 0..=cap {
        prefix.push(v);
        for_each_profile(n, v, prefix, visit)?;
        prefix.pop();
    }
    Ok(())
}

/// `α_k(H)` by trying every class placement of σ's parts against every monotone profile.
///
/// Edges are symmetric under permuting classes and rows within a class, so the largest
/// k-independent set can be taken to be the top `b_i` rows of class `i` with `b` decreasing.
pub fn bf_alpha_k(spec: &HypergraphSpec, k: usize, budget: &OracleBudget) -> Result<usize> {
    if k == 0 || k >= spec.r() {
        return Err(Error::validation(format!("k must lie in [1, r-1], got {k}")));
    }
    budget.check_vertices(spec.vertex_count())?;
    if !spec.has_edges() {
        return Ok(spec.vertex_count());
    }
    let parts = spec.sigma().parts();
    let placements: Vec<Vec<usize>> = (0..spec.n()).permutations(parts.len()).collect();
    budget.check_edges(placements.len() as u64)?;

    let mut clock = budget.clock();
    let mut best = 0;
    for_each_profile(spec.n(), spec.q(), &mut Vec::new(), &mut |b| {
        clock.tick()?;
        let size: usize = b.iter().sum();
        if size <= best {
            return Ok(());
        }
        let worst = placements
            .iter()
            .map(|classes| parts.iter().zip(classes).map(|(&a, &c)| a.min(b[c])).sum::<usize>())
            .max()
            .unwrap_or(0);
        if worst <= k {
            best = size;
        }
        Ok(())
    })?;
    Ok(best)
}

/// `α_k(H)` over raw vertex subsets; only sensible for tiny grids.
pub fn bf_alpha_k_subsets(spec: &HypergraphSpec, k: usize, budget: &OracleBudget) -> Result<usize> {
    if k == 0 || k >= spec.r() {
        return Err(Error::validation(format!("k must lie in [1, r-1], got {k}")));
    }
    let vertices = spec.vertex_count();
    budget.check_vertices(vertices)?;
    if vertices > 24 {
        return Err(Error::BudgetExceeded(format!("2^{vertices} subsets is too many")));
    }
    let edges = edge_masks(spec, budget)?;
    let mut clock = budget.clock();
    let mut best = 0;
    for subset in 0u64..(1 << vertices) {
        clock.tick()?;
        let size = subset.count_ones() as usize;
        if size > best && edges.iter().all(|e| (e & subset).count_ones() as usize <= k) {
            best = size;
        }
    }
    Ok(best)
}

/// `max |E ∩ B|` over the whole edge stream.
pub fn bf_max_intersection(spec: &HypergraphSpec, b_set: &VertexSet, budget: &OracleBudget) -> Result<usize> {
    b_set.check_in_range(spec)?;
    budget.check_edges(crate::hypergraph::count_edges(spec)?)?;
    let mut clock = budget.clock();
    let mut best = 0;
    for edge in enumerate_edges(spec) {
        clock.tick()?;
        best = best.max(edge.vertices().filter(|v| b_set.contains(v)).count());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::make_spec;

    #[test]
    fn worked_example_alpha() {
        let spec = make_spec(5, 5, &[4, 3, 2]).unwrap();
        assert_eq!(bf_alpha_k(&spec, 8, &OracleBudget::default()).unwrap(), 15);
    }

    #[test]
    fn small_values() {
        let budget = OracleBudget::default();
        let spec = make_spec(3, 3, &[2, 1]).unwrap();
        assert_eq!(bf_alpha_k(&spec, 1, &budget).unwrap(), 1);
        assert_eq!(bf_alpha_k(&spec, 2, &budget).unwrap(), 3);
        assert_eq!(bf_alpha_k_subsets(&spec, 1, &budget).unwrap(), 1);
        assert_eq!(bf_alpha_k_subsets(&spec, 2, &budget).unwrap(), 3);
        let spec = make_spec(2, 2, &[2]).unwrap();
        assert_eq!(bf_alpha_k_subsets(&spec, 1, &budget).unwrap(), 2);
    }

    #[test]
    fn degenerate_spec() {
        let spec = make_spec(2, 3, &[4, 1]).unwrap();
        assert_eq!(bf_alpha_k(&spec, 2, &OracleBudget::default()).unwrap(), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let spec = make_spec(10, 10, &[2, 1]).unwrap();
        let tight = OracleBudget::new(20, 1000, std::time::Duration::from_secs(1)).unwrap();
        assert!(matches!(bf_alpha_k(&spec, 1, &tight), Err(Error::BudgetExceeded(_))));
        assert!(matches!(bf_alpha_k_subsets(&spec, 1, &OracleBudget::default()), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn intersection_extremes() {
        let budget = OracleBudget::default();
        let spec = make_spec(3, 2, &[2, 1]).unwrap();
        assert_eq!(bf_max_intersection(&spec, &VertexSet::new(), &budget).unwrap(), 0);
        assert_eq!(bf_max_intersection(&spec, &VertexSet::all(&spec), &budget).unwrap(), 3);
    }
}
