use serde::{Deserialize, Serialize};

use super::feasible::{enumerate_maximal_feasible, FeasibleSequence};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgePart, HypergraphSpec, Vertex, VertexSet};

/// The edge meeting `b_set` in the most vertices, and that overlap.
///
/// Parts go largest-first into the classes holding the most of `b_set`; within a class the
/// part takes as many `b_set` rows as it can and pads with the lowest remaining rows.
pub fn max_intersection_edge(spec: &HypergraphSpec, b_set: &VertexSet) -> Result<(Edge, usize)> {
    if !spec.has_edges() {
        return Err(Error::NoEdges);
    }
    b_set.check_in_range(spec)?;
    let profile = b_set.profile(spec.n());
    let mut classes: Vec<usize> = (1..=spec.n()).collect();
    classes.sort_by(|x, y| profile[y - 1].cmp(&profile[x - 1]).then(x.cmp(y)));

    let mut parts = Vec::with_capacity(spec.s());
    let mut overlap = 0;
    for (&a, &class) in spec.sigma().parts().iter().zip(&classes) {
        let mut rows: Vec<usize> = b_set.rows_in(class).take(a).collect();
        let hits = rows.len();
        overlap += hits;
        let padding = (1..=spec.q()).filter(|&row| !b_set.contains(&Vertex::new(class, row)));
        rows.extend(padding.take(a - hits));
        parts.push(EdgePart::new(class, rows));
    }
    Ok((Edge::new(parts), overlap))
}

/// Whether every edge meets `b_set` in at most `k` vertices.
pub fn is_k_independent(spec: &HypergraphSpec, b_set: &VertexSet, k: usize) -> Result<bool> {
    spec.check_k(k)?;
    b_set.check_in_range(spec)?;
    if !spec.has_edges() {
        return Ok(true);
    }
    Ok(max_intersection_edge(spec, b_set)?.1 <= k)
}

/// `α_k(H)` together with a maximizing profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KIndependence {
    pub k: usize,
    pub value: usize,
    /// Full-length class profile of a largest k-independent set.
    pub profile: Vec<usize>,
    /// The maximal feasible sequence behind `profile`; absent when there are no edges.
    pub sequence: Option<FeasibleSequence>,
}

impl KIndependence {
    /// A concrete set realizing `value`: the top `profile[i]` rows of each class.
    pub fn witness(&self, spec: &HypergraphSpec) -> VertexSet {
        VertexSet::from_profile(spec, &self.profile).expect("profile entries never exceed q")
    }
}

pub fn alpha_k_detail(spec: &HypergraphSpec, k: usize) -> Result<KIndependence> {
    spec.check_k(k)?;
    if !spec.has_edges() {
        return Ok(KIndependence {
            k,
            value: spec.vertex_count(),
            profile: vec![spec.q(); spec.n()],
            sequence: None,
        });
    }
    let n = spec.n();
    let best = enumerate_maximal_feasible(spec.q(), k, spec.sigma())?
        .into_iter()
        .fold(None::<(usize, FeasibleSequence)>, |best, seq| {
            let size = seq.size(n);
            match best {
                Some((top, _)) if top >= size => best,
                _ => Some((size, seq)),
            }
        })
        .expect("a feasible sequence exists for every k in [1, r-1]");
    Ok(KIndependence { k, value: best.0, profile: best.1.expanded(n), sequence: Some(best.1) })
}

/// Largest `k`-independent set size, via maximal feasible sequences.
pub fn alpha_k(spec: &HypergraphSpec, k: usize) -> Result<usize> {
    alpha_k_detail(spec, k).map(|d| d.value)
}

/// `α(H)` from the closed form, with the maximizing 1-based `j` (absent without edges).
pub fn alpha_closed_form(spec: &HypergraphSpec) -> (usize, Option<usize>) {
    if !spec.has_edges() {
        return (spec.vertex_count(), None);
    }
    let (n, q) = (spec.n(), spec.q());
    spec.sigma()
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &a)| ((i * q + (a - 1) * (n - i)), i + 1))
        .fold((0, None), |(best, arg), (value, j)| if arg.is_none() || value > best { (value, Some(j)) } else { (best, arg) })
}

/// Independence number `α(H) = α_{r-1}(H)`.
pub fn alpha(spec: &HypergraphSpec) -> usize {
    alpha_closed_form(spec).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{enumerate_edges, make_spec};

    #[test]
    fn max_intersection_examples() {
        let spec = make_spec(3, 3, &[2, 1]).unwrap();
        let b = VertexSet::from_profile(&spec, &[3, 1, 0]).unwrap();
        let (edge, overlap) = max_intersection_edge(&spec, &b).unwrap();
        assert_eq!(overlap, 3);
        assert!(crate::hypergraph::is_edge(&spec, &edge).unwrap());

        let spec = make_spec(3, 9, &[4, 3, 2]).unwrap();
        let all = VertexSet::all(&spec);
        assert_eq!(max_intersection_edge(&spec, &all).unwrap().1, 9);
    }

    #[test]
    fn max_intersection_matches_exhaustive_scan() {
        let spec = make_spec(3, 2, &[2, 1]).unwrap();
        let b = VertexSet::from_profile(&spec, &[1, 1, 1]).unwrap();
        let (edge, overlap) = max_intersection_edge(&spec, &b).unwrap();
        let scan = enumerate_edges(&spec).map(|e| e.vertices().filter(|v| b.contains(v)).count()).max();
        assert_eq!(overlap, 2);
        assert_eq!(Some(overlap), scan);
        assert_eq!(edge.vertices().filter(|v| b.contains(v)).count(), overlap);
    }

    #[test]
    fn max_intersection_needs_edges() {
        let spec = make_spec(2, 5, &[4, 3, 2]).unwrap();
        assert_eq!(max_intersection_edge(&spec, &VertexSet::new()), Err(Error::NoEdges));
    }

    #[test]
    fn k_independence_examples() {
        let spec = make_spec(3, 2, &[2, 1]).unwrap();
        let b = VertexSet::from_profile(&spec, &[1, 1, 1]).unwrap();
        assert!(is_k_independent(&spec, &b, 2).unwrap());
        assert!(is_k_independent(&spec, &VertexSet::new(), 1).unwrap());
        let b = VertexSet::from_profile(&spec, &[2, 1, 1]).unwrap();
        assert!(!is_k_independent(&spec, &b, 2).unwrap());
        assert!(is_k_independent(&spec, &b, 3).is_err());
        assert!(is_k_independent(&spec, &b, 0).is_err());
    }

    #[test]
    fn alpha_k_worked_example() {
        let spec = make_spec(10, 5, &[4, 3, 2]).unwrap();
        assert_eq!(alpha_k(&spec, 7).unwrap(), 21);
        let spec = make_spec(4, 10, &[4, 3, 2]).unwrap();
        assert_eq!(alpha_k(&spec, 6).unwrap(), 13);
    }

    #[test]
    fn alpha_closed_form_examples() {
        assert_eq!(alpha_closed_form(&make_spec(10, 5, &[4, 3, 2]).unwrap()), (30, Some(1)));
        assert_eq!(alpha_closed_form(&make_spec(4, 20, &[4, 3, 2]).unwrap()), (42, Some(3)));
        assert_eq!(alpha(&make_spec(2, 2, &[2]).unwrap()), 2);
        assert_eq!(alpha_closed_form(&make_spec(2, 2, &[4]).unwrap()), (4, None));
    }

    #[test]
    fn degenerate_specs_are_fully_independent() {
        let spec = make_spec(2, 5, &[4, 3, 2]).unwrap();
        assert_eq!(alpha_k(&spec, 3).unwrap(), 10);
        assert!(alpha_k(&spec, 9).is_err());
    }

    #[test]
    fn witness_is_k_independent_and_tight() {
        for (n, q, parts) in [(5, 5, vec![4, 3, 2]), (4, 6, vec![3, 1]), (6, 3, vec![2, 2, 1])] {
            let spec = make_spec(n, q, &parts).unwrap();
            for k in 1..spec.r() {
                let detail = alpha_k_detail(&spec, k).unwrap();
                let w = detail.witness(&spec);
                assert_eq!(w.len(), detail.value);
                assert!(is_k_independent(&spec, &w, k).unwrap(), "{spec} k={k}");
            }
        }
    }
}
