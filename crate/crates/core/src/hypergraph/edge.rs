use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{HypergraphSpec, Vertex};
use crate::error::{Error, Result};
use crate::numtheory::binomial;

/// The rows an edge takes from one class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgePart {
    pub class: usize,
    pub rows: Vec<usize>,
}

impl EdgePart {
    pub fn new(class: usize, mut rows: Vec<usize>) -> Self {
        rows.sort_unstable();
        EdgePart { class, rows }
    }

    /// `len` consecutive rows starting at `first`.
    pub fn block(class: usize, first: usize, len: usize) -> Self {
        EdgePart { class, rows: (first..first + len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rows.iter().map(move |&row| Vertex::new(self.class, row))
    }
}

/// A candidate edge: one part per class it touches, kept sorted by class index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<EdgePart>", into = "Vec<EdgePart>")]
pub struct Edge {
    parts: Vec<EdgePart>,
}

impl Edge {
    pub fn new(mut parts: Vec<EdgePart>) -> Self {
        for part in &mut parts {
            part.rows.sort_unstable();
        }
        parts.sort_by_key(|p| p.class);
        Edge { parts }
    }

    pub fn parts(&self) -> &[EdgePart] {
        &self.parts
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.parts.iter().flat_map(EdgePart::vertices)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(EdgePart::size).sum()
    }
}

impl From<Vec<EdgePart>> for Edge {
    fn from(parts: Vec<EdgePart>) -> Self {
        Edge::new(parts)
    }
}

impl From<Edge> for Vec<EdgePart> {
    fn from(edge: Edge) -> Self {
        edge.parts
    }
}

/// Whether `candidate` is an edge of `spec`: its parts sit in distinct classes and
/// their sizes form exactly the partition σ.
///
/// Fails only when the candidate names a vertex outside the grid.
pub fn is_edge(spec: &HypergraphSpec, candidate: &Edge) -> Result<bool> {
    for part in candidate.parts() {
        if let Some(v) = part.vertices().find(|v| !v.in_range(spec)) {
            return Err(Error::validation(format!(
                "vertex (class {}, row {}) is outside {spec}",
                v.class, v.row
            )));
        }
    }
    let classes_distinct = candidate.parts().iter().map(|p| p.class).all_unique();
    let rows_distinct = candidate.parts().iter().all(|p| p.rows.iter().all_unique());
    if !classes_distinct || !rows_distinct {
        return Ok(false);
    }
    let mut sizes: Vec<usize> = candidate.parts().iter().map(EdgePart::size).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes == spec.sigma().parts())
}

/// Distinct orderings of `values`, in lexicographic order.
fn distinct_permutations(values: &[usize]) -> Vec<Vec<usize>> {
    let mut current = values.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Every edge of `spec`, once each.
///
/// Order: chosen class sets lexicographically, then the lexicographic arrangement of part
/// sizes over those classes, then row sets.
pub fn enumerate_edges(spec: &HypergraphSpec) -> impl Iterator<Item = Edge> {
    let (n, q) = (spec.n(), spec.q());
    let s = spec.s();
    let arrangements =
        if spec.has_edges() { distinct_permutations(spec.sigma().parts()) } else { Vec::new() };
    let class_sets = if arrangements.is_empty() {
        None
    } else {
        Some((1..=n).combinations(s))
    };
    class_sets.into_iter().flatten().flat_map(move |classes| {
        arrangements.clone().into_iter().flat_map(move |sizes| {
            let classes = classes.clone();
            sizes
                .iter()
                .map(|&a| (1..=q).combinations(a))
                .multi_cartesian_product()
                .map(move |row_sets| {
                    Edge::new(
                        classes
                            .iter()
                            .zip(row_sets)
                            .map(|(&class, rows)| EdgePart { class, rows })
                            .collect(),
                    )
                })
        })
    })
}

/// `|E(H)|` without enumeration.
pub fn count_edges(spec: &HypergraphSpec) -> Result<u64> {
    if !spec.has_edges() {
        return Ok(0);
    }
    let overflow = || Error::Overflow("edge count");
    let mut remaining = spec.n() as u64;
    let mut total: u64 = 1;
    for (size, group) in &spec.sigma().parts().iter().chunk_by(|&&a| a) {
        let multiplicity = group.count() as u64;
        let classes = binomial(remaining, multiplicity).ok_or_else(overflow)?;
        let rows = binomial(spec.q() as u64, size as u64).ok_or_else(overflow)?;
        let rows = (0..multiplicity).try_fold(1u64, |acc, _| acc.checked_mul(rows)).ok_or_else(overflow)?;
        total = total
            .checked_mul(classes)
            .and_then(|t| t.checked_mul(rows))
            .ok_or_else(overflow)?;
        remaining -= multiplicity;
    }
    Ok(total)
}
