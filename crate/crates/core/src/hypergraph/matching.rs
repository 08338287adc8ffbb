use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{is_edge, Edge, HypergraphSpec, Vertex, VertexSet};

/// Pairwise disjoint edges plus the vertices they leave uncovered.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
    pub unmatched: VertexSet,
}

impl Matching {
    /// Fills `unmatched` with every vertex of `spec` the edges miss.
    pub fn from_edges(spec: &HypergraphSpec, edges: Vec<Edge>) -> Self {
        let mut covered = vec![false; spec.vertex_count()];
        for v in edges.iter().flat_map(Edge::vertices) {
            if v.in_range(spec) {
                covered[(v.class - 1) * spec.q() + v.row - 1] = true;
            }
        }
        let unmatched = VertexSet::all(spec)
            .iter()
            .filter(|v| !covered[(v.class - 1) * spec.q() + v.row - 1])
            .copied()
            .collect();
        Matching { edges, unmatched }
    }

    pub fn empty(spec: &HypergraphSpec) -> Self {
        Matching { edges: Vec::new(), unmatched: VertexSet::all(spec) }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.unmatched.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex outside the grid, named by an edge or by the unmatched set.
    OutOfRange { class: usize, row: usize },
    /// A vertex used by more than one edge.
    Overlap { class: usize, row: usize, edges: Vec<usize> },
    /// An edge whose shape is not σ.
    NonEdge { edge: usize },
    /// A vertex listed as unmatched although an edge covers it.
    CoveredButUnmatched { class: usize, row: usize },
    /// A vertex neither covered nor listed as unmatched.
    Missing { class: usize, row: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `m` against the definition of a matching of `spec`; never fails, only reports.
pub fn verify_matching(spec: &HypergraphSpec, m: &Matching) -> VerificationReport {
    let mut violations = Vec::new();
    let mut users: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();

    for (i, edge) in m.edges.iter().enumerate() {
        match is_edge(spec, edge) {
            Ok(true) => {}
            Ok(false) => violations.push(Violation::NonEdge { edge: i }),
            Err(_) => {
                for v in edge.vertices().filter(|v| !v.in_range(spec)) {
                    violations.push(Violation::OutOfRange { class: v.class, row: v.row });
                }
                violations.push(Violation::NonEdge { edge: i });
            }
        }
        let mut vertices: Vec<Vertex> = edge.vertices().filter(|v| v.in_range(spec)).collect();
        vertices.sort_unstable();
        vertices.dedup();
        for v in vertices {
            users.entry(v).or_default().push(i);
        }
    }
    for (v, edges) in &users {
        if edges.len() > 1 {
            violations.push(Violation::Overlap { class: v.class, row: v.row, edges: edges.clone() });
        }
    }
    for v in m.unmatched.iter() {
        if !v.in_range(spec) {
            violations.push(Violation::OutOfRange { class: v.class, row: v.row });
        } else if users.contains_key(v) {
            violations.push(Violation::CoveredButUnmatched { class: v.class, row: v.row });
        }
    }
    for v in VertexSet::all(spec).iter() {
        if !users.contains_key(v) && !m.unmatched.contains(v) {
            violations.push(Violation::Missing { class: v.class, row: v.row });
        }
    }
    VerificationReport { violations }
}
