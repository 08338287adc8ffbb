use crate::error::{Error, Result};
use crate::hypergraph::{verify_matching, Edge, EdgePart, HypergraphSpec, Matching, Vertex, VertexSet};

/// Permutes rows inside each class so unmatched vertices fill the top rows and every part
/// of every edge occupies consecutive rows. Edge count and class usage are unchanged.
pub fn canonicalize(spec: &HypergraphSpec, m: &Matching) -> Result<Matching> {
    let report = verify_matching(spec, m);
    if !report.is_valid() {
        return Err(Error::validation(format!("not a valid matching: {:?}", report.violations)));
    }
    // new_row[class][old_row]
    let mut new_row = vec![vec![0usize; spec.q() + 1]; spec.n() + 1];
    let mut next = vec![1usize; spec.n() + 1];
    for v in m.unmatched.iter() {
        new_row[v.class][v.row] = next[v.class];
        next[v.class] += 1;
    }
    for edge in &m.edges {
        for part in edge.parts() {
            for &row in &part.rows {
                new_row[part.class][row] = next[part.class];
                next[part.class] += 1;
            }
        }
    }
    let edges = m
        .edges
        .iter()
        .map(|e| {
            Edge::new(
                e.parts()
                    .iter()
                    .map(|p| EdgePart::new(p.class, p.rows.iter().map(|&row| new_row[p.class][row]).collect()))
                    .collect(),
            )
        })
        .collect();
    let unmatched: VertexSet = m.unmatched.iter().map(|v| Vertex::new(v.class, new_row[v.class][v.row])).collect();
    Ok(Matching { edges, unmatched })
}
