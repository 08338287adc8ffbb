use std::collections::HashMap;

use super::{edge_masks, Clock, OracleBudget};
use crate::error::Result;
use crate::hypergraph::HypergraphSpec;

/// Exact `ν(H)` by exhaustive search over the edge list.
///
/// The lowest free vertex is either left unmatched or covered by one of its edges; results
/// are memoized per free-vertex set and a branch stops once it reaches `⌊free / r⌋`.
pub fn bf_max_matching(spec: &HypergraphSpec, budget: &OracleBudget) -> Result<usize> {
    budget.check_vertices(spec.vertex_count())?;
    if !spec.has_edges() {
        return Ok(0);
    }
    let edges = edge_masks(spec, budget)?;
    let vertices = spec.vertex_count();
    let mut by_lowest: Vec<Vec<u64>> = vec![Vec::new(); vertices];
    for &e in &edges {
        for v in 0..vertices {
            if e >> v & 1 == 1 {
                by_lowest[v].push(e);
            }
        }
    }
    let full = if vertices == 64 { u64::MAX } else { (1u64 << vertices) - 1 };
    let mut search = Search { by_vertex: by_lowest, r: spec.r() as u32, memo: HashMap::new(), clock: budget.clock() };
    search.best(full)
}

struct Search {
    by_vertex: Vec<Vec<u64>>,
    r: u32,
    memo: HashMap<u64, usize>,
    clock: Clock,
}

impl Search {
    fn best(&mut self, free: u64) -> Result<usize> {
        let ceiling = (free.count_ones() / self.r) as usize;
        if ceiling == 0 {
            return Ok(0);
        }
        if let Some(&known) = self.memo.get(&free) {
            return Ok(known);
        }
        self.clock.tick()?;
        let v = free.trailing_zeros() as usize;
        let mut best = self.best(free & !(1 << v))?;
        let mut i = 0;
        while best < ceiling && i < self.by_vertex[v].len() {
            let e = self.by_vertex[v][i];
            i += 1;
            if e & !free == 0 {
                best = best.max(1 + self.best(free & !e)?);
            }
        }
        self.memo.insert(free, best);
        Ok(best)
    }
}
