//! Brute-force reference computations used to check the fast paths.
//!
//! Nothing here calls into `independence` or `matching`; every answer is found by exhaustive
//! search over profiles, subsets, edges or colourings. Searches that would exceed their
//! [`OracleBudget`] stop with [`Error::BudgetExceeded`] rather than returning a partial answer.

mod colouring;
mod independence;
mod matching;

use std::time::{Duration, Instant};

pub use colouring::{bf_colouring_spectrum, ColouringSpectrum};
pub use independence::{bf_alpha_k, bf_alpha_k_subsets, bf_max_intersection};
pub use matching::bf_max_matching;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_edges: u64,
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 36, max_edges: 250_000, time_limit: Duration::from_secs(60) }
    }
}

impl OracleBudget {
    pub fn new(max_vertices: usize, max_edges: u64, time_limit: Duration) -> Result<Self> {
        if max_vertices == 0 || max_edges == 0 || time_limit.is_zero() {
            return Err(Error::validation("oracle budget limits must be positive"));
        }
        Ok(OracleBudget { max_vertices, max_edges, time_limit })
    }

    /// Every limit multiplied by `factor`.
    pub fn scaled(self, factor: u32) -> Self {
        let factor = factor.max(1);
        OracleBudget {
            max_vertices: self.max_vertices.saturating_mul(factor as usize),
            max_edges: self.max_edges.saturating_mul(u64::from(factor)),
            time_limit: self.time_limit.saturating_mul(factor),
        }
    }

    fn check_vertices(&self, count: usize) -> Result<()> {
        if count > self.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{count} vertices exceeds the limit of {}",
                self.max_vertices
            )));
        }
        Ok(())
    }

    fn check_edges(&self, count: u64) -> Result<()> {
        if count > self.max_edges {
            return Err(Error::BudgetExceeded(format!("{count} edges exceeds the limit of {}", self.max_edges)));
        }
        Ok(())
    }

    fn clock(&self) -> Clock {
        Clock { deadline: Instant::now() + self.time_limit, ticks: 0 }
    }
}

/// Cheap periodic deadline checks for the search loops.
struct Clock {
    deadline: Instant,
    ticks: u32,
}

impl Clock {
    fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 0 && Instant::now() > self.deadline {
            return Err(Error::BudgetExceeded("time limit reached".into()));
        }
        Ok(())
    }
}

/// Edges as bitmasks over vertex indices `(class - 1) * q + (row - 1)`.
fn edge_masks(spec: &crate::hypergraph::HypergraphSpec, budget: &OracleBudget) -> Result<Vec<u64>> {
    if spec.vertex_count() > 64 {
        return Err(Error::BudgetExceeded("bitmask oracles handle at most 64 vertices".into()));
    }
    budget.check_edges(crate::hypergraph::count_edges(spec)?)?;
    let q = spec.q();
    Ok(crate::hypergraph::enumerate_edges(spec)
        .map(|e| e.vertices().fold(0u64, |m, v| m | 1 << ((v.class - 1) * q + v.row - 1)))
        .collect())
}
