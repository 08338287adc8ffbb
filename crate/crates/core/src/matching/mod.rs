//! Matching constructions: diagonal strips, gcd contraction, rectangular partitions,
//! r-good splits with packings and diagonal-Latin-square exchanges, plus a dispatcher.

mod best;
mod canonical;
mod divisibility;
mod dls;
mod greedy;
mod rectangular;
mod rgood;

use serde::{Deserialize, Serialize};

pub use best::{best_matching, Strategy};
pub use canonical::canonicalize;
pub use divisibility::{contract, diagonal_perfect_matching, expand, gcd_unmatched_lower_bound, Contraction, GcdBound};
pub use dls::{dls_matching, generate_dls, DiagonalLatinSquare, DlsFragment};
pub use greedy::greedy_matching;
pub use rectangular::{all_ones_maximum_matching, rectangular_maximum_matching};
pub use rgood::{find_r_good_split, packing_matching, r_good_matching_in_regime, r_good_maximum_matching, RGoodSplit, Regime};

use crate::hypergraph::{HypergraphSpec, Matching};

/// Label appended to strategies run outside their proven parameter range.
pub const UNPROVEN: &str = "unproven regime";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatchOptions {
    /// Attempt constructions even when the parameters miss their proven thresholds.
    pub permissive: bool,
}

impl MatchOptions {
    pub fn permissive() -> Self {
        MatchOptions { permissive: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub value: u64,
}

/// A constructed matching with the bookkeeping that justifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingReport {
    #[serde(skip)]
    pub matching: Matching,
    pub nu: usize,
    pub unmatched_count: usize,
    pub strategy: String,
    pub certificates: Vec<Certificate>,
}

impl MatchingReport {
    pub fn new(matching: Matching, strategy: impl Into<String>) -> Self {
        MatchingReport {
            nu: matching.edges.len(),
            unmatched_count: matching.unmatched.len(),
            matching,
            strategy: strategy.into(),
            certificates: Vec::new(),
        }
    }

    pub fn certify(mut self, name: &str, value: usize) -> Self {
        self.push_certificate(name, value);
        self
    }

    pub fn push_certificate(&mut self, name: &str, value: usize) {
        self.certificates.push(Certificate { name: name.to_string(), value: value as u64 });
    }

    pub fn certificate(&self, name: &str) -> Option<u64> {
        self.certificates.iter().find(|c| c.name == name).map(|c| c.value)
    }

    pub fn is_proven(&self) -> bool {
        self.certificate(UNPROVEN_KEY).is_none()
    }

    pub(crate) fn mark_unproven(mut self) -> Self {
        self.certificates.retain(|c| c.name != CERTIFIED_BOUND);
        self.strategy = format!("{} [{UNPROVEN}]", self.strategy);
        self.certify(UNPROVEN_KEY, 1)
    }
}

const UNPROVEN_KEY: &str = "unproven_regime";
pub(crate) const CERTIFIED_BOUND: &str = "certified_unmatched_bound";

pub(crate) fn nu_upper_bound(spec: &HypergraphSpec) -> usize {
    spec.vertex_count() / spec.r()
}
