use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::HypergraphSpec;

use super::divisibility::{contract, diagonal_perfect_matching, expand, gcd_unmatched_lower_bound};
use super::greedy::greedy_matching;
use super::rectangular::rectangular_maximum_matching;
use super::rgood::r_good_maximum_matching;
use super::{nu_upper_bound, MatchOptions, MatchingReport, CERTIFIED_BOUND};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    #[default]
    Auto,
    Diagonal,
    Rectangular,
    RGood,
    Greedy,
}

impl Strategy {
    /// Runs one strategy. `Auto` never fails; the others fail outside their regime.
    pub fn run(self, spec: &HypergraphSpec, options: MatchOptions) -> Result<MatchingReport> {
        let report = match self {
            Strategy::Auto => return Ok(best_matching(spec, options)),
            Strategy::Diagonal => diagonal(spec)?,
            Strategy::Rectangular => rectangular_maximum_matching(spec, options)?,
            Strategy::RGood => r_good_maximum_matching(spec, options)?,
            Strategy::Greedy => greedy_matching(spec),
        };
        Ok(with_bounds(spec, report))
    }
}

fn diagonal(spec: &HypergraphSpec) -> Result<MatchingReport> {
    Ok(MatchingReport::new(diagonal_perfect_matching(spec)?, "diagonal").certify(CERTIFIED_BOUND, 0))
}

fn contracted(spec: &HypergraphSpec, options: MatchOptions) -> Result<MatchingReport> {
    let c = contract(spec)?;
    let inner = best_matching(&c.contracted, options);
    let matching = expand(spec, &inner.matching)?;
    let mut report = MatchingReport::new(matching, format!("contract(d={})/{}", c.factor, inner.strategy));
    report.certificates = inner
        .certificates
        .into_iter()
        .filter(|cert| cert.name != "upper_bound")
        .collect();
    Ok(report)
}

fn with_bounds(spec: &HypergraphSpec, mut report: MatchingReport) -> MatchingReport {
    report.certificates.retain(|c| c.name != "upper_bound" && c.name != "gcd_upper_bound");
    report.push_certificate("upper_bound", nu_upper_bound(spec));
    let gcd = gcd_unmatched_lower_bound(spec);
    if gcd.d >= 2 {
        report.push_certificate("gcd_upper_bound", gcd.nu_upper);
    }
    report
}

/// Largest matching among the diagonal, rectangular, r-good, contraction and greedy
/// strategies; earlier strategies win ties.
pub fn best_matching(spec: &HypergraphSpec, options: MatchOptions) -> MatchingReport {
    let attempts: [&dyn Fn() -> Result<MatchingReport>; 4] = [
        &|| diagonal(spec),
        &|| rectangular_maximum_matching(spec, options),
        &|| r_good_maximum_matching(spec, options),
        &|| contracted(spec, options),
    ];
    let mut best = greedy_matching(spec);
    let mut best_rank = attempts.len();
    for (rank, attempt) in attempts.iter().enumerate() {
        match attempt() {
            Ok(report) if report.nu > best.nu || (report.nu == best.nu && rank < best_rank) => {
                best = report;
                best_rank = rank;
            }
            Ok(_) | Err(Error::Regime(_) | Error::NoSuchDesign(_) | Error::NoRepresentation { .. }) => {}
            Err(e) => debug_assert!(false, "unexpected construction failure on {spec}: {e}"),
        }
    }
    with_bounds(spec, best)
}
