//! Instances shared by the benchmarks.

use sigma_hyper::{make_spec, HypergraphSpec};

/// Specs with many parts, where the feasible-sequence search dominates.
pub fn independence_specs() -> Vec<(&'static str, HypergraphSpec)> {
    vec![
        ("r9-s3", make_spec(40, 30, &[4, 3, 2]).unwrap()),
        ("r21-s6", make_spec(60, 40, &[6, 5, 4, 3, 2, 1]).unwrap()),
        ("r39-s7", make_spec(80, 60, &[12, 9, 7, 5, 3, 2, 1]).unwrap()),
    ]
}

/// Large instances covering each matching construction.
pub fn matching_specs() -> Vec<(&'static str, HypergraphSpec)> {
    vec![
        ("diagonal", make_spec(200, 900, &[4, 3, 2]).unwrap()),
        ("rectangular", make_spec(50, 301, &[3, 3]).unwrap()),
        ("r-divides-n", make_spec(90, 301, &[3, 2, 2, 1, 1]).unwrap()),
        ("dls-exchange", make_spec(30, 1201, &[4, 3, 2]).unwrap()),
        ("greedy", make_spec(120, 1000, &[4, 3, 2]).unwrap()),
    ]
}
