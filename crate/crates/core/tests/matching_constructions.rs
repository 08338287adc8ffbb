mod common;

use common::{partitions, small_specs};
use sigma_hyper::matching::{
    all_ones_maximum_matching, best_matching, canonicalize, contract, expand, find_r_good_split,
    gcd_unmatched_lower_bound, r_good_matching_in_regime, rectangular_maximum_matching, MatchOptions,
    MatchingReport, Regime,
};
use sigma_hyper::oracle::{bf_max_matching, OracleBudget};
use sigma_hyper::{make_spec, verify_matching, HypergraphSpec, Sigma};

fn assert_sound(spec: &HypergraphSpec, rep: &MatchingReport) {
    assert!(verify_matching(spec, &rep.matching).is_valid(), "{spec} via {}", rep.strategy);
    assert_eq!(rep.nu, rep.matching.len());
    assert_eq!(rep.unmatched_count, spec.vertex_count() - spec.r() * rep.nu);
    let gcd = gcd_unmatched_lower_bound(spec);
    assert!(rep.nu <= gcd.nu_upper, "{spec}: nu {} above {}", rep.nu, gcd.nu_upper);
    assert!(rep.unmatched_count >= gcd.unmatched_lower);
}

#[test]
fn best_matching_never_beats_the_oracle() {
    let budget = OracleBudget::default();
    for spec in small_specs(1..=4, 5, 4) {
        let rep = best_matching(&spec, MatchOptions::default());
        assert_sound(&spec, &rep);
        let nu = bf_max_matching(&spec, &budget).unwrap();
        assert!(rep.nu <= nu, "{spec}");
        let perfect_regime = spec.q() % spec.r() == 0
            || (spec.n() % spec.r() == 0
                && find_r_good_split(spec.sigma()).ok().flatten().is_some_and(|sp| {
                    spec.q() % sp.lcm == 0 || spec.q() >= (sp.lcm - 1) * (spec.r() - 1)
                }));
        if perfect_regime {
            assert_eq!(rep.nu * spec.r(), spec.vertex_count(), "{spec} via {}", rep.strategy);
        }
    }
}

#[test]
fn best_matching_is_sound_on_larger_grids() {
    for spec in small_specs(2..=7, 12, 30) {
        assert_sound(&spec, &best_matching(&spec, MatchOptions::default()));
    }
}

#[test]
fn all_ones_exact_on_grid() {
    for r in 2..=3 {
        for n in (r + 1) * (r + 1)..=(r + 1) * (r + 1) + 4 {
            for q in r..=r + 5 {
                let spec = make_spec(n, q, &vec![1; r]).unwrap();
                let rep = all_ones_maximum_matching(&spec, MatchOptions::default()).unwrap();
                assert_sound(&spec, &rep);
                assert_eq!(rep.unmatched_count, n * q % r, "{spec}");
            }
        }
    }
}

#[test]
fn rectangular_formula_on_scaled_grid() {
    for delta in 2..=3 {
        for s in 2..=3 {
            let r = s * delta;
            for n in (r + 1) * (r + 1)..=(r + 1) * (r + 1) + 4 {
                for q in r * delta..=r * delta + 5 {
                    let spec = make_spec(n, q, &vec![delta; s]).unwrap();
                    let rep = rectangular_maximum_matching(&spec, MatchOptions::default()).unwrap();
                    assert_sound(&spec, &rep);
                    assert_eq!(rep.nu, n * (q - q % delta) / r, "{spec}");
                    let m = q / delta;
                    assert_eq!(rep.unmatched_count, n * (q % delta) + delta * (n * m % s), "{spec}");
                }
            }
        }
    }
}

#[test]
fn contract_expand_preserves_size() {
    for spec in small_specs(2..=8, 8, 14) {
        if spec.sigma().gcd() < 2 || spec.q() < spec.sigma().gcd() {
            continue;
        }
        let c = contract(&spec).unwrap();
        assert_eq!(c.contracted.q() * c.factor + c.dropped_rows, spec.q());
        let inner = best_matching(&c.contracted, MatchOptions::default());
        let outer = expand(&spec, &inner.matching).unwrap();
        assert!(verify_matching(&spec, &outer).is_valid());
        assert_eq!(outer.len(), inner.nu, "{spec}");
    }
}

#[test]
fn canonical_form_of_constructions() {
    for spec in small_specs(2..=6, 8, 12) {
        let rep = best_matching(&spec, MatchOptions::default());
        let c = canonicalize(&spec, &rep.matching).unwrap();
        assert!(verify_matching(&spec, &c).is_valid());
        assert_eq!(c.len(), rep.nu);
        for edge in &c.edges {
            for part in edge.parts() {
                assert!(part.rows.windows(2).all(|w| w[1] == w[0] + 1), "{spec}");
            }
        }
        for class in 1..=spec.n() {
            let free: Vec<usize> = c.unmatched.rows_in(class).collect();
            assert_eq!(free, (1..=free.len()).collect::<Vec<_>>(), "{spec}");
        }
        if spec.sigma().gcd() >= 2 && spec.q() >= spec.sigma().gcd() {
            let again = expand(&spec, &contract_canonical(&spec, &c)).unwrap();
            assert_eq!(again.len(), c.len(), "{spec}");
        }
    }
}

/// Reads a canonical matching of `spec` back on the contracted grid: every part starts
/// `t + kd` rows below the top of its class.
fn contract_canonical(spec: &HypergraphSpec, m: &sigma_hyper::Matching) -> sigma_hyper::Matching {
    use sigma_hyper::{Edge, EdgePart};
    let c = contract(spec).unwrap();
    let (d, t) = (c.factor, c.dropped_rows);
    let edges = m
        .edges
        .iter()
        .map(|e| {
            Edge::new(
                e.parts()
                    .iter()
                    .map(|p| {
                        assert_eq!((p.rows[0] - 1 - t) % d, 0);
                        EdgePart::block(p.class, (p.rows[0] - 1 - t) / d + 1, p.rows.len() / d)
                    })
                    .collect(),
            )
        })
        .collect();
    sigma_hyper::Matching::from_edges(&c.contracted, edges)
}

#[test]
fn r_good_regimes_respect_their_bounds() {
    for r in 2..=7 {
        for parts in partitions(r).into_iter().filter(|p| p.len() >= 2) {
            let Some(split) = find_r_good_split(&Sigma::new(parts.clone()).unwrap()).unwrap() else {
                continue;
            };
            let l = split.lcm;
            let s = parts.len();
            for n in [s, s + 1, r, 2 * r, s + r, s + r + 1, 3 * r + 2] {
                for q in [l * (r - 1), l * (r - 1) + 1, l * (r - 1) + r - 1, l * (r * r - 1), l * (r * r - 1) + r - 1] {
                    let spec = make_spec(n, q, &parts).unwrap();
                    for regime in Regime::DISPATCH_ORDER {
                        let Ok(rep) = r_good_matching_in_regime(&spec, regime, MatchOptions::default()) else {
                            continue;
                        };
                        assert_sound(&spec, &rep);
                        let bound = match regime {
                            Regime::DivisibleRows | Regime::DivisibleClasses => 0,
                            Regime::Banded => l * (r - 1) * (r - 1),
                            Regime::Exchange => (r - 1) * (r - 1),
                        };
                        assert!(rep.unmatched_count <= bound, "{spec} {regime:?}: {}", rep.unmatched_count);
                    }
                }
            }
        }
    }
}

#[test]
fn permissive_results_are_always_valid() {
    for spec in small_specs(2..=6, 9, 14) {
        for regime in Regime::DISPATCH_ORDER {
            if let Ok(rep) = r_good_matching_in_regime(&spec, regime, MatchOptions::permissive()) {
                assert_sound(&spec, &rep);
            }
        }
        if let Ok(rep) = rectangular_maximum_matching(&spec, MatchOptions::permissive()) {
            assert_sound(&spec, &rep);
        }
    }
}
