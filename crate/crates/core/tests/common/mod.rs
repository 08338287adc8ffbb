#![allow(dead_code)]

use sigma_hyper::{make_spec, HypergraphSpec};

/// Partitions of `r` with parts in decreasing order.
pub fn partitions(r: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            prefix.push(x);
            go(rest - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// Every spec with `r` in the range, `n <= max_n` and `q <= max_q` that has at least one edge.
pub fn small_specs(rs: std::ops::RangeInclusive<usize>, max_n: usize, max_q: usize) -> Vec<HypergraphSpec> {
    let mut out = Vec::new();
    for r in rs {
        for parts in partitions(r) {
            for n in parts.len()..=max_n {
                for q in parts[0]..=max_q {
                    out.push(make_spec(n, q, &parts).unwrap());
                }
            }
        }
    }
    out
}
