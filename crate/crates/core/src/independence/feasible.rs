use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Sigma;

/// A maximal `(q, k, σ)`-feasible class profile.
///
/// Only the first `s` entries are stored; every class past the `s`-th repeats `b_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeasibleSequence {
    pub b: Vec<usize>,
    pub k: usize,
    /// First 1-based index with `b_t < a_t`.
    pub t: usize,
}

impl FeasibleSequence {
    /// Full-length profile over `n >= s` classes.
    pub fn expanded(&self, n: usize) -> Vec<usize> {
        let tail = *self.b.last().expect("feasible sequences are non-empty");
        let mut full = self.b.clone();
        full.resize(n.max(self.b.len()), tail);
        full
    }

    /// Size of the vertex set this profile describes on `n` classes.
    pub fn size(&self, n: usize) -> usize {
        self.expanded(n).iter().sum()
    }

    pub fn intersection(&self, sigma: &Sigma) -> usize {
        sigma.parts().iter().zip(&self.b).map(|(&a, &b)| a.min(b)).sum()
    }

    fn dominates(&self, other: &FeasibleSequence) -> bool {
        self.b != other.b && self.b.iter().zip(&other.b).all(|(x, y)| x >= y)
    }
}

/// All dominance-maximal `(q, k, σ)`-feasible sequences, lexicographically descending.
///
/// A maximal sequence has `q` in every position before `t`; after that the entries are
/// bounded by `a_t - 1`, so the search space depends on σ alone.
pub fn enumerate_maximal_feasible(q: usize, k: usize, sigma: &Sigma) -> Result<Vec<FeasibleSequence>> {
    let r = sigma.r();
    if k == 0 || k >= r {
        return Err(Error::validation(format!("k must lie in [1, {}], got {k}", r.saturating_sub(1))));
    }
    if q < sigma.largest() {
        return Err(Error::validation(format!("q = {q} is smaller than the largest part {}", sigma.largest())));
    }
    let parts = sigma.parts();
    let s = parts.len();

    let mut candidates = Vec::new();
    let mut prefix_sum = 0;
    for t in 1..=s {
        if prefix_sum > k {
            break;
        }
        let mut b = vec![q; t - 1];
        extend_suffix(parts, t - 1, parts[t - 1] - 1, k - prefix_sum, &mut b, &mut |b| {
            candidates.push(FeasibleSequence { b: b.to_vec(), k, t });
        });
        prefix_sum += parts[t - 1];
    }

    let mut maximal: Vec<FeasibleSequence> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|other| other.dominates(c)))
        .cloned()
        .collect();
    maximal.sort_by(|x, y| y.b.cmp(&x.b));
    maximal.dedup();
    Ok(maximal)
}

/// Fills positions `idx..s` with weakly decreasing values `<= cap` whose
/// `min(a_i, b_i)` contributions total exactly `need`.
fn extend_suffix(
    parts: &[usize],
    idx: usize,
    cap: usize,
    need: usize,
    b: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if idx == parts.len() {
        if need == 0 {
            emit(b);
        }
        return;
    }
    // remaining positions can contribute at most this much
    let room: usize = parts[idx..].iter().map(|&a| a.min(cap)).sum();
    if room < need {
        return;
    }
    for v in (0..=cap).rev() {
        let gain = parts[idx].min(v);
        if gain > need {
            continue;
        }
        b.push(v);
        extend_suffix(parts, idx + 1, v, need - gain, b, emit);
        b.pop();
    }
}
