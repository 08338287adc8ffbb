//! Elementary number theory shared by the constructions.

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_all(values: &[usize]) -> usize {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// `C(n, k)` with overflow detection.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Writes `target = x*u + y*v` with `x, y >= 0`, taking the largest possible `x`.
///
/// `u` and `v` must be coprime. Every `target >= (u-1)(v-1)` has a representation.
pub fn frobenius_decompose(target: u64, u: u64, v: u64) -> Result<(u64, u64)> {
    if u == 0 || v == 0 {
        return Err(Error::validation("coin values must be positive"));
    }
    if gcd(u as usize, v as usize) != 1 {
        return Err(Error::validation(format!("{u} and {v} are not coprime")));
    }
    let mut x = target / u;
    loop {
        let rest = target - x * u;
        if rest % v == 0 {
            return Ok((x, rest / v));
        }
        if x == 0 {
            return Err(Error::NoRepresentation { target, u, v });
        }
        x -= 1;
    }
}
