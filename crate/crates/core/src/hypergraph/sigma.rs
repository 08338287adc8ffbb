use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::gcd_all;

/// A partition of `r`, stored with its parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Sigma {
    parts: Vec<usize>,
    r: usize,
    d: usize,
}

impl Sigma {
    /// Accepts the parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::validation("sigma needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::validation("sigma parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let r = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("sum of sigma parts"))?;
        let d = gcd_all(&parts);
        Ok(Sigma { parts, r, d })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `a_i` for a 1-based index.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.parts.len()
    }

    pub fn gcd(&self) -> usize {
        self.d
    }

    /// All parts equal.
    pub fn is_rectangular(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    /// Every part divided by `divisor`, which must divide each of them.
    pub fn divided_by(&self, divisor: usize) -> Result<Sigma> {
        if divisor == 0 || self.parts.iter().any(|p| p % divisor != 0) {
            return Err(Error::validation(format!("{divisor} does not divide every part of {self}")));
        }
        Sigma::new(self.parts.iter().map(|p| p / divisor).collect())
    }
}

impl TryFrom<Vec<usize>> for Sigma {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Sigma::new(parts)
    }
}

impl From<Sigma> for Vec<usize> {
    fn from(sigma: Sigma) -> Self {
        sigma.parts
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The σ-hypergraph `H(n, r, q | σ)`: `n` classes of `q` vertices each.
///
/// Vertices form a virtual `q × n` grid; classes and rows are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct HypergraphSpec {
    n: usize,
    q: usize,
    sigma: Sigma,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: usize,
    q: usize,
    sigma: Vec<usize>,
}

impl TryFrom<RawSpec> for HypergraphSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        make_spec(raw.n, raw.q, &raw.sigma)
    }
}

impl From<HypergraphSpec> for RawSpec {
    fn from(spec: HypergraphSpec) -> Self {
        RawSpec { n: spec.n, q: spec.q, sigma: spec.sigma.into() }
    }
}

pub fn make_spec(n: usize, q: usize, parts: &[usize]) -> Result<HypergraphSpec> {
    HypergraphSpec::new(n, q, Sigma::new(parts.to_vec())?)
}

impl HypergraphSpec {
    pub fn new(n: usize, q: usize, sigma: Sigma) -> Result<Self> {
        if n == 0 || q == 0 {
            return Err(Error::validation("n and q must be at least 1"));
        }
        if n.checked_mul(q).is_none() {
            return Err(Error::Overflow("vertex count n*q"));
        }
        Ok(HypergraphSpec { n, q, sigma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn r(&self) -> usize {
        self.sigma.r()
    }

    pub fn s(&self) -> usize {
        self.sigma.s()
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.q
    }

    /// False when there are fewer classes than parts or a class is too small for `a_1`.
    pub fn has_edges(&self) -> bool {
        self.n >= self.sigma.s() && self.q >= self.sigma.largest()
    }

    pub(crate) fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k >= self.r() {
            return Err(Error::validation(format!(
                "k must lie in [1, r-1] = [1, {}], got {k}",
                self.r().saturating_sub(1)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for HypergraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, r={}, q={} | {})", self.n, self.r(), self.q, self.sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_spec_normalizes() {
        let spec = make_spec(10, 5, &[2, 3, 4]).unwrap();
        assert_eq!(spec.sigma().parts(), &[4, 3, 2]);
        assert_eq!((spec.r(), spec.s(), spec.sigma().gcd()), (9, 3, 1));
        assert!(spec.has_edges());
    }

    #[test]
    fn degenerate_specs_have_no_edges() {
        assert!(!make_spec(2, 5, &[4, 3, 2]).unwrap().has_edges());
        assert!(!make_spec(10, 3, &[4, 3, 2]).unwrap().has_edges());
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(matches!(make_spec(3, 3, &[]), Err(Error::Validation(_))));
        assert!(matches!(make_spec(3, 3, &[2, 0]), Err(Error::Validation(_))));
        assert!(matches!(make_spec(0, 3, &[1]), Err(Error::Validation(_))));
        assert!(matches!(make_spec(3, 0, &[1]), Err(Error::Validation(_))));
    }

    #[test]
    fn json_shape() {
        let spec = make_spec(3, 4, &[1, 2]).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"n":3,"q":4,"sigma":[2,1]}"#);
        let back: HypergraphSpec = serde_json::from_str(r#"{"n":3,"q":4,"sigma":[1,2]}"#).unwrap();
        assert_eq!(back, spec);
        assert!(serde_json::from_str::<HypergraphSpec>(r#"{"n":3,"q":4,"sigma":[]}"#).is_err());
    }

    #[test]
    fn divided_sigma() {
        let sigma = Sigma::new(vec![4, 2]).unwrap();
        assert_eq!(sigma.divided_by(2).unwrap().parts(), &[2, 1]);
        assert!(sigma.divided_by(3).is_err());
        assert!(Sigma::new(vec![2, 2]).unwrap().is_rectangular());
    }
}
