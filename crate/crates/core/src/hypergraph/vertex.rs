use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::HypergraphSpec;
use crate::error::{Error, Result};

/// A grid vertex: `row` within class `class`, both 1-based.
///
/// Ordering is by class, then row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub class: usize,
    pub row: usize,
}

impl Vertex {
    pub fn new(class: usize, row: usize) -> Self {
        Vertex { class, row }
    }

    pub fn in_range(&self, spec: &HypergraphSpec) -> bool {
        (1..=spec.n()).contains(&self.class) && (1..=spec.q()).contains(&self.row)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: BTreeSet<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all(spec: &HypergraphSpec) -> Self {
        (1..=spec.n())
            .flat_map(|c| (1..=spec.q()).map(move |row| Vertex::new(c, row)))
            .collect()
    }

    /// The top `profile[i]` rows of class `i + 1`.
    pub fn from_profile(spec: &HypergraphSpec, profile: &[usize]) -> Result<Self> {
        if profile.len() > spec.n() {
            return Err(Error::validation(format!(
                "profile has {} entries but there are only {} classes",
                profile.len(),
                spec.n()
            )));
        }
        if let Some(&b) = profile.iter().find(|&&b| b > spec.q()) {
            return Err(Error::validation(format!("profile entry {b} exceeds q = {}", spec.q())));
        }
        Ok(profile
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| (1..=b).map(move |row| Vertex::new(i + 1, row)))
            .collect())
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.members.insert(v)
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vertex> + '_ {
        self.members.iter()
    }

    /// `b_i = |B ∩ V_i|` for every class; vertices outside `1..=n` are ignored.
    pub fn profile(&self, n: usize) -> Vec<usize> {
        let mut b = vec![0; n];
        for v in &self.members {
            if (1..=n).contains(&v.class) {
                b[v.class - 1] += 1;
            }
        }
        b
    }

    /// Rows of `class` present in the set, ascending.
    pub fn rows_in(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.members
            .range(Vertex::new(class, 0)..Vertex::new(class + 1, 0))
            .map(|v| v.row)
    }

    pub fn check_in_range(&self, spec: &HypergraphSpec) -> Result<()> {
        match self.members.iter().find(|v| !v.in_range(spec)) {
            Some(v) => Err(Error::validation(format!(
                "vertex (class {}, row {}) is outside {spec}",
                v.class, v.row
            ))),
            None => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet { members: iter.into_iter().collect() }
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        self.members.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::collections::btree_set::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
