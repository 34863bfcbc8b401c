//! Finite graded dimension vectors, `degree -> dimension`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDims(BTreeMap<i64, u64>);

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// One-dimensional in degree `d`.
    pub fn unit(d: i64) -> Self {
        let mut g = Self::new();
        g.add_at(d, 1);
        g
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut g = Self::new();
        for (d, m) in pairs {
            g.add_at(d, m);
        }
        g
    }

    pub fn add_at(&mut self, degree: i64, mult: u64) {
        if mult > 0 {
            *self.0.entry(degree).or_insert(0) += mult;
        }
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&d, &m)| (d, m))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Every degree moved by `by` (so `shift(-n)` is the shift functor `[n]`).
    pub fn shifted(&self, by: i64) -> Self {
        GradedDims(self.0.iter().map(|(&d, &m)| (d + by, m)).collect())
    }

    pub fn add(&mut self, other: &GradedDims) {
        for (d, m) in other.iter() {
            self.add_at(d, m);
        }
    }

    pub fn sum(&self, other: &GradedDims) -> Self {
        let mut out = self.clone();
        out.add(other);
        out
    }

    pub fn tensor(&self, other: &GradedDims) -> Self {
        let mut out = GradedDims::new();
        for (a, m) in self.iter() {
            for (b, n) in other.iter() {
                out.add_at(a + b, m * n);
            }
        }
        out
    }

    /// Restriction to degrees in `[lo, hi]`.
    pub fn truncated(&self, lo: i64, hi: i64) -> Self {
        GradedDims(self.0.range(lo..=hi).map(|(&d, &m)| (d, m)).collect())
    }

    pub fn as_map(&self) -> &BTreeMap<i64, u64> {
        &self.0
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, m)| format!("{d}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
