//! Subsets of `{1, ..., N-1}` stored as bitmasks (bit `k-1` for index `k`).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_INDEX: usize = 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All of `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_INDEX);
        Subset(((1u64 << m) - 1) as u32)
    }

    pub fn singleton(k: usize) -> Self {
        debug_assert!((1..=MAX_INDEX).contains(&k));
        Subset(1 << (k - 1))
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(Subset::EMPTY, |s, k| s.with(k))
    }

    /// Parse a comma list, checking every index lies in `1..=max`.
    pub fn parse(s: &str, max: usize) -> Result<Self> {
        let mut out = Subset::EMPTY;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let k: usize = part
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad subset element {part:?}")))?;
            if k == 0 || k > max {
                return Err(Error::IndexOutOfRange { index: k, max });
            }
            out = out.with(k);
        }
        Ok(out)
    }

    pub fn contains(self, k: usize) -> bool {
        k >= 1 && k <= MAX_INDEX && self.0 & (1 << (k - 1)) != 0
    }

    pub fn with(self, k: usize) -> Self {
        Subset(self.0 | (1 << (k - 1)))
    }

    pub fn without(self, k: usize) -> Self {
        Subset(self.0 & !(1 << (k - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_INDEX).filter(move |&k| self.contains(k))
    }

    /// Number of elements strictly below `k`.
    pub fn count_below(self, k: usize) -> usize {
        (self.0 & ((1u32 << (k - 1)) - 1)).count_ones() as usize
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(Subset(cur))
        })
    }

    /// All subsets of `{1, ..., m}` in increasing bitmask order.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        Subset::full(m).subsets()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.iter().collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&k) = v.iter().find(|&&k| k == 0 || k > MAX_INDEX) {
            return Err(serde::de::Error::custom(format!("subset index {k} out of range")));
        }
        Ok(Subset::from_indices(v))
    }
}
