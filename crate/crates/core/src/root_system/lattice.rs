//! Finite boxes of lattice points and their enumeration.

use serde::{Deserialize, Serialize};

use super::{center_of_ints, check_rank, CartanVector, CenterClass};
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// An optional closed bound on one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Bound {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Bound {
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Bound { lo: Some(lo), hi: Some(hi) }
    }
}

/// Integral box `lo_k <= x_k <= hi_k`. Empty when some `lo_k > hi_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeBox {
    n: usize,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl LatticeBox {
    pub fn new(n: usize, lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        check_rank(n)?;
        if lo.len() != n - 1 || hi.len() != n - 1 {
            return Err(Error::RankMismatch { left: n - 1, right: lo.len().max(hi.len()) });
        }
        Ok(LatticeBox { n, lo, hi })
    }

    /// `[lo, hi]^{N-1}`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Result<Self> {
        check_rank(n)?;
        Self::new(n, vec![lo; n - 1], vec![hi; n - 1])
    }

    /// `[-r, r]^{N-1}`.
    pub fn radius(n: usize, r: i64) -> Result<Self> {
        Self::cube(n, -r, r)
    }

    /// Integral hull of rational bounds; every bound must be present.
    pub fn from_bounds(n: usize, bounds: &[Bound]) -> Result<Self> {
        check_rank(n)?;
        if bounds.len() != n - 1 {
            return Err(Error::RankMismatch { left: n - 1, right: bounds.len() });
        }
        let mut lo = Vec::with_capacity(n - 1);
        let mut hi = Vec::with_capacity(n - 1);
        for (k, b) in bounds.iter().enumerate() {
            match (b.lo, b.hi) {
                (Some(a), Some(c)) => {
                    lo.push(rational::ceil(&a));
                    hi.push(rational::floor(&c));
                }
                _ => return Err(Error::Unbounded(k + 1)),
            }
        }
        Ok(LatticeBox { n, lo, hi })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(a, b)| a > b)
    }

    pub fn count(&self) -> u64 {
        if self.is_empty() {
            return 0;
        }
        self.lo.iter().zip(&self.hi).map(|(a, b)| (b - a + 1) as u64).product()
    }

    pub fn contains_ints(&self, x: &[i64]) -> bool {
        x.iter().zip(self.lo.iter().zip(&self.hi)).all(|(v, (a, b))| a <= v && v <= b)
    }

    pub fn contains(&self, v: &CartanVector) -> bool {
        v.n() == self.n
            && v.coords()
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (a, b))| int(*a) <= *x && *x <= int(*b))
    }

    /// Empty boxes are contained in everything.
    pub fn contains_box(&self, other: &LatticeBox) -> bool {
        other.is_empty()
            || (0..self.lo.len()).all(|k| self.lo[k] <= other.lo[k] && other.hi[k] <= self.hi[k])
    }

    /// Lattice points of the box in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let mut cur = if self.is_empty() { None } else { Some(self.lo.clone()) };
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            let mut k = next.len();
            loop {
                if k == 0 {
                    cur = None;
                    break;
                }
                k -= 1;
                if next[k] < self.hi[k] {
                    next[k] += 1;
                    for j in k + 1..next.len() {
                        next[j] = self.lo[j];
                    }
                    cur = Some(next);
                    break;
                }
            }
            Some(out)
        })
    }

    /// The box is translated by the integral vector `t`.
    pub fn translated(&self, t: &[i64]) -> LatticeBox {
        LatticeBox {
            n: self.n,
            lo: self.lo.iter().zip(t).map(|(a, s)| a + s).collect(),
            hi: self.hi.iter().zip(t).map(|(a, s)| a + s).collect(),
        }
    }

    /// Integral points `l` with `(l - q/2)ᵀ G (l - q/2) <= ⟨q, q⟩/4`, boxed per
    /// coordinate. Every lattice point `l` with `x_j(l)·⟨q - l, e_j⟩ >= 0` for all `j`
    /// lies in this box.
    pub fn certified_for(q: &CartanVector) -> LatticeBox {
        let n = q.n();
        let radius_sq = q.norm_sq() / int(2);
        let mut lo = Vec::with_capacity(n - 1);
        let mut hi = Vec::with_capacity(n - 1);
        for x in q.coords() {
            match rational::integer_ball(&(*x / int(2)), &radius_sq) {
                Some((a, b)) => {
                    lo.push(a);
                    hi.push(b);
                }
                None => {
                    lo.push(1);
                    hi.push(0);
                }
            }
        }
        LatticeBox { n, lo, hi }
    }
}

/// All lattice points in the box with center class `z`, sorted lexicographically.
pub fn enumerate_lattice(z: CenterClass, bounds: &[Bound]) -> Result<Vec<CartanVector>> {
    let n = z.n();
    let b = LatticeBox::from_bounds(n, bounds)?;
    b.points()
        .filter(|x| center_of_ints(n, x) == z)
        .map(|x| CartanVector::from_ints(n, &x))
        .collect()
}
