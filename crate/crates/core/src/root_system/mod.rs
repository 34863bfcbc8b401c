//! The Cartan algebra of su(N) in coroot coordinates.
//!
//! A point is `Σ x_k e_k` with exact rational `x_k`, in units where `2π = 1`. In these
//! coordinates `⟨v, f_k⟩ = x_k`, and `⟨v, e_k⟩ = Σ_j x_j G_jk` with
//! `G_jk = min(j,k)(N-max(j,k))/N` (the inverse Cartan matrix). The central lattice is
//! the integral points.

mod lattice;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::subset::Subset;

pub use lattice::{enumerate_lattice, Bound, LatticeBox};

pub const MAX_RANK: usize = 16;

pub fn check_rank(n: usize) -> Result<()> {
    if (2..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidRank(n))
    }
}

/// `⟨e_j, e_k⟩` in units of `2π`.
pub fn gram(n: usize, j: usize, k: usize) -> Rational {
    let (a, b) = if j <= k { (j, k) } else { (k, j) };
    Rational::new((a * (n - b)) as i64, n as i64)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanVector {
    n: usize,
    #[serde(with = "rational::serde_vec")]
    coords: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chamber {
    InteriorMinus,
    BoundaryMinus,
    Outside,
}

impl CartanVector {
    pub fn new(n: usize, coords: Vec<Rational>) -> Result<Self> {
        check_rank(n)?;
        if coords.len() != n - 1 {
            return Err(Error::RankMismatch { left: n - 1, right: coords.len() });
        }
        Ok(CartanVector { n, coords })
    }

    pub fn from_ints(n: usize, coords: &[i64]) -> Result<Self> {
        Self::new(n, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        CartanVector { n, coords: vec![Rational::zero(); n - 1] }
    }

    /// The coroot `e_k`.
    pub fn e(n: usize, k: usize) -> Result<Self> {
        let mut v = Self::zero(n);
        *v.slot(k)? = int(1);
        Ok(v)
    }

    /// The root `f_k = 2e_k - e_{k-1} - e_{k+1}`.
    pub fn f(n: usize, k: usize) -> Result<Self> {
        let mut v = Self::zero(n);
        *v.slot(k)? = int(2);
        if k > 1 {
            v.coords[k - 2] = int(-1);
        }
        if k < n - 1 {
            v.coords[k] = int(-1);
        }
        Ok(v)
    }

    /// `e_I = Σ_{k∈I} e_k`.
    pub fn e_sum(n: usize, s: Subset) -> Result<Self> {
        let mut v = Self::zero(n);
        for k in s.iter() {
            *v.slot(k)? = int(1);
        }
        Ok(v)
    }

    /// `f_I = Σ_{k∈I} f_k`.
    pub fn f_sum(n: usize, s: Subset) -> Result<Self> {
        s.iter().try_fold(Self::zero(n), |acc, k| Ok(&acc + &Self::f(n, k)?))
    }

    /// The point with the given `e`-pairings (`x = C u`, `C` the Cartan matrix).
    pub fn from_e_pairings(n: usize, u: &[Rational]) -> Result<Self> {
        check_rank(n)?;
        if u.len() != n - 1 {
            return Err(Error::RankMismatch { left: n - 1, right: u.len() });
        }
        let m = n - 1;
        let coords = (0..m)
            .map(|i| {
                let mut x = u[i] * int(2);
                if i > 0 {
                    x -= u[i - 1];
                }
                if i + 1 < m {
                    x -= u[i + 1];
                }
                x
            })
            .collect();
        Ok(CartanVector { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `x_k`, 1-based.
    pub fn x(&self, k: usize) -> Rational {
        self.coords[k - 1]
    }

    fn slot(&mut self, k: usize) -> Result<&mut Rational> {
        let max = self.n - 1;
        if k == 0 || k > max {
            return Err(Error::IndexOutOfRange { index: k, max });
        }
        Ok(&mut self.coords[k - 1])
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k == 0 || k >= self.n {
            Err(Error::IndexOutOfRange { index: k, max: self.n - 1 })
        } else {
            Ok(())
        }
    }

    pub fn check_same_rank(&self, other: &CartanVector) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.n, right: other.n })
        }
    }

    pub fn pair_e(&self, k: usize) -> Result<Rational> {
        self.check_index(k)?;
        Ok(self.pair_e_unchecked(k))
    }

    pub(crate) fn pair_e_unchecked(&self, k: usize) -> Rational {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| *x * gram(self.n, j + 1, k))
            .sum()
    }

    pub fn pair_f(&self, k: usize) -> Result<Rational> {
        self.check_index(k)?;
        Ok(self.coords[k - 1])
    }

    /// All `e`-pairings `(⟨v,e_1⟩, ..., ⟨v,e_{N-1}⟩)`.
    pub fn e_pairings(&self) -> Vec<Rational> {
        (1..self.n).map(|k| self.pair_e_unchecked(k)).collect()
    }

    /// `⟨v, v⟩`.
    pub fn norm_sq(&self) -> Rational {
        self.e_pairings().iter().zip(&self.coords).map(|(u, x)| *u * *x).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    pub fn integral_coords(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NonIntegral(self.to_string()));
        }
        Ok(self.coords.iter().map(|x| x.to_integer()).collect())
    }

    pub fn scaled(&self, c: Rational) -> Self {
        CartanVector { n: self.n, coords: self.coords.iter().map(|x| *x * c).collect() }
    }

    /// Diagonal entries of `-i` times the matrix of `v` (times `2π`); they sum to zero.
    pub fn diagonal_entries(&self) -> Vec<Rational> {
        let n = self.n as i64;
        (1..=self.n)
            .map(|s| {
                self.coords
                    .iter()
                    .enumerate()
                    .map(|(idx, x)| {
                        let k = idx as i64 + 1;
                        let entry = if (s as i64) <= k { n - k } else { -k };
                        *x * Rational::new(entry, n)
                    })
                    .sum()
            })
            .collect()
    }

    pub fn chamber(&self) -> Chamber {
        if self.coords.iter().all(|x| x.is_negative()) {
            Chamber::InteriorMinus
        } else if self.coords.iter().all(|x| !x.is_positive()) {
            Chamber::BoundaryMinus
        } else {
            Chamber::Outside
        }
    }

    /// `v ∈ C_-`.
    pub fn in_c_minus(&self) -> bool {
        self.chamber() != Chamber::Outside
    }

    /// `I_v = {k : ⟨v, f_k⟩ < 0}`.
    pub fn i_set(&self) -> Subset {
        Subset::from_indices((1..self.n).filter(|&k| self.coords[k - 1].is_negative()))
    }

    /// `{k : ⟨v, f_k⟩ > 0}`.
    pub fn positive_set(&self) -> Subset {
        Subset::from_indices((1..self.n).filter(|&k| self.coords[k - 1].is_positive()))
    }
}

impl fmt::Display for CartanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::format).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for CartanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N{}{}", self.n, self)
    }
}

impl Add for &CartanVector {
    type Output = CartanVector;
    fn add(self, rhs: &CartanVector) -> CartanVector {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        CartanVector {
            n: self.n,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CartanVector {
    type Output = CartanVector;
    fn sub(self, rhs: &CartanVector) -> CartanVector {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        CartanVector {
            n: self.n,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CartanVector {
    type Output = CartanVector;
    fn neg(self) -> CartanVector {
        CartanVector { n: self.n, coords: self.coords.iter().map(|a| -a).collect() }
    }
}

pub fn pair_e(v: &CartanVector, k: usize) -> Result<Rational> {
    v.pair_e(k)
}

pub fn pair_f(v: &CartanVector, k: usize) -> Result<Rational> {
    v.pair_f(k)
}

/// `x ≤ y`: every `⟨y - x, e_k⟩ ≥ 0`.
pub fn dominance_leq(x: &CartanVector, y: &CartanVector) -> Result<bool> {
    x.check_same_rank(y)?;
    Ok((y - x).e_pairings().iter().all(|u| !u.is_negative()))
}

/// `x ≪ y`: every `⟨y - x, e_k⟩ > 0`.
pub fn dominance_ll(x: &CartanVector, y: &CartanVector) -> Result<bool> {
    x.check_same_rank(y)?;
    Ok((y - x).e_pairings().iter().all(|u| u.is_positive()))
}

pub fn weyl_chamber(x: &CartanVector) -> Chamber {
    x.chamber()
}

pub fn i_set(x: &CartanVector) -> Subset {
    x.i_set()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CenterClass {
    n: usize,
    residue: usize,
}

impl CenterClass {
    pub fn new(n: usize, residue: i64) -> Self {
        CenterClass { n, residue: residue.rem_euclid(n as i64) as usize }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn residue(self) -> usize {
        self.residue
    }

    pub fn all(n: usize) -> impl Iterator<Item = CenterClass> {
        (0..n as i64).map(move |r| CenterClass::new(n, r))
    }

    pub fn add(self, other: CenterClass) -> CenterClass {
        CenterClass::new(self.n, (self.residue + other.residue) as i64)
    }
}

impl fmt::Display for CenterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.n)
    }
}

/// `e^l = e^{2πi r/N}·Id` with `r ≡ -Σ k x_k (mod N)`.
pub fn center_class(l: &CartanVector) -> Result<CenterClass> {
    let x = l.integral_coords()?;
    Ok(center_of_ints(l.n, &x))
}

pub(crate) fn center_of_ints(n: usize, x: &[i64]) -> CenterClass {
    let s: i64 = x.iter().enumerate().map(|(i, v)| (i as i64 + 1) * v).sum();
    CenterClass::new(n, -s)
}

/// Weights `D_1, ..., D_{N-1}` of the degree function `D(l) = -Σ x_k D_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWeights {
    n: usize,
    weights: Vec<i64>,
}

impl DegreeWeights {
    /// `D_k = 2k(N-k)`, the real dimension of the Grassmannian `G(k, N)`.
    pub fn standard(n: usize) -> Self {
        let weights = (1..n as i64).map(|k| 2 * k * (n as i64 - k)).collect();
        DegreeWeights { n, weights }
    }

    /// Arbitrary positive weights.
    pub fn custom(n: usize, weights: Vec<i64>) -> Result<Self> {
        check_rank(n)?;
        if weights.len() != n - 1 {
            return Err(Error::RankMismatch { left: n - 1, right: weights.len() });
        }
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::InvalidInput("degree weights must be positive".into()));
        }
        Ok(DegreeWeights { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_symmetric(&self) -> bool {
        self.weights.iter().eq(self.weights.iter().rev())
    }

    pub fn degree(&self, l: &CartanVector) -> Result<i64> {
        if l.n != self.n {
            return Err(Error::RankMismatch { left: self.n, right: l.n });
        }
        Ok(self.degree_of_ints(&l.integral_coords()?))
    }

    pub(crate) fn degree_of_ints(&self, x: &[i64]) -> i64 {
        -x.iter().zip(&self.weights).map(|(a, w)| a * w).sum::<i64>()
    }
}

/// `D(l)` with the standard weights.
pub fn d_degree(l: &CartanVector) -> Result<i64> {
    DegreeWeights::standard(l.n).degree(l)
}

/// Some `k ∈ I_x` with `⟨y - x, e_k⟩ > 0`, for lattice `x ≤ y` in `C_-`, `x ≠ y`.
pub fn shevel_witness(x: &CartanVector, y: &CartanVector) -> Result<usize> {
    x.check_same_rank(y)?;
    if !x.is_integral() || !y.is_integral() {
        return Err(Error::Precondition("shevel_witness needs lattice points".into()));
    }
    if !x.in_c_minus() || !y.in_c_minus() {
        return Err(Error::Precondition("shevel_witness needs points of C_-".into()));
    }
    if x == y || !dominance_leq(x, y)? {
        return Err(Error::Precondition(format!("need {x} < {y} in the dominance order")));
    }
    let diff = y - x;
    x.i_set()
        .iter()
        .find(|&k| diff.pair_e_unchecked(k).is_positive())
        .ok_or_else(|| Error::Internal(format!("no witness index for {x} < {y}")))
}

#[cfg(test)]
mod tests;
