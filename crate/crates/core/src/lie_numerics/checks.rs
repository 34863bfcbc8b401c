use std::f64::consts::PI;

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{exp_skew, hermitian_eigs, jacobi_hermitian, max_abs, norm_map, CMatrix, SkewHermitian, SpectrumVector};
use crate::error::{Error, Result};
use crate::root_system::{CartanVector, Chamber};

pub const TRIANGLE_TOL: f64 = 1e-9;
pub const PAIRING_TOL: f64 = 1e-9;
pub const EQUALITY_TOL: f64 = 1e-8;
pub const KLYACHKO_TOL: f64 = 1e-8;
pub const INTERVAL_TOL: f64 = 1e-8;
pub const TRACE_TOL: f64 = 1e-9;
/// Samples whose product has an eigenvalue this close to `-1` are rejected.
pub const BRANCH_GUARD: f64 = 1e-6;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Largest amount by which the inequality is exceeded; negative means slack.
    pub max_violation: f64,
    pub vacuous: bool,
}

/// `⟨‖X+Y‖, e_k⟩ ≤ ⟨‖X‖, e_k⟩ + ⟨‖Y‖, e_k⟩` for every `k`.
pub fn check_triangle(x: &SkewHermitian, y: &SkewHermitian) -> Result<CheckOutcome> {
    same_size(x, y)?;
    let s = norm_map(&x.add(y))?.partial_sums();
    let a = norm_map(x)?.partial_sums();
    let b = norm_map(y)?.partial_sums();
    let max_violation = (0..s.len()).map(|k| s[k] - a[k] - b[k]).fold(f64::NEG_INFINITY, f64::max);
    Ok(CheckOutcome { passed: max_violation <= TRIANGLE_TOL, max_violation, vacuous: false })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairingOutcome {
    pub passed: bool,
    /// `⟨ω, X⟩`.
    pub lhs: f64,
    /// `⟨‖ω‖, ‖X‖⟩`.
    pub rhs: f64,
    /// `rhs - lhs`.
    pub gap: f64,
    pub equality: bool,
}

pub fn check_pairing_bound(omega: &SkewHermitian, x: &SkewHermitian) -> Result<PairingOutcome> {
    same_size(omega, x)?;
    let lhs = omega.pairing(x);
    let rhs = norm_map(omega)?.pairing(&norm_map(x)?);
    let gap = rhs - lhs;
    Ok(PairingOutcome { passed: gap >= -PAIRING_TOL, lhs, rhs, gap, equality: gap.abs() < EQUALITY_TOL })
}

/// `X = U i diag(μ) U†` where `U` diagonalizes `ω` with its spectrum descending and `μ`
/// is sorted descending: `X` commutes with `ω` and is aligned with its flag.
pub fn aligned_partner(omega: &SkewHermitian, mu: &SpectrumVector) -> Result<SkewHermitian> {
    if mu.lambdas().len() != omega.n() {
        return Err(Error::RankMismatch { left: omega.n(), right: mu.lambdas().len() });
    }
    let frame = hermitian_eigs(omega)?;
    Ok(SkewHermitian::from_frame(&frame.vectors, mu.lambdas()))
}

/// Eigenvalue arguments in `(-π, π)` of a unitary `g`, with an eigenframe, via the
/// Cayley transform `H = i(1-g)(1+g)^{-1}`, `φ = 2 atan(μ)`.
pub fn unitary_args(g: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    let n = g.nrows();
    let id = CMatrix::identity(n, n);
    let inv = (&id + g)
        .try_inverse()
        .ok_or_else(|| Error::Precondition("eigenvalue at -1".into()))?;
    let h = (&id - g) * inv * I;
    let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let (mu, vecs, _) = jacobi_hermitian(&h)?;
    let args: Vec<f64> = mu.iter().map(|m| 2.0 * m.atan()).collect();
    if args.iter().any(|a| (PI - a.abs()) < BRANCH_GUARD) {
        return Err(Error::Precondition("eigenvalue near -1".into()));
    }
    Ok((args, vecs))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KlyachkoOutcome {
    pub passed: bool,
    /// `max |e^Z - e^X e^Y|`.
    pub exp_error: f64,
    /// Largest excess of `⟨‖Z‖, e_k⟩` over `⟨‖X‖ + ‖Y‖, e_k⟩`.
    pub norm_violation: f64,
    pub trace: f64,
}

/// Principal logarithm `Z` of `e^X e^Y`.
pub fn klyachko_log(x: &SkewHermitian, y: &SkewHermitian) -> Result<(SkewHermitian, CMatrix)> {
    let g = exp_skew(x)? * exp_skew(y)?;
    let (args, vecs) = unitary_args(&g)?;
    let d = DVector::from_iterator(args.len(), args.iter().map(|&a| I * a));
    let z = &vecs * CMatrix::from_diagonal(&d) * vecs.adjoint();
    Ok((SkewHermitian::new_lenient(z), g))
}

/// Fails with `Precondition` unless `b ∈ C_+`, `b ≪ e₁/(100N)`, `‖X‖ ≤ b` and `‖Y‖ ≤ b`.
/// `b` is in crate units: the matrix of `b` is `2π` times its diagonal.
pub fn check_klyachko(x: &SkewHermitian, y: &SkewHermitian, b: &CartanVector) -> Result<KlyachkoOutcome> {
    same_size(x, y)?;
    let n = x.n();
    if b.n() != n {
        return Err(Error::RankMismatch { left: n, right: b.n() });
    }
    if (-b).chamber() == Chamber::Outside {
        return Err(Error::Precondition("b is not in C_+".into()));
    }
    let bs = norm_map(&SkewHermitian::from_cartan(b))?.partial_sums();
    let cap: Vec<f64> = (1..n).map(|k| (n - k) as f64 / n as f64 / (100.0 * n as f64)).collect();
    if bs.iter().zip(&cap).any(|(v, c)| v >= c) {
        return Err(Error::Precondition("b is not below e_1/(100N)".into()));
    }
    let xs = norm_map(x)?.partial_sums();
    let ys = norm_map(y)?.partial_sums();
    for (name, s) in [("X", &xs), ("Y", &ys)] {
        if s.iter().zip(&bs).any(|(v, c)| *v > c + KLYACHKO_TOL) {
            return Err(Error::Precondition(format!("‖{name}‖ is not below b")));
        }
    }
    let (z, g) = klyachko_log(x, y)?;
    let exp_error = max_abs(&(exp_skew(&z)? - g));
    let zs = norm_map(&z)?.partial_sums();
    let norm_violation = (0..n - 1).map(|k| zs[k] - xs[k] - ys[k]).fold(f64::NEG_INFINITY, f64::max);
    let trace = z.matrix().trace().norm();
    Ok(KlyachkoOutcome {
        passed: exp_error < KLYACHKO_TOL && norm_violation <= KLYACHKO_TOL && trace < TRACE_TOL,
        exp_error,
        norm_violation,
        trace,
    })
}

/// A special unitary `g` with every eigenvalue of the form `e^{iφ}`, `φ ∈ [a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalUnitary {
    pub g: CMatrix,
    pub a: f64,
    pub b: f64,
}

impl IntervalUnitary {
    /// `U diag(e^{iφ}) U†`; the arguments must lie in `[a, b]` and sum to a multiple of `2π`.
    pub fn from_frame(u: &CMatrix, args: &[f64], a: f64, b: f64) -> Result<Self> {
        if a > b || args.iter().any(|&p| p < a - 1e-12 || p > b + 1e-12) {
            return Err(Error::Precondition("arguments outside the interval".into()));
        }
        let turns = args.iter().sum::<f64>() / (2.0 * PI);
        if (turns - turns.round()).abs() > 1e-12 {
            return Err(Error::Precondition("determinant is not 1".into()));
        }
        let d = DVector::from_iterator(args.len(), args.iter().map(|&p| (I * p).exp()));
        Ok(IntervalUnitary { g: u * CMatrix::from_diagonal(&d) * u.adjoint(), a, b })
    }

    pub fn diagonal(args: &[f64], a: f64, b: f64) -> Result<Self> {
        Self::from_frame(&CMatrix::identity(args.len(), args.len()), args, a, b)
    }
}

/// Every eigenvalue argument of `g₁g₂`, read in the window around the midpoint of
/// `[a₁+a₂, b₁+b₂]`, lies in that window.
pub fn check_interval_product(g1: &IntervalUnitary, g2: &IntervalUnitary) -> Result<CheckOutcome> {
    if g1.g.nrows() != g2.g.nrows() {
        return Err(Error::RankMismatch { left: g1.g.nrows(), right: g2.g.nrows() });
    }
    let (lo, hi) = (g1.a + g2.a, g1.b + g2.b);
    if hi - lo >= 2.0 * PI {
        return Ok(CheckOutcome { passed: true, max_violation: f64::NEG_INFINITY, vacuous: true });
    }
    let (c, w) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
    let h = &g1.g * &g2.g * (-I * c).exp();
    let max_violation = match unitary_args(&h) {
        Ok((args, _)) => args.iter().map(|p| p.abs() - w).fold(f64::NEG_INFINITY, f64::max),
        Err(Error::Precondition(_)) => PI - w,
        Err(e) => return Err(e),
    };
    Ok(CheckOutcome { passed: max_violation <= INTERVAL_TOL, max_violation, vacuous: false })
}

fn same_size(x: &SkewHermitian, y: &SkewHermitian) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::RankMismatch { left: x.n(), right: y.n() });
    }
    Ok(())
}
