//! Floating-point checks of the matrix inequalities on su(N).
//!
//! Matrices are in actual units (no `2π` rescaling). For skew-Hermitian traceless `X`,
//! `‖X‖` is the spectrum of `-iX` sorted descending; its pairing with `e_k` is the
//! `k`-th partial sum.

mod checks;
mod trials;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::CartanVector;

pub use checks::{
    aligned_partner, check_interval_product, check_klyachko, check_pairing_bound, check_triangle, klyachko_log,
    unitary_args, CheckOutcome, IntervalUnitary, KlyachkoOutcome, PairingOutcome,
};
pub use trials::{run_trials, LemmaStats, NumericsOptions, NumericsReport};

pub type CMatrix = DMatrix<Complex64>;

pub const SKEW_TOL: f64 = 1e-12;
pub const JACOBI_TOL: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const MAX_NUMERIC_RANK: usize = 12;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A traceless skew-Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewHermitian {
    m: CMatrix,
}

impl SkewHermitian {
    pub fn new(m: CMatrix) -> Result<Self> {
        let n = m.nrows();
        if n != m.ncols() || !(2..=MAX_NUMERIC_RANK).contains(&n) {
            return Err(Error::InvalidInput(format!("need a square matrix of size 2..=12, got {n}x{}", m.ncols())));
        }
        let skew = (&m + m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if skew > SKEW_TOL {
            return Err(Error::InvalidInput(format!("matrix is not skew-Hermitian (defect {skew:e})")));
        }
        let tr = m.trace().norm();
        if tr > SKEW_TOL {
            return Err(Error::InvalidInput(format!("matrix is not traceless (trace {tr:e})")));
        }
        Ok(SkewHermitian { m })
    }

    /// Skew-Hermitian part, without the trace projection; for computed logarithms.
    pub(crate) fn new_lenient(m: CMatrix) -> Self {
        SkewHermitian { m: (&m - m.adjoint()) * Complex64::new(0.5, 0.0) }
    }

    pub fn zero(n: usize) -> Self {
        SkewHermitian { m: CMatrix::zeros(n, n) }
    }

    /// The diagonal matrix `2π · v`.
    pub fn from_cartan(v: &CartanVector) -> Self {
        let d: Vec<Complex64> = v
            .diagonal_entries()
            .iter()
            .map(|r| I * (2.0 * std::f64::consts::PI * *r.numer() as f64 / *r.denom() as f64))
            .collect();
        SkewHermitian { m: CMatrix::from_diagonal(&nalgebra::DVector::from_vec(d)) }
    }

    /// `i V diag(μ) V†`, projected back onto the traceless skew-Hermitian matrices.
    pub fn from_frame(vectors: &CMatrix, mu: &[f64]) -> Self {
        let d = nalgebra::DVector::from_iterator(mu.len(), mu.iter().map(|&x| I * x));
        Self::project(vectors * CMatrix::from_diagonal(&d) * vectors.adjoint())
    }

    /// `(A - A†)/2` with the trace removed.
    pub fn project(m: CMatrix) -> Self {
        let n = m.nrows();
        let mut s = (&m - m.adjoint()) * Complex64::new(0.5, 0.0);
        let t = s.trace() / n as f64;
        for k in 0..n {
            s[(k, k)] -= t;
        }
        SkewHermitian { m: s }
    }

    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn add(&self, other: &SkewHermitian) -> SkewHermitian {
        SkewHermitian { m: &self.m + &other.m }
    }

    pub fn scale(&self, c: f64) -> SkewHermitian {
        SkewHermitian { m: &self.m * Complex64::new(c, 0.0) }
    }

    /// `U X U†` for unitary `U`.
    pub fn conjugate(&self, u: &CMatrix) -> SkewHermitian {
        Self::project(u * &self.m * u.adjoint())
    }

    /// `⟨X, Y⟩ = -Re Tr(XY)`.
    pub fn pairing(&self, other: &SkewHermitian) -> f64 {
        -(&self.m * &other.m).trace().re
    }

    /// `-iX`.
    pub fn hermitian(&self) -> CMatrix {
        &self.m * (-I)
    }
}

/// Eigenvalues of `-iX`, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumVector {
    lambdas: Vec<f64>,
}

impl SpectrumVector {
    pub fn new(mut lambdas: Vec<f64>) -> Result<Self> {
        lambdas.sort_by(|a, b| b.total_cmp(a));
        let s: f64 = lambdas.iter().sum();
        if s.abs() > 1e-9 * (1.0 + lambdas.iter().map(|x| x.abs()).sum::<f64>()) {
            return Err(Error::InvalidInput(format!("spectrum sums to {s:e}")));
        }
        Ok(SpectrumVector { lambdas })
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// `⟨‖X‖, e_k⟩` for `k = 1..N-1`.
    pub fn partial_sums(&self) -> Vec<f64> {
        self.lambdas
            .iter()
            .scan(0.0, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .take(self.lambdas.len() - 1)
            .collect()
    }

    /// `⟨self, other⟩ = Σ λ_s μ_s`.
    pub fn pairing(&self, other: &SpectrumVector) -> f64 {
        self.lambdas.iter().zip(&other.lambdas).map(|(a, b)| a * b).sum()
    }
}

#[derive(Debug, Clone)]
pub struct EigenFrame {
    pub spectrum: SpectrumVector,
    /// Column `s` is the eigenvector of `spectrum.lambdas()[s]`.
    pub vectors: CMatrix,
    pub residual: f64,
    pub sweeps: usize,
}

/// Cyclic Jacobi on the Hermitian matrix `h`: eigenvalues sorted descending with the
/// unitary frame.
pub(crate) fn jacobi_hermitian(h: &CMatrix) -> Result<(Vec<f64>, CMatrix, usize)> {
    let n = h.nrows();
    let mut a = h.clone();
    let mut v = CMatrix::identity(n, n);
    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= JACOBI_TOL * scale {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let mut pairs: Vec<(f64, usize)> = (0..n).map(|k| (a[(k, k)].re, k)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let vals = pairs.iter().map(|p| p.0).collect();
    let vecs = CMatrix::from_fn(n, n, |r, c| v[(r, pairs[c].1)]);
    Ok((vals, vecs, sweeps))
}

fn off_norm(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[(p, q)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Zeroes `a[p,q]` by `a ← J† a J` with `J = D P`: `D` removes the phase of `a[p,q]`
/// and `P` is the real Jacobi rotation of the resulting symmetric block.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = apq / b;
    let zeta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * b);
    let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let (jpp, jpq) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0));
    let (jqp, jqq) = (phase.conj() * -s, phase.conj() * c);
    let n = a.nrows();
    for r in 0..n {
        let (x, y) = (a[(r, p)], a[(r, q)]);
        a[(r, p)] = x * jpp + y * jqp;
        a[(r, q)] = x * jpq + y * jqq;
        let (x, y) = (v[(r, p)], v[(r, q)]);
        v[(r, p)] = x * jpp + y * jqp;
        v[(r, q)] = x * jpq + y * jqq;
    }
    for col in 0..n {
        let (x, y) = (a[(p, col)], a[(q, col)]);
        a[(p, col)] = jpp.conj() * x + jqp.conj() * y;
        a[(q, col)] = jpq.conj() * x + jqq.conj() * y;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// Spectrum of `-iA` with eigenvectors; checks `‖(-iA)v - λv‖ < 1e-9` per pair.
pub fn hermitian_eigs(a: &SkewHermitian) -> Result<EigenFrame> {
    let h = a.hermitian();
    let (vals, vecs, sweeps) = jacobi_hermitian(&h)?;
    let n = h.nrows();
    let mut residual: f64 = 0.0;
    for k in 0..n {
        let col = vecs.column(k);
        let r = &h * col - col * Complex64::new(vals[k], 0.0);
        residual = residual.max(r.norm());
    }
    let bound = 1e-9 * h.norm().max(1.0);
    if residual > bound {
        return Err(Error::NoConvergence { sweeps, residual });
    }
    Ok(EigenFrame { spectrum: SpectrumVector::new(vals)?, vectors: vecs, residual, sweeps })
}

/// `‖X‖`.
pub fn norm_map(a: &SkewHermitian) -> Result<SpectrumVector> {
    Ok(hermitian_eigs(a)?.spectrum)
}

/// `e^X = V diag(e^{iλ}) V†`.
pub fn exp_skew(a: &SkewHermitian) -> Result<CMatrix> {
    let f = hermitian_eigs(a)?;
    let d = nalgebra::DVector::from_iterator(a.n(), f.spectrum.lambdas().iter().map(|&l| (I * l).exp()));
    Ok(&f.vectors * CMatrix::from_diagonal(&d) * f.vectors.adjoint())
}

pub(crate) fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests;
