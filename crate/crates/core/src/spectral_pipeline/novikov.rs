//! The Novikov-type modules `H_I(d)` built from `υ_I`.
//!
//! `υ_I` has one term `K_{[a(l), ∞)}[D(l)]` for each `l ∈ 𝕃⁰` with
//! `x_j(l) <= -[j ∈ I]` for all `j >= 2`, where `a(l) = λ Σ x_k (N-k)/N` is the action.
//! `H_I(d)` is spanned by the terms with `a(l) + d >= 0`, in degree `-D(l)`.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::OrbitParams;
use crate::error::{Error, Result};
use crate::flag_schubert::{g_space, FlagType};
use crate::graded::GradedDims;
use crate::rational::{self, int, Rational};
use crate::root_system::{center_of_ints, CartanVector, DegreeWeights, LatticeBox};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NovikovTerm {
    pub lattice: CartanVector,
    #[serde(with = "rational::serde_one")]
    pub action: Rational,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NovikovRecord {
    pub flag: Subset,
    #[serde(with = "rational::serde_one")]
    pub d: Rational,
    pub elements: Vec<NovikovTerm>,
    pub graded: GradedDims,
}

impl NovikovRecord {
    fn from_terms(flag: Subset, d: Rational, elements: Vec<NovikovTerm>) -> Self {
        let graded = GradedDims::from_pairs(elements.iter().map(|t| (t.degree, 1)));
        NovikovRecord { flag, d, elements, graded }
    }
}

/// Truncation used for `H_I(d)`: degrees in `[degree_lo, degree_hi]` and actions at most
/// `action_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NovikovWindows {
    pub degree_lo: i64,
    pub degree_hi: i64,
    #[serde(with = "rational::serde_one")]
    pub action_max: Rational,
}

impl Default for NovikovWindows {
    fn default() -> Self {
        NovikovWindows { degree_lo: -40, degree_hi: 40, action_max: int(2) }
    }
}

/// `Σ x_k (N-k)`, so that `a(l) = λ/N` times this.
fn scaled_action(n: usize, x: &[i64]) -> i64 {
    x.iter().enumerate().map(|(i, v)| v * (n as i64 - i as i64 - 1)).sum()
}

fn action_of(params: &OrbitParams, x: &[i64]) -> Rational {
    params.lambda * Rational::new(scaled_action(params.n, x), params.n as i64)
}

/// `c_j = -[j ∈ I]` for `j >= 2`: the upper bounds on `x_j`.
fn caps(n: usize, i: Subset) -> Vec<i64> {
    (2..n).map(|j| -(i.contains(j) as i64)).collect()
}

/// A lattice box containing every `υ_I` term with degree `>= degree_lo` and action in
/// `[action_lo, action_hi]`.
///
/// Writing the degree as `D_1 A/(N-1) + Σ_{j>=2} κ_j x_j` with `A = Σ x_k (N-k)` and
/// `κ_j = D_j - D_1 (N-j)/(N-1)`, positivity of the `κ_j` and `x_j <= c_j` bound each
/// `x_j` below; `x_1` is then bounded by the action window.
fn upsilon_box(
    params: &OrbitParams,
    i: Subset,
    weights: &DegreeWeights,
    degree_lo: i64,
    action: (Rational, Rational),
) -> Result<LatticeBox> {
    let n = params.n;
    let w = weights.weights();
    let nn = int(n as i64);
    let a_lo = action.0 * nn / params.lambda;
    let a_hi = action.1 * nn / params.lambda;
    let d1_over = Rational::new(w[0], n as i64 - 1);
    let kappa: Vec<Rational> = (2..n).map(|j| int(w[j - 1]) - d1_over * int((n - j) as i64)).collect();
    if let Some(k) = kappa.iter().position(|k| !k.is_positive()) {
        return Err(Error::Unsupported(format!(
            "degree weights {w:?} do not bound the terms (coefficient of x_{} is {})",
            k + 2,
            kappa[k]
        )));
    }
    let c = caps(n, i);
    let rest: Rational = int(degree_lo) - d1_over * a_hi;
    let cap_sum: Rational = kappa.iter().zip(&c).map(|(k, ci)| *k * int(*ci)).sum();
    let mut lo = Vec::with_capacity(n - 1);
    let mut hi = Vec::with_capacity(n - 1);
    lo.push(0);
    hi.push(0);
    for (idx, k) in kappa.iter().enumerate() {
        let others = cap_sum - *k * int(c[idx]);
        lo.push(rational::ceil(&((rest - others) / *k)));
        hi.push(c[idx]);
    }
    let weight = |j: usize| int((n - j) as i64);
    let max_tail: Rational = (2..n).map(|j| weight(j) * int(hi[j - 1])).sum();
    let min_tail: Rational = (2..n).map(|j| weight(j) * int(lo[j - 1])).sum();
    let n1 = int(n as i64 - 1);
    lo[0] = rational::ceil(&((a_lo - max_tail) / n1));
    hi[0] = rational::floor(&((a_hi - min_tail) / n1));
    LatticeBox::new(n, lo, hi)
}

fn check_flag(n: usize, i: Subset) -> Result<()> {
    FlagType::new(n, i).map(|_| ())
}

/// Terms of `υ_I` with degree `-D(l)` in `degree` and action in `action` (both closed).
pub fn upsilon_terms(
    params: &OrbitParams,
    i: Subset,
    weights: &DegreeWeights,
    degree: (i64, i64),
    action: (Rational, Rational),
) -> Result<NovikovRecord> {
    check_flag(params.n, i)?;
    if degree.0 > degree.1 || action.0 > action.1 {
        return Err(Error::InvalidInput("upsilon windows must be nonempty".into()));
    }
    let n = params.n;
    let bx = upsilon_box(params, i, weights, degree.0, action)?;
    let c = caps(n, i);
    let mut terms = Vec::new();
    for x in bx.points() {
        if center_of_ints(n, &x).residue() != 0 || x[1..].iter().zip(&c).any(|(v, cap)| v > cap) {
            continue;
        }
        let a = action_of(params, &x);
        let deg = -weights.degree_of_ints(&x);
        if a < action.0 || a > action.1 || deg < degree.0 || deg > degree.1 {
            continue;
        }
        terms.push(NovikovTerm { lattice: CartanVector::from_ints(n, &x)?, action: a, degree: deg });
    }
    Ok(NovikovRecord::from_terms(i, int(0), terms))
}

/// `H_I(d)`: terms with `a(l) + d >= 0` inside the windows.
pub fn h_graded(
    params: &OrbitParams,
    i: Subset,
    d: Rational,
    windows: &NovikovWindows,
    weights: &DegreeWeights,
) -> Result<NovikovRecord> {
    if d.is_negative() {
        return Err(Error::Precondition(format!("action shift d = {d} must be nonnegative")));
    }
    check_flag(params.n, i)?;
    if windows.degree_lo > windows.degree_hi || -d > windows.action_max {
        return Ok(NovikovRecord::from_terms(i, d, Vec::new()));
    }
    let mut rec = upsilon_terms(params, i, weights, (windows.degree_lo, windows.degree_hi), (-d, windows.action_max))?;
    rec.d = d;
    Ok(rec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauResult {
    pub flag: Subset,
    #[serde(with = "rational::serde_one")]
    pub d: Rational,
    pub nonzero: bool,
    pub witness: Option<NovikovTerm>,
    pub search_box: LatticeBox,
    pub proof_of_emptiness: bool,
}

/// `τ_d: H_I(0) -> H_I(d)` is nonzero iff `S_I(0) ≠ ∅`. With `x_j = c_j` for `j >= 2`,
/// the least `x_1` of nonnegative action is `b = ⌈Σ_{j∈I, j>=2} (N-j)/(N-1)⌉`; the `N`
/// consecutive values `b..b+N-1` run through every center residue, so the scan is
/// complete and returns the first witness.
pub fn tau_nonzero(params: &OrbitParams, i: Subset, d: Rational, weights: &DegreeWeights) -> Result<TauResult> {
    if d.is_negative() {
        return Err(Error::Precondition(format!("action shift d = {d} must be nonnegative")));
    }
    check_flag(params.n, i)?;
    let n = params.n;
    let tail = caps(n, i);
    let span = n as i64 - 1;
    let tail_action: i64 = scaled_action(n, &[vec![0], tail.clone()].concat());
    let b = rational::ceil(&Rational::new(-tail_action, span));
    let search_box = LatticeBox::new(n, [vec![b], tail.clone()].concat(), [vec![b + span], tail.clone()].concat())?;
    let candidates: Vec<Vec<i64>> = search_box.points().collect();
    for x in candidates {
        if center_of_ints(n, &x).residue() != 0 {
            continue;
        }
        let a = action_of(params, &x);
        if a.is_negative() {
            return Err(Error::Internal(format!("witness search produced negative action at {x:?}")));
        }
        let witness = NovikovTerm { lattice: CartanVector::from_ints(n, &x)?, action: a, degree: -weights.degree_of_ints(&x) };
        return Ok(TauResult { flag: i, d, nonzero: true, witness: Some(witness), search_box, proof_of_emptiness: false });
    }
    Ok(TauResult { flag: i, d, nonzero: false, witness: None, search_box, proof_of_emptiness: true })
}

/// Sorted distinct `-a(l)` in `[0, d_max)`: the shifts at which `H_I(d)` gains terms.
pub fn jump_spectrum(
    params: &OrbitParams,
    i: Subset,
    degree: (i64, i64),
    d_max: Rational,
    weights: &DegreeWeights,
) -> Result<Vec<Rational>> {
    check_flag(params.n, i)?;
    if !d_max.is_positive() || degree.0 > degree.1 {
        return Ok(Vec::new());
    }
    let rec = upsilon_terms(params, i, weights, degree, (-d_max, int(0)))?;
    let mut out: Vec<Rational> = rec.elements.iter().map(|t| -t.action).filter(|v| *v < d_max).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Diagonal,
    CliffordTorus,
    RealProjective,
}

/// `(1+t)^{N-1}`.
pub fn torus_series(n: usize) -> GradedDims {
    (1..n).fold(GradedDims::unit(0), |acc, _| acc.tensor(&GradedDims::from_pairs([(0, 1), (1, 1)])))
}

/// `∏_{i=1}^{N-1} (1+t^i)`, the mod-2 Poincaré series of `SO(N)`.
pub fn so_mod2_series(n: usize) -> GradedDims {
    (1..n as i64).fold(GradedDims::unit(0), |acc, i| acc.tensor(&GradedDims::from_pairs([(0, 1), (i, 1)])))
}

/// `⊕_I G(I) ⊗ H_I(d)`, times the cohomology of the torus or of `SO(N)` for each
/// non-diagonal side.
pub fn pair_hom(
    params: &OrbitParams,
    side_a: Side,
    side_b: Side,
    d: Rational,
    windows: &NovikovWindows,
    characteristic: u32,
    weights: &DegreeWeights,
) -> Result<GradedDims> {
    let n = params.n;
    if (side_a == Side::RealProjective || side_b == Side::RealProjective) && characteristic != 2 {
        return Err(Error::Precondition(format!(
            "the real projective side needs coefficients of characteristic 2, got {characteristic}"
        )));
    }
    let mut total = GradedDims::new();
    for ty in FlagType::all(n)? {
        let h = h_graded(params, ty.indices(), d, windows, weights)?;
        total.add(&g_space(ty).tensor(&h.graded));
    }
    for side in [side_a, side_b] {
        total = match side {
            Side::Diagonal => total,
            Side::CliffordTorus => total.tensor(&torus_series(n)),
            Side::RealProjective => total.tensor(&so_mod2_series(n)),
        };
    }
    Ok(total)
}
