//! The sheaf `S` in its two descriptions, their stalkwise cross-check, and the graded
//! modules `H_I(d)` with the non-vanishing certificate.
//!
//! `S` is assembled as `⊕_I G(I) ⊗ T_{-e_I} Y` (each copy of `Y` translated by `-e_I`,
//! hence shifted by `D(-e_I)`). Independently, its stalk at `p ∈ C_-°` is
//! `⊕_{l ∈ 𝕃 ∩ C_-, p ≪ l} H^*(FL(I_l))[D(l)]`.

mod certificate;
mod novikov;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flag_schubert::{betti, g_space, FlagType};
use crate::graded::GradedDims;
use crate::rational::{self, Rational};
use crate::root_system::{
    center_of_ints, check_rank, dominance_ll, CartanVector, Chamber, CenterClass, DegreeWeights, LatticeBox,
};
use crate::sheaf_complex::{cohomology_dims, stalk_complex, SheafComplex, YCopy};
use crate::subset::Subset;

pub use certificate::{certificate, CertificateRecord, CertificateReport, Verdict, CERTIFICATE_SCHEMA_VERSION};
pub use novikov::{
    h_graded, jump_spectrum, pair_hom, so_mod2_series, tau_nonzero, torus_series, upsilon_terms, NovikovRecord,
    NovikovTerm, NovikovWindows, Side, TauResult,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitParams {
    pub n: usize,
    #[serde(with = "rational::serde_one")]
    pub lambda: Rational,
}

impl OrbitParams {
    pub fn new(n: usize, lambda: Rational) -> Result<Self> {
        check_rank(n)?;
        if lambda <= Rational::from_integer(0) {
            return Err(Error::InvalidInput(format!("orbit scale λ = {lambda} must be positive")));
        }
        Ok(OrbitParams { n, lambda })
    }

    /// The overall shift `dim G - dim 𝔥 = N² - N` omitted from all reported degrees.
    pub fn normalization_shift(&self) -> i64 {
        let n = self.n as i64;
        n * n - n
    }
}

/// `-e_I` for each flag type `I`, with multiplicity `G(I)`.
fn s_copies(n: usize) -> Result<Vec<YCopy>> {
    Ok(FlagType::all(n)?
        .into_iter()
        .map(|ty| YCopy {
            flag: ty.indices(),
            translation: (1..n).map(|k| -(ty.indices().contains(k) as i64)).collect(),
            multiplicity: g_space(ty),
        })
        .collect())
}

/// `S ≅ ⊕_I G(I) ⊗ T_{-e_I} Y`, truncated to Y-lattice points of `window` and
/// optionally restricted to one center class.
pub fn build_s_mainbfs(
    n: usize,
    z: Option<CenterClass>,
    window: &LatticeBox,
    weights: &DegreeWeights,
) -> Result<SheafComplex> {
    crate::sheaf_complex::build_copies(n, window, weights, &s_copies(n)?, z)
}

/// Smallest cube containing, for every point and every copy translation, the lattice
/// terms that can contribute there.
pub fn covering_window(n: usize, points: &[CartanVector]) -> Result<LatticeBox> {
    check_rank(n)?;
    let mut lo = vec![0i64; n - 1];
    let mut hi = vec![0i64; n - 1];
    for p in points {
        for s in Subset::all(n - 1) {
            let q = p + &CartanVector::e_sum(n, s)?;
            let b = LatticeBox::certified_for(&q);
            if b.is_empty() {
                continue;
            }
            for k in 0..n - 1 {
                lo[k] = lo[k].min(b.lo()[k]);
                hi[k] = hi[k].max(b.hi()[k]);
            }
        }
    }
    let (a, b) = (*lo.iter().min().unwrap_or(&0), *hi.iter().max().unwrap_or(&0));
    LatticeBox::cube(n, a, b)
}

/// `⊕_{l ∈ 𝕃^z ∩ C_- ∩ window, p ≪ l} H^*(FL(I_l))`, degree `δ ↦ δ - D(l)`.
pub fn stalk_betti_nadahvat(
    n: usize,
    z: CenterClass,
    p: &CartanVector,
    window: &LatticeBox,
    weights: &DegreeWeights,
) -> Result<GradedDims> {
    if p.n() != n || window.n() != n || z.n() != n {
        return Err(Error::RankMismatch { left: n, right: p.n() });
    }
    if p.chamber() != Chamber::InteriorMinus {
        return Err(Error::Precondition(format!("{p} is not in the open negative chamber")));
    }
    let need = LatticeBox::certified_for(p);
    if !window.contains_box(&need) {
        return Err(Error::Margin(format!(
            "point {p} needs lattice box lo={:?} hi={:?}, window is lo={:?} hi={:?}",
            need.lo(),
            need.hi(),
            window.lo(),
            window.hi()
        )));
    }
    let mut out = GradedDims::new();
    for x in window.points() {
        if x.iter().any(|&c| c > 0) || center_of_ints(n, &x) != z {
            continue;
        }
        let l = CartanVector::from_ints(n, &x)?;
        if dominance_ll(p, &l)? {
            let ty = FlagType::new(n, l.i_set())?;
            out.add(&betti(ty).shifted(-weights.degree_of_ints(&x)));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StalkMismatch {
    pub point: CartanVector,
    pub mainbfs: GradedDims,
    pub nadahvat: GradedDims,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub n: usize,
    pub center: CenterClass,
    pub window: LatticeBox,
    pub compared: usize,
    pub excluded: Vec<CartanVector>,
    pub mismatches: Vec<StalkMismatch>,
    pub passed: bool,
}

/// Compares the two stalk descriptions of `S` at every sample; samples outside the
/// certified margin of `window` are excluded rather than compared.
pub fn crosscheck_stalks(
    params: &OrbitParams,
    z: CenterClass,
    samples: &[CartanVector],
    window: &LatticeBox,
    weights: &DegreeWeights,
) -> Result<CrosscheckReport> {
    let n = params.n;
    let s = build_s_mainbfs(n, Some(z), window, weights)?;
    let outcomes: Vec<Result<Option<StalkMismatch>>> = samples
        .par_iter()
        .map(|p| {
            let main = match stalk_complex(&s, z, p) {
                Ok(c) => cohomology_dims(&c)?,
                Err(Error::Margin(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            let nada = match stalk_betti_nadahvat(n, z, p, window, weights) {
                Ok(g) => g,
                Err(Error::Margin(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            Ok(Some(StalkMismatch { point: p.clone(), mainbfs: main, nadahvat: nada }))
        })
        .collect();
    let mut compared = 0;
    let mut excluded = Vec::new();
    let mut mismatches = Vec::new();
    for (p, o) in samples.iter().zip(outcomes) {
        match o? {
            None => excluded.push(p.clone()),
            Some(m) => {
                compared += 1;
                if m.mainbfs != m.nadahvat {
                    mismatches.push(m);
                }
            }
        }
    }
    Ok(CrosscheckReport {
        n,
        center: z,
        window: window.clone(),
        compared,
        passed: mismatches.is_empty(),
        excluded,
        mismatches,
    })
}

/// Random points of `C_-°` with coordinates `-a/b`, `0 < a/b <= depth`, `b <= max_den`.
pub fn sample_points(n: usize, count: usize, seed: u64, depth: i64, max_den: i64) -> Vec<CartanVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let coords = (0..n - 1)
                .map(|_| {
                    let b = rng.random_range(1..=max_den);
                    let a = rng.random_range(1..=depth * b);
                    Rational::new(-a, b)
                })
                .collect();
            CartanVector::new(n, coords).expect("rank checked by caller")
        })
        .collect()
}

#[cfg(test)]
mod tests;
