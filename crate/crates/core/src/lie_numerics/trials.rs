use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{
    aligned_partner, check_interval_product, check_klyachko, check_pairing_bound, check_triangle, IntervalUnitary,
};
use super::{hermitian_eigs, norm_map, CMatrix, SkewHermitian, MAX_NUMERIC_RANK};
use crate::error::{Error, Result};
use crate::rational::frac;
use crate::root_system::CartanVector;

const MAX_RESAMPLES: usize = 100;

pub const LEMMAS: [&str; 5] = ["triangle", "pairing_bound", "pairing_equality", "klyachko", "interval_product"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericsOptions {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Feeds a matrix with a broken skew-symmetry into the first triangle trial.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LemmaStats {
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub rejected: usize,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericsReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub inject_fault: bool,
    pub lemmas: BTreeMap<String, LemmaStats>,
    pub passed: bool,
    pub warnings: Vec<String>,
}

/// Outcome of one trial: pass flag, residual, number of rejected samples.
type Trial = (bool, f64, usize);

/// Runs every lemma check on `trials` seeded samples. The RNG of a trial depends only on
/// `(seed, lemma, trial index)`, so results do not depend on scheduling.
pub fn run_trials(opts: &NumericsOptions) -> Result<NumericsReport> {
    if !(2..=MAX_NUMERIC_RANK).contains(&opts.n) {
        return Err(Error::InvalidRank(opts.n));
    }
    let mut lemmas = BTreeMap::new();
    for (li, name) in LEMMAS.iter().enumerate() {
        let results: Vec<Trial> = (0..opts.trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(opts.seed, li, t);
                let fault = opts.inject_fault && li == 0 && t == 0;
                run_one(name, opts.n, &mut rng, fault)
            })
            .collect();
        let mut stats = LemmaStats { trials: opts.trials, ..Default::default() };
        for (ok, residual, rejected) in results {
            if ok {
                stats.passed += 1;
            } else {
                stats.failed += 1;
            }
            stats.rejected += rejected;
            stats.max_residual = stats.max_residual.max(residual);
        }
        lemmas.insert(name.to_string(), stats);
    }
    let mut warnings = Vec::new();
    if opts.trials == 0 {
        warnings.push("no trials requested; the pass is vacuous".to_string());
    }
    let passed = lemmas.values().all(|s| s.failed == 0);
    Ok(NumericsReport {
        n: opts.n,
        trials: opts.trials,
        seed: opts.seed,
        inject_fault: opts.inject_fault,
        lemmas,
        passed,
        warnings,
    })
}

fn trial_rng(seed: u64, lemma: usize, trial: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(lemma as u64).to_le_bytes());
    key[16..24].copy_from_slice(&(trial as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn run_one(name: &str, n: usize, rng: &mut ChaCha8Rng, fault: bool) -> Trial {
    let r = match name {
        "triangle" => trial_triangle(n, rng, fault),
        "pairing_bound" => trial_pairing(n, rng),
        "pairing_equality" => trial_equality(n, rng),
        "klyachko" => trial_klyachko(n, rng),
        _ => trial_interval(n, rng),
    };
    r.unwrap_or((false, f64::INFINITY, 0))
}

fn trial_triangle(n: usize, rng: &mut ChaCha8Rng, fault: bool) -> Result<Trial> {
    let x = if fault { corrupted(n, rng)? } else { scaled_skew(n, rng) };
    let y = scaled_skew(n, rng);
    let out = check_triangle(&x, &y)?;
    Ok((out.passed, out.max_violation.max(0.0), 0))
}

fn trial_pairing(n: usize, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let w = scaled_skew(n, rng);
    let x = scaled_skew(n, rng);
    let out = check_pairing_bound(&w, &x)?;
    Ok((out.passed, (-out.gap).max(0.0), 0))
}

fn trial_equality(n: usize, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let w = scaled_skew(n, rng);
    let mu = norm_map(&scaled_skew(n, rng))?;
    let x = aligned_partner(&w, &mu)?;
    let out = check_pairing_bound(&w, &x)?;
    Ok((out.passed && out.equality, out.gap.abs(), 0))
}

/// `b = e₁/(1000N) + Σ e_k/(10⁶N)` in crate units, strictly inside `C_+` and below
/// `e₁/(100N)` for `N ≤ 12`.
pub fn default_klyachko_bound(n: usize) -> CartanVector {
    let m = n as i64;
    let mut coords = vec![frac(1, 1_000_000 * m); n - 1];
    coords[0] += frac(1, 1000 * m);
    CartanVector::new(n, coords).expect("valid rank")
}

fn trial_klyachko(n: usize, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let b = default_klyachko_bound(n);
    let bs = norm_map(&SkewHermitian::from_cartan(&b))?.partial_sums();
    let mut rejected = 0;
    loop {
        let x = below(&random_skew(n, rng, 1.0), &bs, rng)?;
        let y = below(&random_skew(n, rng, 1.0), &bs, rng)?;
        match check_klyachko(&x, &y, &b) {
            Ok(out) => {
                let residual = out.exp_error.max(out.norm_violation).max(out.trace);
                return Ok((out.passed, residual, rejected));
            }
            Err(Error::Precondition(_)) if rejected < MAX_RESAMPLES => rejected += 1,
            Err(e) => return Err(e),
        }
    }
}

/// Rescales `x` so that its partial sums stay below `bs`.
fn below(x: &SkewHermitian, bs: &[f64], rng: &mut ChaCha8Rng) -> Result<SkewHermitian> {
    let xs = norm_map(x)?.partial_sums();
    let t = xs.iter().zip(bs).map(|(v, c)| c / v).fold(f64::INFINITY, f64::min);
    Ok(x.scale(t * rng.random_range(0.05..1.0)))
}

fn trial_interval(n: usize, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let g1 = random_interval_unitary(n, rng)?;
    let g2 = random_interval_unitary(n, rng)?;
    let out = check_interval_product(&g1, &g2)?;
    Ok((out.passed, out.max_violation.max(0.0), 0))
}

/// Arguments with zero sum and spread at most `2.8`, shifted by `2πm/N`, with slack on
/// both ends of the interval.
pub fn random_interval_unitary(n: usize, rng: &mut ChaCha8Rng) -> Result<IntervalUnitary> {
    let spread: f64 = rng.random_range(0.0..1.4);
    let mut args: Vec<f64> = (0..n).map(|_| rng.random_range(-spread..=spread)).collect();
    let mean = args.iter().sum::<f64>() / n as f64;
    let shift = 2.0 * PI * rng.random_range(0..n) as f64 / n as f64;
    for a in &mut args {
        *a += shift - mean;
    }
    let lo = args.iter().copied().fold(f64::INFINITY, f64::min) - rng.random_range(0.0..0.1);
    let hi = args.iter().copied().fold(f64::NEG_INFINITY, f64::max) + rng.random_range(0.0..0.1);
    let u = random_unitary(n, rng)?;
    IntervalUnitary::from_frame(&u, &args, lo, hi)
}

/// Scale drawn log-uniformly from `[0.1, 10]`.
fn scaled_skew(n: usize, rng: &mut ChaCha8Rng) -> SkewHermitian {
    let scale = 10f64.powf(rng.random_range(-1.0..1.0));
    random_skew(n, rng, scale)
}

/// `i(G + G†)/2` with Gaussian `G` and the trace removed, times `scale`.
pub fn random_skew(n: usize, rng: &mut ChaCha8Rng, scale: f64) -> SkewHermitian {
    let g = CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal))
    });
    SkewHermitian::project(g * Complex64::new(0.0, scale))
}

/// Eigenframe of a random Hermitian matrix.
pub fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> Result<CMatrix> {
    Ok(hermitian_eigs(&random_skew(n, rng, 1.0))?.vectors)
}

fn corrupted(n: usize, rng: &mut ChaCha8Rng) -> Result<SkewHermitian> {
    let mut m = random_skew(n, rng, 1.0).matrix().clone();
    m[(0, 1)] += Complex64::new(0.5, 0.0);
    SkewHermitian::new(m)
}
