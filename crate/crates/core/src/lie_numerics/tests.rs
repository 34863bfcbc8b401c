use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::trials::{default_klyachko_bound, random_interval_unitary, random_skew, random_unitary};
use super::*;
use crate::rational::frac;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn diag_skew(lambdas: &[f64]) -> SkewHermitian {
    let d = nalgebra::DVector::from_iterator(lambdas.len(), lambdas.iter().map(|&l| Complex64::new(0.0, l)));
    SkewHermitian::new(CMatrix::from_diagonal(&d)).unwrap()
}

/// Spectrum of `H = A + iB` from the real symmetric embedding `[[A, -B], [B, A]]`, where
/// every eigenvalue appears twice.
fn embedded_spectrum(x: &SkewHermitian) -> Vec<f64> {
    let h = x.hermitian();
    let n = h.nrows();
    let real = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = h[(r % n, c % n)];
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let mut ev: Vec<f64> = real.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev.into_iter().step_by(2).collect()
}

fn taylor_exp(m: &CMatrix) -> CMatrix {
    let n = m.nrows();
    let mut term = CMatrix::identity(n, n);
    let mut sum = term.clone();
    for k in 1..60 {
        term = &term * m * Complex64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    sum
}

#[test]
fn validation() {
    let mut m = CMatrix::zeros(2, 2);
    m[(0, 1)] = Complex64::new(1.0, 0.0);
    assert!(SkewHermitian::new(m.clone()).is_err());
    m[(1, 0)] = Complex64::new(-1.0, 0.0);
    assert!(SkewHermitian::new(m.clone()).is_ok());
    m[(0, 0)] = Complex64::new(0.0, 1.0);
    assert!(SkewHermitian::new(m).is_err());
    assert!(SkewHermitian::new(CMatrix::zeros(2, 3)).is_err());
    assert!(SpectrumVector::new(vec![1.0, 0.5]).is_err());
    assert_eq!(SpectrumVector::new(vec![-1.0, 1.0]).unwrap().lambdas(), &[1.0, -1.0]);
}

#[test]
fn zero_spectrum() {
    let f = hermitian_eigs(&SkewHermitian::zero(4)).unwrap();
    assert!(f.spectrum.lambdas().iter().all(|&l| l == 0.0));
}

#[test]
fn diagonal_e1() {
    let x = SkewHermitian::from_cartan(&CartanVector::e(2, 1).unwrap());
    let s = norm_map(&x).unwrap();
    assert!((s.lambdas()[0] - PI).abs() < 1e-12);
    assert!((s.lambdas()[1] + PI).abs() < 1e-12);
}

#[test]
fn eigs_match_real_embedding() {
    let mut r = rng(7);
    for n in 2..=8 {
        for _ in 0..20 {
            let x = random_skew(n, &mut r, 3.0);
            let f = hermitian_eigs(&x).unwrap();
            let oracle = embedded_spectrum(&x);
            for (a, b) in f.spectrum.lambdas().iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-9, "{a} vs {b}");
            }
            assert!(f.residual < 1e-9);
            let u = &f.vectors;
            assert!(max_abs(&(u.adjoint() * u - CMatrix::identity(n, n))) < 1e-10);
        }
    }
}

#[test]
fn degenerate_spectrum() {
    let u = random_unitary(4, &mut rng(3)).unwrap();
    let x = SkewHermitian::from_frame(&u, &[1.0, 1.0, -1.0, -1.0]);
    let s = norm_map(&x).unwrap();
    for (a, b) in s.lambdas().iter().zip([1.0, 1.0, -1.0, -1.0]) {
        assert!((a - b).abs() < 1e-10);
    }
}

#[test]
fn conjugation_invariance() {
    let mut r = rng(11);
    for n in 2..=6 {
        for _ in 0..50 {
            let x = random_skew(n, &mut r, 2.0);
            let u = random_unitary(n, &mut r).unwrap();
            let a = norm_map(&x).unwrap();
            let b = norm_map(&x.conjugate(&u)).unwrap();
            for (p, q) in a.lambdas().iter().zip(b.lambdas()) {
                assert!((p - q).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn exp_matches_taylor() {
    let mut r = rng(5);
    for n in 2..=5 {
        let x = random_skew(n, &mut r, 0.7);
        assert!(max_abs(&(exp_skew(&x).unwrap() - taylor_exp(x.matrix()))) < 1e-10);
    }
}

#[test]
fn unitary_args_recover_logarithm() {
    let mut r = rng(9);
    let x = random_skew(4, &mut r, 0.3);
    let g = exp_skew(&x).unwrap();
    let (mut args, _) = unitary_args(&g).unwrap();
    args.sort_by(|a, b| b.total_cmp(a));
    for (a, l) in args.iter().zip(norm_map(&x).unwrap().lambdas()) {
        assert!((a - l).abs() < 1e-10);
    }
    let minus = CMatrix::identity(2, 2) * Complex64::new(-1.0, 0.0);
    assert!(matches!(unitary_args(&minus), Err(Error::Precondition(_))));
}

#[test]
fn triangle_trivial_cases() {
    let x = random_skew(4, &mut rng(1), 1.0);
    let out = check_triangle(&x, &SkewHermitian::zero(4)).unwrap();
    assert!(out.passed && out.max_violation.abs() < 1e-12);
    let out = check_triangle(&x, &x.scale(-1.0)).unwrap();
    assert!(out.passed);
    assert!(norm_map(&x.add(&x.scale(-1.0))).unwrap().lambdas().iter().all(|&l| l == 0.0));
}

#[test]
fn pairing_trivial_and_aligned() {
    let w = random_skew(5, &mut rng(2), 1.0);
    let out = check_pairing_bound(&w, &w).unwrap();
    let s: f64 = norm_map(&w).unwrap().lambdas().iter().map(|l| l * l).sum();
    assert!(out.equality && (out.lhs - s).abs() < 1e-9);
    let mu = norm_map(&random_skew(5, &mut rng(3), 2.0)).unwrap();
    let x = aligned_partner(&w, &mu).unwrap();
    assert!(check_pairing_bound(&w, &x).unwrap().equality);
    let y = x.conjugate(&random_unitary(5, &mut rng(4)).unwrap());
    let out = check_pairing_bound(&w, &y).unwrap();
    assert!(out.passed && !out.equality);
}

#[test]
fn klyachko_trivial_cases() {
    let b = default_klyachko_bound(3);
    let bs = norm_map(&SkewHermitian::from_cartan(&b)).unwrap().partial_sums();
    let x = diag_skew(&[bs[0] / 2.0, 0.0, -bs[0] / 2.0]);
    let out = check_klyachko(&x, &SkewHermitian::zero(3), &b).unwrap();
    assert!(out.passed);
    let (z, _) = klyachko_log(&x, &SkewHermitian::zero(3)).unwrap();
    assert!(max_abs(&(z.matrix() - x.matrix())) < 1e-12);
    let y = diag_skew(&[0.0, bs[0] / 3.0, -bs[0] / 3.0]);
    let (z, _) = klyachko_log(&x, &y).unwrap();
    assert!(max_abs(&(z.matrix() - x.add(&y).matrix())) < 1e-12);
}

#[test]
fn klyachko_preconditions() {
    let big = default_klyachko_bound(3).scaled(frac(1000, 1));
    let x = SkewHermitian::zero(3);
    assert!(matches!(check_klyachko(&x, &x, &big), Err(Error::Precondition(_))));
    let neg = -&default_klyachko_bound(3);
    assert!(matches!(check_klyachko(&x, &x, &neg), Err(Error::Precondition(_))));
    let b = default_klyachko_bound(3);
    let far = random_skew(3, &mut rng(1), 1.0);
    assert!(matches!(check_klyachko(&far, &x, &b), Err(Error::Precondition(_))));
}

#[test]
fn interval_trivial_cases() {
    let g1 = random_interval_unitary(4, &mut rng(8)).unwrap();
    let id = IntervalUnitary::diagonal(&[0.0; 4], 0.0, 0.0).unwrap();
    let out = check_interval_product(&g1, &id).unwrap();
    assert!(out.passed && !out.vacuous);
    let a = IntervalUnitary::diagonal(&[0.5, -0.2, -0.3], -0.3, 0.5).unwrap();
    let b = IntervalUnitary::diagonal(&[0.1, 0.4, -0.5], -0.5, 0.4).unwrap();
    let (args, _) = unitary_args(&(&a.g * &b.g)).unwrap();
    let mut args = args;
    args.sort_by(|x, y| x.total_cmp(y));
    for (p, q) in args.iter().zip([-0.8, 0.2, 0.6]) {
        assert!((p - q).abs() < 1e-12);
    }
    assert!(check_interval_product(&a, &b).unwrap().passed);
    let wide = IntervalUnitary::diagonal(&[3.0, -3.0], -3.2, 3.2).unwrap();
    assert!(check_interval_product(&wide, &wide).unwrap().vacuous);
    // Interval too narrow for the true arguments of the product.
    let tight = IntervalUnitary { g: a.g.clone(), a: -0.1, b: 0.1 };
    assert!(!check_interval_product(&tight, &b).unwrap().passed);
    assert!(IntervalUnitary::diagonal(&[0.5, 0.1], -1.0, 1.0).is_err());
}

#[test]
fn trials_pass_and_reproduce() {
    let opts = NumericsOptions { n: 4, trials: 60, seed: 1, inject_fault: false };
    let a = run_trials(&opts).unwrap();
    assert!(a.passed, "{a:?}");
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&run_trials(&opts).unwrap()).unwrap());
    for s in a.lemmas.values() {
        assert_eq!(s.passed, 60);
    }
}

#[test]
fn trials_zero_and_fault() {
    let r = run_trials(&NumericsOptions { n: 3, trials: 0, seed: 0, inject_fault: false }).unwrap();
    assert!(r.passed && !r.warnings.is_empty());
    let r = run_trials(&NumericsOptions { n: 3, trials: 5, seed: 0, inject_fault: true }).unwrap();
    assert!(!r.passed);
    assert_eq!(r.lemmas["triangle"].failed, 1);
    assert!(run_trials(&NumericsOptions { n: 1, trials: 1, seed: 0, inject_fault: false }).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangle_holds(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let x = random_skew(n, &mut r, 2.0);
        let y = random_skew(n, &mut r, 0.5);
        prop_assert!(check_triangle(&x, &y).unwrap().passed);
    }

    #[test]
    fn pairing_holds(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let w = random_skew(n, &mut r, 1.0);
        let x = random_skew(n, &mut r, 3.0);
        prop_assert!(check_pairing_bound(&w, &x).unwrap().passed);
    }

    #[test]
    fn interval_holds(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let g1 = random_interval_unitary(n, &mut r).unwrap();
        let g2 = random_interval_unitary(n, &mut r).unwrap();
        prop_assert!(check_interval_product(&g1, &g2).unwrap().passed);
    }
}
