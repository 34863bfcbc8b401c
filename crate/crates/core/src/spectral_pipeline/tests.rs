use super::*;
use crate::rational::{frac, int};
use crate::root_system::center_class;
use crate::sheaf_complex::{delta_jump, jump_epsilon};

fn v(n: usize, x: &[i64]) -> CartanVector {
    CartanVector::from_ints(n, x).unwrap()
}

fn std_w(n: usize) -> DegreeWeights {
    DegreeWeights::standard(n)
}

fn params(n: usize) -> OrbitParams {
    OrbitParams::new(n, int(1)).unwrap()
}

#[test]
fn orbit_params_validate() {
    assert!(OrbitParams::new(3, int(0)).is_err());
    assert!(OrbitParams::new(1, int(1)).is_err());
    assert_eq!(params(4).normalization_shift(), 12);
}

#[test]
fn s_copies_and_multiplicities() {
    let s = build_s_mainbfs(2, None, &LatticeBox::cube(2, -2, 0).unwrap(), &std_w(2)).unwrap();
    s.validate().unwrap();
    let mults: Vec<_> = s.pieces().iter().map(|p| (p.flag, p.translation.clone())).collect();
    assert_eq!(mults, vec![(Subset::EMPTY, v(2, &[0])), (Subset::singleton(1), v(2, &[-1]))]);
    let g1 = s.generators().iter().find(|g| g.tag.as_ref().unwrap().flag == Subset::singleton(1)).unwrap();
    assert_eq!(g1.multiplicity, GradedDims::unit(2));
    let total: u64 = s_copies(3).unwrap().iter().map(|c| c.multiplicity.total()).sum();
    assert_eq!(total, 6);
    assert!(build_s_mainbfs(2, None, &LatticeBox::cube(2, 0, -1).unwrap(), &std_w(2)).is_err());
}

#[test]
fn nadahvat_examples() {
    let z0 = CenterClass::identity(2);
    let w = LatticeBox::cube(2, -6, 2).unwrap();
    let p = CartanVector::new(2, vec![frac(-5, 2)]).unwrap();
    let g = stalk_betti_nadahvat(2, z0, &p, &w, &std_w(2)).unwrap();
    assert_eq!(g, GradedDims::from_pairs([(0, 1), (-2, 1), (-4, 1)]));
    let bad = CartanVector::new(2, vec![frac(1, 2)]).unwrap();
    assert!(matches!(stalk_betti_nadahvat(2, z0, &bad, &w, &std_w(2)), Err(Error::Precondition(_))));
    let deep = CartanVector::new(2, vec![int(-40)]).unwrap();
    assert!(matches!(stalk_betti_nadahvat(2, z0, &deep, &w, &std_w(2)), Err(Error::Margin(_))));
}

#[test]
fn mainbfs_stalk_matches_hand_value() {
    let z0 = CenterClass::identity(2);
    let p = CartanVector::new(2, vec![frac(-5, 2)]).unwrap();
    let w = covering_window(2, &[p.clone()]).unwrap();
    let s = build_s_mainbfs(2, Some(z0), &w, &std_w(2)).unwrap();
    let h = cohomology_dims(&stalk_complex(&s, z0, &p).unwrap()).unwrap();
    assert_eq!(h, GradedDims::from_pairs([(0, 1), (-2, 1), (-4, 1)]));
}

#[test]
fn crosscheck_small_ranks() {
    for n in 2..=3 {
        let samples = sample_points(n, 30, 11, 2, 3);
        let w = covering_window(n, &samples).unwrap();
        for z in CenterClass::all(n) {
            let r = crosscheck_stalks(&params(n), z, &samples, &w, &std_w(n)).unwrap();
            assert!(r.passed, "N={n} z={z}: {:?}", r.mismatches.first());
            assert_eq!(r.compared, samples.len());
        }
    }
}

#[test]
fn crosscheck_excludes_deep_samples() {
    let w = LatticeBox::radius(2, 1).unwrap();
    let deep = vec![CartanVector::new(2, vec![int(-9)]).unwrap()];
    let r = crosscheck_stalks(&params(2), CenterClass::identity(2), &deep, &w, &std_w(2)).unwrap();
    assert_eq!((r.compared, r.excluded.len()), (0, 1));
}

#[test]
fn crosscheck_is_blind_to_linear_weight_changes() {
    // Both sides use D via the same linear form, so the check holds for other weights too.
    let n = 3;
    let samples = sample_points(n, 10, 5, 2, 2);
    let w = covering_window(n, &samples).unwrap();
    let half = DegreeWeights::custom(n, vec![2, 2]).unwrap();
    let r = crosscheck_stalks(&params(n), CenterClass::identity(n), &samples, &w, &half).unwrap();
    assert!(r.passed);
}

#[test]
fn jump_at_origin_gives_flag_cohomology() {
    for n in 2..=3 {
        let z0 = CenterClass::identity(n);
        let m = CartanVector::zero(n);
        for ty in FlagType::all(n).unwrap() {
            let corners: Vec<CartanVector> = ty
                .indices()
                .subsets()
                .map(|l| &m + &CartanVector::f_sum(n, l).unwrap().scaled(jump_epsilon(n)))
                .collect();
            let w = covering_window(n, &corners).unwrap();
            let s = build_s_mainbfs(n, Some(z0), &w, &std_w(n)).unwrap();
            let h = delta_jump(&s, z0, ty.indices(), &m, jump_epsilon(n)).unwrap();
            assert_eq!(h, betti(ty), "{ty}");
        }
    }
}

#[test]
fn jump_at_lattice_points_of_c_minus() {
    let n = 3;
    for x in LatticeBox::cube(n, -2, 0).unwrap().points() {
        let m = v(n, &x);
        let z = center_class(&m).unwrap();
        let i = m.i_set();
        let corners: Vec<CartanVector> =
            i.subsets().map(|l| &m + &CartanVector::f_sum(n, l).unwrap().scaled(jump_epsilon(n))).collect();
        let w = covering_window(n, &corners).unwrap();
        let s = build_s_mainbfs(n, Some(z), &w, &std_w(n)).unwrap();
        let h = delta_jump(&s, z, i, &m, jump_epsilon(n)).unwrap();
        let expect = betti(FlagType::new(n, i).unwrap()).shifted(-std_w(n).degree(&m).unwrap());
        assert_eq!(h, expect, "m = {m}");
    }
}

#[test]
fn upsilon_examples() {
    let p2 = params(2);
    let rec = upsilon_terms(&p2, Subset::EMPTY, &std_w(2), (-40, 40), (int(-3), int(3))).unwrap();
    let zero = rec.elements.iter().find(|t| t.lattice == CartanVector::zero(2)).unwrap();
    assert_eq!((zero.action, zero.degree), (int(0), 0));
    let m2 = rec.elements.iter().find(|t| t.lattice == v(2, &[2])).unwrap();
    assert_eq!((m2.action, m2.degree), (int(1), 4));
    assert!(rec.elements.iter().all(|t| t.lattice.x(1).to_integer() % 2 == 0));

    let l = v(3, &[-1, -1]);
    let rec = upsilon_terms(&params(3), Subset::singleton(2), &std_w(3), (-40, 40), (int(-2), int(2))).unwrap();
    let t = rec.elements.iter().find(|t| t.lattice == l).unwrap();
    assert_eq!(t.action, int(-1));
    assert_eq!(t.degree, -8);
    assert!(rec.elements.iter().all(|t| t.lattice.x(2) <= int(-1)));
    assert!(upsilon_terms(&p2, Subset::EMPTY, &std_w(2), (1, 0), (int(0), int(1))).is_err());
}

/// Brute force over a large box confirms the derived enumeration box.
#[test]
fn upsilon_box_is_complete() {
    for n in 2..=4 {
        for lam in [int(1), frac(3, 2)] {
            let p = OrbitParams::new(n, lam).unwrap();
            for i in Subset::all(n - 1) {
                let (deg, act) = ((-12, 8), (frac(-5, 2), int(2)));
                let rec = upsilon_terms(&p, i, &std_w(n), deg, act).unwrap();
                let mut brute = Vec::new();
                for x in LatticeBox::radius(n, 20).unwrap().points() {
                    let ok_caps = (2..n).all(|j| x[j - 1] <= -(i.contains(j) as i64));
                    let a = action_of_for_test(&p, &x);
                    let d = -std_w(n).degree_of_ints(&x);
                    if ok_caps && center_of_ints(n, &x).residue() == 0 && act.0 <= a && a <= act.1 && deg.0 <= d && d <= deg.1 {
                        brute.push(v(n, &x));
                    }
                }
                let got: Vec<_> = rec.elements.iter().map(|t| t.lattice.clone()).collect();
                assert_eq!(got, brute, "N={n} I={i:?}");
            }
        }
    }
}

fn action_of_for_test(p: &OrbitParams, x: &[i64]) -> Rational {
    let s: i64 = x.iter().enumerate().map(|(i, v)| v * (p.n as i64 - 1 - i as i64)).sum();
    p.lambda * Rational::new(s, p.n as i64)
}

#[test]
fn h_graded_examples() {
    let win = NovikovWindows { degree_lo: 0, degree_hi: 8, action_max: int(2) };
    let h = h_graded(&params(2), Subset::EMPTY, int(0), &win, &std_w(2)).unwrap();
    assert_eq!(h.graded, GradedDims::from_pairs([(0, 1), (4, 1), (8, 1)]));
    let empty = NovikovWindows { degree_lo: 1, degree_hi: 0, action_max: int(2) };
    assert!(h_graded(&params(2), Subset::EMPTY, int(0), &empty, &std_w(2)).unwrap().graded.is_zero());
    assert!(h_graded(&params(2), Subset::EMPTY, int(-1), &win, &std_w(2)).is_err());
    for n in 2..=4 {
        for i in Subset::all(n - 1) {
            let h = h_graded(&params(n), i, int(0), &NovikovWindows::default(), &std_w(n)).unwrap();
            assert!(!h.elements.is_empty(), "S_I(0) empty for N={n} I={i:?}");
        }
    }
}

#[test]
fn h_graded_grows_by_the_new_action_band() {
    let win = NovikovWindows::default();
    for n in 2..=4 {
        for i in Subset::all(n - 1) {
            let base = h_graded(&params(n), i, int(0), &win, &std_w(n)).unwrap();
            for d in [frac(1, 2), int(1), int(2), int(5)] {
                let hd = h_graded(&params(n), i, d, &win, &std_w(n)).unwrap();
                let band = upsilon_terms(&params(n), i, &std_w(n), (win.degree_lo, win.degree_hi), (-d, int(0))).unwrap();
                let new_terms = band.elements.iter().filter(|t| t.action < int(0));
                let mut expect = base.graded.clone();
                for t in new_terms {
                    expect.add_at(t.degree, 1);
                }
                assert_eq!(hd.graded, expect);
                assert!(base.elements.iter().all(|t| hd.elements.contains(t)));
            }
        }
    }
}

#[test]
fn tau_examples() {
    let t = tau_nonzero(&params(3), Subset::EMPTY, int(0), &std_w(3)).unwrap();
    assert_eq!(t.witness.unwrap().lattice, CartanVector::zero(3));
    let t = tau_nonzero(&params(2), Subset::singleton(1), int(1), &std_w(2)).unwrap();
    assert!(t.nonzero);
    assert_eq!(t.witness.unwrap().lattice, CartanVector::zero(2));
    let t = tau_nonzero(&params(3), Subset::from_indices([1, 2]), int(0), &std_w(3)).unwrap();
    let w = t.witness.unwrap();
    assert_eq!(w.lattice, v(3, &[2, -1]));
    assert_eq!(w.action, int(1));
    assert!(tau_nonzero(&params(3), Subset::EMPTY, int(-1), &std_w(3)).is_err());
}

#[test]
fn witnesses_lie_in_s_i_zero() {
    for n in 2..=6 {
        for lam in [int(1), frac(3, 2), frac(1, 7)] {
            let p = OrbitParams::new(n, lam).unwrap();
            for i in Subset::all(n - 1) {
                let t = tau_nonzero(&p, i, int(0), &std_w(n)).unwrap();
                let w = t.witness.expect("witness");
                let x = w.lattice.integral_coords().unwrap();
                assert_eq!(center_of_ints(n, &x).residue(), 0);
                assert!((2..n).all(|j| x[j - 1] <= -(i.contains(j) as i64)));
                assert!(w.action >= int(0));
                assert!(t.search_box.contains(&w.lattice));
            }
        }
    }
}

#[test]
fn certificate_examples() {
    let grid = [int(0), frac(1, 2), int(1), int(10)];
    for n in 2..=3 {
        let r = certificate(&params(n), &grid, &NovikovWindows::default(), &std_w(n)).unwrap();
        assert!(r.verdict.certified);
        assert_eq!(r.records.len(), grid.len() << (n - 1));
        assert_eq!(r.normalization_shift, (n * n - n) as i64);
    }
    let r = certificate(&params(2), &[], &NovikovWindows::default(), &std_w(2)).unwrap();
    assert_eq!(r.verdict.status, "no samples");
    let csv = certificate(&params(2), &[int(0)], &NovikovWindows::default(), &std_w(2)).unwrap().to_csv();
    assert!(csv.starts_with("flag,d,degree,dim\n"));
}

#[test]
fn jump_spectrum_examples() {
    let p = params(2);
    let s = jump_spectrum(&p, Subset::EMPTY, (-40, 40), int(3), &std_w(2)).unwrap();
    assert_eq!(s, vec![int(0), int(1), int(2)]);
    assert_eq!(jump_spectrum(&p, Subset::EMPTY, (-40, 40), int(1), &std_w(2)).unwrap(), vec![int(0)]);
    assert!(jump_spectrum(&p, Subset::EMPTY, (-40, 40), int(0), &std_w(2)).unwrap().is_empty());
    let p3 = OrbitParams::new(2, int(3)).unwrap();
    let s3 = jump_spectrum(&p3, Subset::EMPTY, (-40, 40), int(9), &std_w(2)).unwrap();
    assert_eq!(s3, vec![int(0), int(3), int(6)]);
}

#[test]
fn jump_spectrum_is_stable_in_the_degree_window() {
    for n in 2..=4 {
        for i in Subset::all(n - 1) {
            let a = jump_spectrum(&params(n), i, (-60, 60), int(3), &std_w(n)).unwrap();
            let b = jump_spectrum(&params(n), i, (-120, 120), int(3), &std_w(n)).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn pair_hom_factors() {
    let win = NovikovWindows::default();
    let diag = pair_hom(&params(2), Side::Diagonal, Side::Diagonal, int(0), &win, 0, &std_w(2)).unwrap();
    let tt = pair_hom(&params(2), Side::CliffordTorus, Side::CliffordTorus, int(0), &win, 0, &std_w(2)).unwrap();
    assert_eq!(tt, diag.tensor(&GradedDims::from_pairs([(0, 1), (1, 2), (2, 1)])));
    assert!(pair_hom(&params(2), Side::RealProjective, Side::Diagonal, int(0), &win, 0, &std_w(2)).is_err());
    assert!(pair_hom(&params(2), Side::RealProjective, Side::Diagonal, int(0), &win, 2, &std_w(2)).is_ok());
}

/// Mod-2 cellular cohomology: `RP^m` has one cell per dimension and boundary maps
/// `1 + (-1)^k`, which vanish mod 2.
fn rp_mod2(m: i64) -> GradedDims {
    let mut g = GradedDims::new();
    for k in 0..=m {
        let d_in = if k >= 1 { (1 + (-1i64).pow(k as u32)).rem_euclid(2) } else { 0 };
        let d_out = if k < m { (1 + (-1i64).pow(k as u32 + 1)).rem_euclid(2) } else { 0 };
        g.add_at(k, (1 - d_in - d_out) as u64);
    }
    g
}

#[test]
fn so_series_matches_cellular_models() {
    let circle = GradedDims::from_pairs([(0, 1), (1, 1)]);
    let s3 = GradedDims::from_pairs([(0, 1), (3, 1)]);
    assert_eq!(so_mod2_series(2), circle);
    assert_eq!(so_mod2_series(3), rp_mod2(3));
    assert_eq!(so_mod2_series(4), s3.tensor(&rp_mod2(3)));
    assert_eq!(torus_series(3), circle.tensor(&circle));
}
