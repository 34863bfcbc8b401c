use proptest::prelude::*;

use super::*;
use crate::rational::frac;

fn v(n: usize, x: &[i64]) -> CartanVector {
    CartanVector::from_ints(n, x).unwrap()
}

/// `-Tr(AB)` for diagonal `A = i·diag(a)`, `B = i·diag(b)`.
fn trace_pairing(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

#[test]
fn pair_e_matches_trace_form() {
    assert_eq!(v(2, &[1]).pair_e(1).unwrap(), frac(1, 2));
    assert_eq!(v(3, &[1, 0]).pair_e(1).unwrap(), frac(2, 3));
    assert_eq!(CartanVector::zero(5).pair_e(3).unwrap(), int(0));
    for n in 2..=7 {
        for j in 1..n {
            for k in 1..n {
                let ej = CartanVector::e(n, j).unwrap();
                let ek = CartanVector::e(n, k).unwrap();
                let tr = trace_pairing(&ej.diagonal_entries(), &ek.diagonal_entries());
                assert_eq!(ej.pair_e(k).unwrap(), tr, "N={n} j={j} k={k}");
            }
        }
    }
}

#[test]
fn pair_f_examples() {
    let f1 = CartanVector::f(3, 1).unwrap();
    assert_eq!(f1.pair_f(1).unwrap(), int(2));
    assert_eq!(f1.pair_f(2).unwrap(), int(-1));
    assert!(f1.pair_f(3).is_err());
    assert!(f1.pair_e(0).is_err());
}

#[test]
fn bases_are_dual_and_f_expands() {
    for n in 2..=8 {
        for j in 1..n {
            let fj = CartanVector::f(n, j).unwrap();
            let ej = CartanVector::e(n, j).unwrap();
            let diag = fj.diagonal_entries();
            for (s, d) in diag.iter().enumerate() {
                let expect = if s + 1 == j { 1 } else if s == j { -1 } else { 0 };
                assert_eq!(*d, int(expect));
            }
            for k in 1..n {
                let delta = int((j == k) as i64);
                assert_eq!(ej.pair_f(k).unwrap(), delta);
                assert_eq!(fj.pair_e(k).unwrap(), delta);
            }
        }
    }
}

#[test]
fn dominance_examples() {
    assert!(dominance_leq(&v(2, &[-1]), &CartanVector::zero(2)).unwrap());
    let x = v(3, &[1, -1]);
    assert!(dominance_leq(&x, &x).unwrap());
    assert!(!dominance_ll(&x, &x).unwrap());
    let z = CartanVector::zero(3);
    assert!(!dominance_leq(&x, &z).unwrap());
    assert!(!dominance_leq(&z, &x).unwrap());
    assert!(dominance_leq(&x, &v(4, &[0, 0, 0])).is_err());
}

#[test]
fn chamber_examples() {
    let z = CartanVector::zero(2);
    assert_eq!(weyl_chamber(&z), Chamber::BoundaryMinus);
    assert_eq!(i_set(&z), Subset::EMPTY);
    let mf1 = -&CartanVector::f(2, 1).unwrap();
    assert_eq!(weyl_chamber(&mf1), Chamber::InteriorMinus);
    assert_eq!(i_set(&mf1), Subset::singleton(1));
    let me1 = v(3, &[-1, 0]);
    assert_eq!(weyl_chamber(&me1), Chamber::BoundaryMinus);
    assert_eq!(i_set(&me1), Subset::singleton(1));
    assert_eq!(weyl_chamber(&v(3, &[1, -1])), Chamber::Outside);
}

#[test]
fn center_class_examples() {
    assert_eq!(center_class(&CartanVector::zero(4)).unwrap().residue(), 0);
    assert_eq!(center_class(&v(2, &[1])).unwrap().residue(), 1);
    assert_eq!(center_class(&v(3, &[1, 1])).unwrap().residue(), 0);
    let half = CartanVector::new(2, vec![frac(1, 2)]).unwrap();
    assert!(matches!(center_class(&half), Err(Error::NonIntegral(_))));
}

#[test]
fn center_class_matches_exponential() {
    // e^{2π·v} has diagonal entries e^{2πi·d_s}; central iff all d_s agree mod 1.
    for n in 2..=6 {
        let b = LatticeBox::radius(n, 2).unwrap();
        for x in b.points() {
            let l = v(n, &x);
            let d = l.diagonal_entries();
            let frac0 = d[0] - d[0].floor();
            assert!(d.iter().all(|e| *e - e.floor() == frac0));
            let r = center_class(&l).unwrap().residue() as i64;
            assert_eq!(frac0, Rational::new(r, n as i64) - Rational::new(r, n as i64).floor());
        }
    }
}

#[test]
fn degree_examples() {
    assert_eq!(d_degree(&CartanVector::zero(3)).unwrap(), 0);
    assert_eq!(d_degree(&v(2, &[-1])).unwrap(), 2);
    assert_eq!(d_degree(&v(3, &[-2, -1])).unwrap(), 12);
    assert!(d_degree(&CartanVector::new(2, vec![frac(1, 3)]).unwrap()).is_err());
    assert!(DegreeWeights::standard(5).is_symmetric());
    assert_eq!(DegreeWeights::standard(4).weights(), &[6, 8, 6]);
    assert!(DegreeWeights::custom(3, vec![1, 0]).is_err());
    let half = DegreeWeights::custom(3, vec![2, 2]).unwrap();
    assert_eq!(half.degree(&v(3, &[-2, -1])).unwrap(), 6);
}

#[test]
fn enumerate_examples() {
    let z0 = CenterClass::identity(2);
    let got = enumerate_lattice(z0, &[Bound::closed(int(-4), int(0))]).unwrap();
    assert_eq!(got, vec![v(2, &[-4]), v(2, &[-2]), v(2, &[0])]);
    let empty = enumerate_lattice(z0, &[Bound::closed(int(1), int(0))]).unwrap();
    assert!(empty.is_empty());
    // x1 + 2 x2 ≡ 0 (mod 3) on {-1,0}^2 keeps (-1,-1) and (0,0).
    let z3 = CenterClass::identity(3);
    let b = Bound::closed(int(-1), int(0));
    let got = enumerate_lattice(z3, &[b, b]).unwrap();
    assert_eq!(got, vec![v(3, &[-1, -1]), v(3, &[0, 0])]);
    let unb = Bound { lo: Some(int(0)), hi: None };
    assert!(matches!(enumerate_lattice(z3, &[b, unb]), Err(Error::Unbounded(2))));
    let fr = Bound::closed(frac(-3, 2), frac(1, 2));
    assert_eq!(enumerate_lattice(CenterClass::new(2, 1), &[fr]).unwrap(), vec![v(2, &[-1])]);
}

#[test]
fn box_points_are_lexicographic() {
    let b = LatticeBox::new(3, vec![-1, 0], vec![0, 1]).unwrap();
    let pts: Vec<_> = b.points().collect();
    assert_eq!(pts, vec![vec![-1, 0], vec![-1, 1], vec![0, 0], vec![0, 1]]);
    assert_eq!(b.count(), 4);
    assert_eq!(LatticeBox::cube(3, 1, 0).unwrap().points().count(), 0);
}

#[test]
fn certified_box_examples() {
    // N=2, q = -5/2: Q = 25/8, coordinates within sqrt(25/16) of -5/4.
    let q = CartanVector::new(2, vec![frac(-5, 2)]).unwrap();
    let b = LatticeBox::certified_for(&q);
    assert_eq!((b.lo()[0], b.hi()[0]), (-2, 0));
    assert!(LatticeBox::certified_for(&CartanVector::zero(3)).contains_ints(&[0, 0]));
}

#[test]
fn shevel_examples() {
    assert_eq!(shevel_witness(&v(2, &[-2]), &CartanVector::zero(2)).unwrap(), 1);
    let k = shevel_witness(&v(3, &[-1, -1]), &CartanVector::zero(3)).unwrap();
    assert!(k == 1 || k == 2);
    let x = v(3, &[-1, -1]);
    assert!(matches!(shevel_witness(&x, &x), Err(Error::Precondition(_))));
}

fn lattice_pair(max_n: usize) -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (2..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(-6i64..=6, n - 1),
            prop::collection::vec(-6i64..=6, n - 1),
        )
    })
}

proptest! {
    #[test]
    fn center_and_degree_are_additive((n, a, b) in lattice_pair(8)) {
        let (l, m) = (v(n, &a), v(n, &b));
        let s = &l + &m;
        prop_assert_eq!(
            center_class(&s).unwrap(),
            center_class(&l).unwrap().add(center_class(&m).unwrap())
        );
        prop_assert_eq!(d_degree(&s).unwrap(), d_degree(&l).unwrap() + d_degree(&m).unwrap());
    }

    #[test]
    fn e_pairings_invert((n, a, _b) in lattice_pair(8)) {
        let l = v(n, &a);
        let back = CartanVector::from_e_pairings(n, &l.e_pairings()).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn shevel_succeeds_on_random_pairs((n, a, b) in lattice_pair(6)) {
        let x = v(n, &a.iter().map(|c| -c.abs()).collect::<Vec<_>>());
        let y = v(n, &b.iter().map(|c| -c.abs()).collect::<Vec<_>>());
        let (lo, hi) = if dominance_leq(&x, &y).unwrap() { (x, y) } else { (y, x) };
        prop_assume!(lo != hi && dominance_leq(&lo, &hi).unwrap());
        let k = shevel_witness(&lo, &hi).unwrap();
        prop_assert!(lo.i_set().contains(k));
        prop_assert!((&hi - &lo).pair_e(k).unwrap() > int(0));
    }

    #[test]
    fn certified_box_covers_contributors((n, q, l) in lattice_pair(5), den in 1i64..4) {
        let q = CartanVector::new(n, q.iter().map(|c| Rational::new(*c, den)).collect()).unwrap();
        let l = v(n, &l);
        let uq = q.e_pairings();
        let ul = l.e_pairings();
        let contributes = (0..n - 1).all(|j| l.coords()[j] * (uq[j] - ul[j]) >= int(0));
        if contributes {
            prop_assert!(LatticeBox::certified_for(&q).contains(&l));
        }
    }
}

#[test]
fn shevel_exhaustive_small_rank() {
    for n in 2..=4 {
        let pts: Vec<_> = LatticeBox::cube(n, -3, 0).unwrap().points().map(|x| v(n, &x)).collect();
        for x in &pts {
            for y in &pts {
                if x != y && dominance_leq(x, y).unwrap() {
                    shevel_witness(x, y).unwrap();
                }
            }
        }
    }
}
