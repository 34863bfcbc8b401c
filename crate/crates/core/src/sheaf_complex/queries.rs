//! Stalks, sections and the jump functor.

use num_traits::Signed;

use super::finite::ComplexBuilder;
use super::{cohomology_dims, FiniteComplex, Region, SheafComplex};
use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::rational::{int, Rational};
use crate::root_system::{dominance_leq, CartanVector, CenterClass};
use crate::subset::Subset;

/// The jump width `1/(2N)`. Pairings `⟨l, e_k⟩` of lattice points lie in `(1/N)ℤ`, so
/// any width below `1/N` meets `[0, ε]` only at `0`.
pub fn jump_epsilon(n: usize) -> Rational {
    Rational::new(1, 2 * n as i64)
}

type Key = (u32, usize, i64, u64);

/// Adds every multiplicity copy of the kept generators of `corner` to the builder.
fn add_generators(
    b: &mut ComplexBuilder<Key>,
    s: &SheafComplex,
    corner: Subset,
    kept: &[bool],
    sign: Rational,
) {
    let offset = -(corner.len() as i64);
    for (gi, g) in s.generators().iter().enumerate().filter(|(gi, _)| kept[*gi]) {
        for (d, mult) in g.multiplicity.iter() {
            for idx in 0..mult {
                b.basis((corner.bits(), gi, d, idx), g.degree() + d + offset);
            }
        }
    }
    for e in s.differential() {
        if kept[e.source] && kept[e.target] {
            for (d, mult) in s.generators()[e.source].multiplicity.iter() {
                for idx in 0..mult {
                    b.entry(
                        (corner.bits(), e.source, d, idx),
                        (corner.bits(), e.target, d, idx),
                        e.coeff * sign,
                    );
                }
            }
        }
    }
}

fn assemble(s: &SheafComplex, kept: &[bool]) -> Result<FiniteComplex> {
    let mut b = ComplexBuilder::new();
    add_generators(&mut b, s, Subset::EMPTY, kept, int(1));
    b.finish()
}

/// Stalk at `p` of the center-`z` part: generators whose region contains `p`, with
/// restriction maps acting as the identity.
pub fn stalk_complex(s: &SheafComplex, z: CenterClass, p: &CartanVector) -> Result<FiniteComplex> {
    check_rank(s, p)?;
    s.check_margin(p)?;
    let kept = s
        .generators()
        .iter()
        .map(|g| Ok(g.center == z && g.region.contains(p)?))
        .collect::<Result<Vec<bool>>>()?;
    assemble(s, &kept)
}

fn check_rank(s: &SheafComplex, p: &CartanVector) -> Result<()> {
    if p.n() != s.n() {
        return Err(Error::RankMismatch { left: s.n(), right: p.n() });
    }
    Ok(())
}

/// Apex of an admissible open set for section queries.
fn open_apex(u: &Region) -> Result<&CartanVector> {
    match u {
        Region::UOpen { apex } => Ok(apex),
        Region::UMinusOpen { apex } if apex.in_c_minus() => Ok(apex),
        Region::UMinusOpen { apex } => {
            Err(Error::Unsupported(format!("sections over U^-({apex}) need an apex in C_-")))
        }
        _ => Err(Error::Unsupported("sections are defined over UOpen and UMinusOpen only".into())),
    }
}

/// Whether `Γ(U_a; K_Z)` (or over `U_a^-` with `a ∈ C_-`) is `K` rather than zero.
/// Closed cones contribute when they meet the open set; open generators when they
/// contain it.
fn sections_nonzero(z: &Region, a: &CartanVector) -> Result<bool> {
    match z {
        Region::KCone { face, base } => {
            let d = a - base;
            Ok(face.iter().all(|j| d.pair_e_unchecked(j).is_positive()))
        }
        Region::UOpen { apex } | Region::UMinusOpen { apex } => dominance_leq(a, apex),
        Region::WBox { .. } => Err(Error::Unsupported("sections of box generators".into())),
    }
}

fn kept_for_sections(s: &SheafComplex, z: CenterClass, a: &CartanVector) -> Result<Vec<bool>> {
    s.generators()
        .iter()
        .map(|g| Ok(g.center == z && sections_nonzero(&g.region, a)?))
        .collect()
}

/// Sections over `u` (a `UOpen` or `UMinusOpen` region) of the center-`z` part.
pub fn sections_complex(s: &SheafComplex, z: CenterClass, u: &Region) -> Result<FiniteComplex> {
    let a = open_apex(u)?;
    check_rank(s, a)?;
    s.check_margin(a)?;
    assemble(s, &kept_for_sections(s, z, a)?)
}

/// `Δ_{I,m}`: the total complex over corners `L ⊆ I` of sections over
/// `UOpen(m + ε f_L)`, the corner `L` placed `|L|` degrees down, with restriction
/// maps `L → L \ {k}` signed by `(-1)^{#{i ∈ L : i < k}}`.
pub fn delta_jump(
    s: &SheafComplex,
    z: CenterClass,
    i: Subset,
    m: &CartanVector,
    eps: Rational,
) -> Result<GradedDims> {
    check_rank(s, m)?;
    if !eps.is_positive() || eps >= Rational::new(1, s.n() as i64) {
        return Err(Error::Precondition(format!("jump width {eps} must lie in (0, 1/{})", s.n())));
    }
    if i.max_index().is_some_and(|k| k >= s.n()) {
        return Err(Error::IndexOutOfRange { index: i.max_index().unwrap_or(0), max: s.n() - 1 });
    }
    let corners: Vec<Subset> = i.subsets().collect();
    let mut kept = Vec::with_capacity(corners.len());
    for &l in &corners {
        let apex = m + &CartanVector::f_sum(s.n(), l)?.scaled(eps);
        s.check_margin(&apex)?;
        kept.push(kept_for_sections(s, z, &apex)?);
    }
    let mut b = ComplexBuilder::new();
    for (ci, &l) in corners.iter().enumerate() {
        let sign = if l.len() % 2 == 0 { int(1) } else { int(-1) };
        add_generators(&mut b, s, l, &kept[ci], sign);
    }
    for &l in &corners {
        for k in l.iter() {
            let lower = l.without(k);
            let sign = if lower.count_below(k) % 2 == 0 { int(1) } else { int(-1) };
            for (gi, g) in s.generators().iter().enumerate() {
                for (d, mult) in g.multiplicity.iter() {
                    for idx in 0..mult {
                        let src = (l.bits(), gi, d, idx);
                        let tgt = (lower.bits(), gi, d, idx);
                        if b.contains(&src) && b.contains(&tgt) {
                            b.entry(src, tgt, sign);
                        }
                    }
                }
            }
        }
    }
    cohomology_dims(&b.finish()?)
}

/// Returns `jump_epsilon(N)` after checking it with [`check_separation`].
pub fn select_epsilon(lambda: &[CartanVector], l: &CartanVector) -> Result<Rational> {
    let eps = jump_epsilon(l.n());
    check_separation(lambda, l, eps)?;
    Ok(eps)
}

/// Checks that `ε` isolates `l` inside `lambda ⊆ 𝕃 ∩ C_-`: for every other `l'` some
/// `k ∈ I_l` has `⟨l' - l, e_k⟩ ∉ [0, ε]`, or some `k ∉ I_l` has `⟨l', e_k⟩ < ⟨l, e_k⟩`.
pub fn check_separation(lambda: &[CartanVector], l: &CartanVector, eps: Rational) -> Result<()> {
    if !lambda.contains(l) {
        return Err(Error::Precondition(format!("{l} is not in the set")));
    }
    if let Some(bad) = lambda.iter().find(|p| !p.is_integral() || !p.in_c_minus() || p.n() != l.n()) {
        return Err(Error::Precondition(format!("{bad} is not a lattice point of C_-")));
    }
    let il = l.i_set();
    let ul = l.e_pairings();
    for other in lambda.iter().filter(|p| *p != l) {
        let uo = other.e_pairings();
        let separated = (1..l.n()).any(|k| {
            let d = uo[k - 1] - ul[k - 1];
            if il.contains(k) {
                d.is_negative() || d > eps
            } else {
                d.is_negative()
            }
        });
        if !separated {
            return Err(Error::Integrity(format!("ε = {eps} does not separate {other} from {l}")));
        }
    }
    Ok(())
}

/// `RHom(K_{U_x^-}, K_{U_y^-})`: `K` in degree 0 when `x ≤ y`, zero otherwise.
pub fn rhom_generators(x: &CartanVector, y: &CartanVector) -> Result<GradedDims> {
    Ok(if dominance_leq(x, y)? { GradedDims::unit(0) } else { GradedDims::new() })
}
