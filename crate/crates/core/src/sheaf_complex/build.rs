//! The standard complex `Y` and its translated copies.

use std::collections::HashMap;

use super::{DiffEntry, Generator, GeneratorTag, Region, SheafComplex, WindowPiece};
use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::rational::int;
use crate::root_system::{center_of_ints, CartanVector, CenterClass, DegreeWeights, LatticeBox};
use crate::subset::Subset;

/// A copy of `Y` translated by an integral vector, with a graded multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct YCopy {
    pub flag: Subset,
    pub translation: Vec<i64>,
    pub multiplicity: GradedDims,
}

impl YCopy {
    pub fn untranslated(n: usize) -> Self {
        YCopy { flag: Subset::EMPTY, translation: vec![0; n - 1], multiplicity: GradedDims::unit(0) }
    }
}

/// `Y = Φ`: for each lattice `l` of the window and each `J ⊇ {j : x_j(l) > 0}`, the
/// generator `K_{KCone(J,l)}[D(l)]` at position `|J|`, with differential
/// `(-1)^{#{j ∈ J : j < k}}` from `J` to `J ∪ {k}`.
pub fn build_y(n: usize, window: &LatticeBox, weights: &DegreeWeights) -> Result<SheafComplex> {
    build_copies(n, window, weights, &[YCopy::untranslated(n)], None)
}

/// Translated copies of `Y`, optionally restricted to one center class.
pub fn build_copies(
    n: usize,
    window: &LatticeBox,
    weights: &DegreeWeights,
    copies: &[YCopy],
    center: Option<CenterClass>,
) -> Result<SheafComplex> {
    if window.n() != n || weights.n() != n {
        return Err(Error::RankMismatch { left: n, right: window.n() });
    }
    if window.is_empty() {
        return Err(Error::InvalidInput("lattice window is empty".into()));
    }
    let full = Subset::full(n - 1);
    let mut generators = Vec::new();
    let mut differential = Vec::new();
    let mut pieces = Vec::new();
    for copy in copies {
        pieces.push(WindowPiece {
            flag: copy.flag,
            translation: CartanVector::from_ints(n, &copy.translation)?,
            window: window.clone(),
        });
        for x in window.points() {
            let base: Vec<i64> = x.iter().zip(&copy.translation).map(|(a, t)| a + t).collect();
            let z = center_of_ints(n, &base);
            if center.is_some_and(|c| c != z) {
                continue;
            }
            let lattice = CartanVector::from_ints(n, &x)?;
            let base_v = CartanVector::from_ints(n, &base)?;
            let shift = weights.degree_of_ints(&base);
            let forced = lattice.positive_set();
            let mut index: HashMap<Subset, usize> = HashMap::new();
            for extra in full.difference(forced).subsets() {
                let face = forced.union(extra);
                index.insert(face, generators.len());
                generators.push(Generator {
                    region: Region::k_cone(face, base_v.clone()),
                    center: z,
                    position: face.len() as i64,
                    shift,
                    multiplicity: copy.multiplicity.clone(),
                    tag: Some(GeneratorTag { flag: copy.flag, face, lattice: lattice.clone() }),
                });
            }
            for (&face, &src) in &index {
                for k in full.difference(face).iter() {
                    let sign = if face.count_below(k) % 2 == 0 { 1 } else { -1 };
                    differential.push(DiffEntry { source: src, target: index[&face.with(k)], coeff: int(sign) });
                }
            }
        }
    }
    differential.sort_by_key(|e| (e.source, e.target));
    Ok(SheafComplex::new_unchecked(n, generators, differential, pieces))
}
