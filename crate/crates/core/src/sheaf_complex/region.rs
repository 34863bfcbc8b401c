//! Standard convex regions of the Cartan algebra.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::root_system::{dominance_leq, dominance_ll, CartanVector, Chamber};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// `{y ∈ C_-° : y ≪ apex}`.
    UMinusOpen { apex: CartanVector },
    /// `{y : y ≪ apex}`.
    UOpen { apex: CartanVector },
    /// `{y : ⟨y - base, e_j⟩ ≥ 0 for j ∈ face}`.
    KCone { face: Subset, base: CartanVector },
    /// `{y : ⟨y - corner, e_k⟩ ∈ [0, ε) for k ∈ face, < 0 otherwise}`.
    WBox {
        face: Subset,
        corner: CartanVector,
        #[serde(with = "rational::serde_one")]
        eps: Rational,
    },
}

impl Region {
    pub fn u_minus(apex: CartanVector) -> Self {
        Region::UMinusOpen { apex }
    }

    pub fn u_open(apex: CartanVector) -> Self {
        Region::UOpen { apex }
    }

    pub fn k_cone(face: Subset, base: CartanVector) -> Self {
        Region::KCone { face, base }
    }

    pub fn w_box(face: Subset, corner: CartanVector, eps: Rational) -> Result<Self> {
        if !eps.is_positive() {
            return Err(Error::InvalidInput(format!("box width {eps} must be positive")));
        }
        Ok(Region::WBox { face, corner, eps })
    }

    /// The point parameter of the region.
    pub fn anchor(&self) -> &CartanVector {
        match self {
            Region::UMinusOpen { apex } | Region::UOpen { apex } => apex,
            Region::KCone { base, .. } => base,
            Region::WBox { corner, .. } => corner,
        }
    }

    pub fn n(&self) -> usize {
        self.anchor().n()
    }

    pub fn contains(&self, p: &CartanVector) -> Result<bool> {
        self.anchor().check_same_rank(p)?;
        Ok(match self {
            Region::UMinusOpen { apex } => p.chamber() == Chamber::InteriorMinus && dominance_ll(p, apex)?,
            Region::UOpen { apex } => dominance_ll(p, apex)?,
            Region::KCone { face, base } => {
                let d = p - base;
                face.iter().all(|j| !d.pair_e_unchecked(j).is_negative())
            }
            Region::WBox { face, corner, eps } => {
                let d = p - corner;
                (1..p.n()).all(|k| {
                    let u = d.pair_e_unchecked(k);
                    if face.contains(k) {
                        !u.is_negative() && u < *eps
                    } else {
                        u.is_negative()
                    }
                })
            }
        })
    }

    /// Whether `other ⊆ closure(self)`, decided for matching kinds with sufficient
    /// conditions; mixed kinds are reported as not contained.
    pub fn closure_contains(&self, other: &Region) -> Result<bool> {
        self.anchor().check_same_rank(other.anchor())?;
        Ok(match (self, other) {
            (Region::KCone { face: f1, base: b1 }, Region::KCone { face: f2, base: b2 }) => {
                let d = b2 - b1;
                f1.is_subset_of(*f2) && f1.iter().all(|j| !d.pair_e_unchecked(j).is_negative())
            }
            (Region::UOpen { apex: a1 }, Region::UOpen { apex: a2 })
            | (Region::UMinusOpen { apex: a1 }, Region::UMinusOpen { apex: a2 })
            | (Region::UOpen { apex: a1 }, Region::UMinusOpen { apex: a2 }) => dominance_leq(a2, a1)?,
            _ => self == other,
        })
    }

    /// Translate by `t`.
    pub fn translated(&self, t: &CartanVector) -> Region {
        match self {
            Region::UMinusOpen { apex } => Region::UMinusOpen { apex: apex + t },
            Region::UOpen { apex } => Region::UOpen { apex: apex + t },
            Region::KCone { face, base } => Region::KCone { face: *face, base: base + t },
            Region::WBox { face, corner, eps } => {
                Region::WBox { face: *face, corner: corner + t, eps: *eps }
            }
        }
    }
}

pub fn region_contains(r: &Region, p: &CartanVector) -> Result<bool> {
    r.contains(p)
}
