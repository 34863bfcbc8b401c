//! Formal complexes of constant sheaves on standard regions of the Cartan algebra.
//!
//! A [`SheafComplex`] is a finite list of generators `K_Z[s] ⊗ M` (region `Z`, center
//! label, shift `s`, graded multiplicity `M`) placed at integer positions, with a sparse
//! rational differential between generators at adjacent positions. A generator
//! contributes in degree `position - s + (degree of M)`.
//!
//! Truncations of infinite lattice sums carry [`WindowPiece`]s so that stalk and section
//! queries can certify that every contributing lattice term lies inside the window.

mod build;
mod finite;
mod queries;
mod region;

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::rational::{self, Rational};
use crate::root_system::{CartanVector, CenterClass, LatticeBox};
use crate::subset::Subset;

pub use build::{build_copies, build_y, YCopy};
pub use finite::{cohomology_dims, FiniteComplex, SparseMatrix};
pub use queries::{
    delta_jump, rhom_generators, sections_complex, select_epsilon, check_separation, jump_epsilon, stalk_complex,
};
pub use region::{region_contains, Region};

pub const SCHEMA_VERSION: u32 = 1;

/// Provenance of a generator of a `Y`-type complex: the flag type `I` of the translated
/// copy, the face `J`, and the untranslated lattice point `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorTag {
    pub flag: Subset,
    pub face: Subset,
    pub lattice: CartanVector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub region: Region,
    pub center: CenterClass,
    pub position: i64,
    pub shift: i64,
    pub multiplicity: GradedDims,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<GeneratorTag>,
}

impl Generator {
    /// `K_region[shift]` at position 0 with multiplicity `K`.
    pub fn simple(region: Region, center: CenterClass, shift: i64) -> Self {
        Generator { region, center, position: 0, shift, multiplicity: GradedDims::unit(0), tag: None }
    }

    /// Degree of the copy with multiplicity degree 0.
    pub fn degree(&self) -> i64 {
        self.position - self.shift
    }
}

/// Differential coefficient from `source` to `target`, serialized as a triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "(usize, usize, String)", try_from = "(usize, usize, String)")]
pub struct DiffEntry {
    pub source: usize,
    pub target: usize,
    pub coeff: Rational,
}

impl From<DiffEntry> for (usize, usize, String) {
    fn from(e: DiffEntry) -> Self {
        (e.source, e.target, e.coeff.to_string())
    }
}

impl TryFrom<(usize, usize, String)> for DiffEntry {
    type Error = Error;
    fn try_from((source, target, c): (usize, usize, String)) -> Result<Self> {
        Ok(DiffEntry { source, target, coeff: rational::parse(&c)? })
    }
}

/// The generators coming from a `Y`-type truncation: lattice points `l` of `window`,
/// placed at `l + translation`. Every block `Φ_l` with `l` in the window is complete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowPiece {
    pub flag: Subset,
    pub translation: CartanVector,
    pub window: LatticeBox,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SheafComplex {
    schema_version: u32,
    n: usize,
    generators: Vec<Generator>,
    differential: Vec<DiffEntry>,
    #[serde(default)]
    pieces: Vec<WindowPiece>,
}

impl SheafComplex {
    /// Validates the structural invariants, including `d ∘ d = 0`.
    pub fn new(
        n: usize,
        generators: Vec<Generator>,
        differential: Vec<DiffEntry>,
        pieces: Vec<WindowPiece>,
    ) -> Result<Self> {
        let c = SheafComplex { schema_version: SCHEMA_VERSION, n, generators, differential, pieces };
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(
        n: usize,
        generators: Vec<Generator>,
        differential: Vec<DiffEntry>,
        pieces: Vec<WindowPiece>,
    ) -> Self {
        SheafComplex { schema_version: SCHEMA_VERSION, n, generators, differential, pieces }
    }

    /// A single generator with no differential.
    pub fn single(g: Generator) -> Result<Self> {
        let n = g.region.n();
        Self::new(n, vec![g], Vec::new(), Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self) -> &[DiffEntry] {
        &self.differential
    }

    pub fn pieces(&self) -> &[WindowPiece] {
        &self.pieces
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Integrity(format!("unknown schema version {}", self.schema_version)));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.region.n() != self.n || g.center.n() != self.n {
                return Err(Error::Integrity(format!("generator {i} has the wrong rank")));
            }
        }
        for p in &self.pieces {
            if p.translation.n() != self.n || p.window.n() != self.n {
                return Err(Error::Integrity("window piece has the wrong rank".into()));
            }
        }
        let len = self.generators.len();
        for e in &self.differential {
            if e.source >= len || e.target >= len {
                return Err(Error::Integrity(format!("entry {e:?} out of range")));
            }
            let (s, t) = (&self.generators[e.source], &self.generators[e.target]);
            if s.center != t.center {
                return Err(Error::Integrity(format!("entry {e:?} mixes center classes")));
            }
            if t.degree() != s.degree() + 1 || s.multiplicity != t.multiplicity {
                return Err(Error::Integrity(format!("entry {e:?} is not homogeneous of degree +1")));
            }
            if !s.region.closure_contains(&t.region)? {
                return Err(Error::Integrity(format!("entry {e:?}: target region not in source closure")));
            }
        }
        self.check_square_zero()
    }

    /// Symbolic `d ∘ d = 0` on generators.
    pub fn check_square_zero(&self) -> Result<()> {
        let mut out: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for e in &self.differential {
            out.entry(e.source).or_default().push((e.target, e.coeff));
        }
        for (&s, firsts) in &out {
            let mut acc: HashMap<usize, Rational> = HashMap::new();
            for &(t, c) in firsts {
                for &(u, c2) in out.get(&t).map(Vec::as_slice).unwrap_or(&[]) {
                    *acc.entry(u).or_insert_with(Rational::zero) += c * c2;
                }
            }
            if let Some((u, _)) = acc.iter().find(|(_, v)| !v.is_zero()) {
                return Err(Error::Integrity(format!("d∘d ≠ 0 from generator {s} to {u}")));
            }
        }
        Ok(())
    }

    /// Errors unless every lattice term that can contribute at `q` lies in the window of
    /// each piece.
    pub fn check_margin(&self, q: &CartanVector) -> Result<()> {
        q.check_same_rank(&CartanVector::zero(self.n))?;
        for p in &self.pieces {
            let local = q - &p.translation;
            let need = LatticeBox::certified_for(&local);
            if !p.window.contains_box(&need) {
                return Err(Error::Margin(format!(
                    "point {q} needs lattice box lo={:?} hi={:?} for copy I={{{}}}, window is lo={:?} hi={:?}",
                    need.lo(),
                    need.hi(),
                    p.flag,
                    p.window.lo(),
                    p.window.hi()
                )));
            }
        }
        Ok(())
    }

    /// The finite subcomplex `Φ_l` of the copy with flag type `flag`.
    pub fn block(&self, flag: Subset, lattice: &CartanVector) -> SheafComplex {
        let keep: Vec<usize> = (0..self.generators.len())
            .filter(|&i| {
                self.generators[i]
                    .tag
                    .as_ref()
                    .is_some_and(|t| t.flag == flag && &t.lattice == lattice)
            })
            .collect();
        self.sub_complex(&keep)
    }

    /// Sub-complex on the given generators; window data is dropped.
    pub fn sub_complex(&self, keep: &[usize]) -> SheafComplex {
        let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let generators = keep.iter().map(|&g| self.generators[g].clone()).collect();
        let differential = self
            .differential
            .iter()
            .filter_map(|e| {
                Some(DiffEntry { source: *remap.get(&e.source)?, target: *remap.get(&e.target)?, coeff: e.coeff })
            })
            .collect();
        SheafComplex::new_unchecked(self.n, generators, differential, Vec::new())
    }

    /// Generators restricted to one center class.
    pub fn restrict_center(&self, z: CenterClass) -> SheafComplex {
        let keep: Vec<usize> = (0..self.generators.len()).filter(|&i| self.generators[i].center == z).collect();
        let mut c = self.sub_complex(&keep);
        c.pieces = self.pieces.clone();
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sheaf complexes serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: SheafComplex =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("sheaf complex JSON: {e}")))?;
        c.validate()?;
        Ok(c)
    }
}
