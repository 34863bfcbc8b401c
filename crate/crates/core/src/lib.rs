//! Exact combinatorics and homological bookkeeping on the Cartan algebra of su(N).
//!
//! The crate is organised bottom-up:
//!
//! * [`root_system`]: coroot/root bases, the dominance order, the central lattice and
//!   the degree function `D`.
//! * [`lie_numerics`]: floating-point checks of the matrix inequalities on su(N)
//!   (spectral norm map, triangle inequality, pairing bound, products of exponentials).
//! * [`flag_schubert`]: Schubert-cell combinatorics of partial flag varieties and the
//!   free decomposition of their cohomology.
//! * [`sheaf_complex`]: formal complexes of constant sheaves on polyhedral regions of the
//!   Cartan algebra, their stalks, sections and the jump functor.
//! * [`spectral_pipeline`]: the two descriptions of the sheaf `S`, their cross-check, and
//!   the graded modules `H_I(d)` with their non-vanishing certificate.
//! * [`cli`]: the command-line front end used by the `cartan-sheaf` binary.
//!
//! All lattice and sheaf computations use exact rationals in rescaled units where
//! `2π` is replaced by `1`.

pub mod cli;
pub mod error;
pub mod flag_schubert;
pub mod graded;
pub mod lie_numerics;
pub mod rational;
pub mod root_system;
pub mod sheaf_complex;
pub mod spectral_pipeline;
pub mod subset;

pub use error::{Error, Result};
pub use graded::GradedDims;
pub use rational::Rational;
pub use root_system::{CartanVector, CenterClass, DegreeWeights, LatticeBox};
pub use subset::Subset;
