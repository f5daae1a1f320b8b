//! Exact arithmetic for primitive axes in finite-dimensional
//! non-associative algebras.
//!
//! An algebra is a table of rational structure constants
//! ([`AlgebraTable`]). On top of that the crate classifies idempotents as
//! primitive axes ([`classify_axis`]), splits elements along the two-sided
//! eigenspaces ([`decompose`]), checks the `Z2 x Z2` fusion grading
//! ([`check_fusion`]), builds the three Miyamoto involutions
//! ([`miyamoto::tau_lambda`] and friends), and runs the identity suites for
//! algebras generated by two primitive axes ([`verify`]).
//!
//! All arithmetic is exact; no check involves a tolerance.

pub mod algebra;
pub mod axis;
pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod miyamoto;
pub mod poly;
pub mod rational;
pub mod report;
pub mod verify;

pub use algebra::{subalgebra_closure, AlgebraTable, Closure, Element};
pub use axis::{
    build_frame, check_fusion, classify_axis, decompose, eigenspace, is_idempotent,
    two_sided_eigenspace, AxisProfile, Grade, TwoGeneratedFrame, TwoSidedDecomposition,
};
pub use constructions::{dim2_algebra, load_fischer_space, matsuo_algebra, FischerSpace};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use miyamoto::{AlgebraMap, Involution};
pub use poly::{minimal_polynomial, Polynomial};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use report::{Entry, Status, VerificationReport};
