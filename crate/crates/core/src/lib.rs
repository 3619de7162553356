//! Finite-dimensional Hom-associative algebras over the Gaussian rationals:
//! axiom verification, constructions, structure theory, derivations,
//! Hom-Hochschild cohomology, formal deformations, the variety of structure
//! constants and a catalog of classified algebras.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod constructions;
pub mod deformation;
pub mod derivations;
pub mod error;
pub mod fingerprint;
pub mod structure;
pub mod variety;
pub mod verify;

pub use algebra::{Cochain, HomAlgebra};
pub use error::{AlgebraError, Result};
pub use homassoc_exact::{GaussianRational, Matrix, Rational, Subspace, Vector};
pub use verify::{VerificationReport, Witness};
