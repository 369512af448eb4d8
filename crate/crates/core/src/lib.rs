//! Exact construction and verification of cyclic pre-Lie-Rinehart structures.
//!
//! The coordinate ring `R` is one of `ℚ[t₁..tₙ]`, `ℚ(t₁..tₙ)` or `ℚ[[t]]/(tᴺ)`.
//! On top of it live vector fields, one-forms, covariant differential
//! operators on free modules, and the product, bracket and anchor induced by
//! a duality pairing. The [`verifier`] checks every identity exactly on
//! seeded random samples.

pub mod calculus;
pub mod cdo;
mod error;
pub mod linalg;
pub mod ode;
pub mod prelie;
pub mod rings;
pub mod verifier;

pub use error::{Error, Result};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

pub use calculus::{OneForm, TwoForm, VectorField};
pub use cdo::{CdoOperator, FreeModuleDesc, IdempotentPresentation};
pub use linalg::{Matrix, Vector};
pub use prelie::{PairingSpace, PreLieStructure, StructureData, Variant};
pub use rings::{parse_expression, Ring, RingDescriptor, RingElement, RingKind};
pub use verifier::{CheckKind, CheckResult, SamplerConfig, Status, Witness};
