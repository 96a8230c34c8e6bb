//! Exact-arithmetic kernel for the periplectic Brauer algebra `A_n` and its
//! degenerate affine extension `sV_n`.
//!
//! The crate builds the calibrated representations carried by exterior powers
//! of the standard reflection representation, verifies the full defining
//! relation set (plus derived identities) against them in exact rational
//! arithmetic, extracts joint eigenvalue spectra, and generates the Pascal
//! branching graph together with its content-labelled spectrum rule.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere.

pub mod algebra;
pub mod analysis;
pub mod bratteli;
pub mod json;
pub mod linalg;
pub mod rep;

pub use algebra::{FreeElement, GenKind, GeneratorSymbol, RelationList, Word};
pub use linalg::{ExactMatrix, Rational};
pub use rep::{Representation, VerificationReport};

/// Error type shared by the whole crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
