//! Error type shared by all modules.
//!
//! Input errors cover everything a caller can get wrong: mismatched scalar
//! domains, malformed tables, violated preconditions. Internal errors mark
//! broken structural invariants — situations the ring theory excludes — and
//! map to a distinct process exit code in the CLI.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands live in different scalar domains.
    #[error("scalar domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },

    /// Operands are defined over different variable sets.
    #[error("variable set mismatch: {left} vs {right}")]
    VariableMismatch { left: String, right: String },

    /// A substitution left a variable of the source polynomial unassigned.
    #[error("unassigned variable in substitution: {0}")]
    UnassignedVariable(String),

    /// Matrix or vector shapes are incompatible.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Submodules with different ambient ranks were combined.
    #[error("ambient rank mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    /// A value failed a structural validation (symmetry, parity, range).
    #[error("validation failed: {0}")]
    Validation(String),

    /// Malformed or out-of-range caller input.
    #[error("invalid input: {0}")]
    Input(String),

    /// The requested combination of domain and operation is not supported.
    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),

    /// A structural invariant guaranteed by the ring theory was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Internal errors signal a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
