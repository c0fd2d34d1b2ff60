//! Error type shared by every module of the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial exact division left a nonzero remainder.
    DivisionError(String),
    /// Power-series inversion requested for a non-invertible denominator.
    SeriesError(String),
    /// Newton pairs violating the admissibility conditions.
    InvalidBranch(String),
    /// Generators that do not define a symmetric numerical semigroup.
    InvalidSemigroup(String),
    /// A degree/cusp combination failing the genus condition where it is required.
    GenusError(String),
    /// Stabilizer dimension could not be resolved and defaulting was not permitted.
    StabUnknown(String),
    /// An internal identity that must hold by theory failed; signals a bug or
    /// an input outside the domain of the formula.
    Inconsistency(String),
    /// Malformed user-facing input (descriptors, CLI arguments).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionError(m) => write!(f, "exact division failed: {m}"),
            Error::SeriesError(m) => write!(f, "series inversion failed: {m}"),
            Error::InvalidBranch(m) => write!(f, "invalid branch data: {m}"),
            Error::InvalidSemigroup(m) => write!(f, "invalid semigroup: {m}"),
            Error::GenusError(m) => write!(f, "genus condition violated: {m}"),
            Error::StabUnknown(m) => write!(f, "stabilizer dimension unresolved: {m}"),
            Error::Inconsistency(m) => write!(f, "internal consistency check failed: {m}"),
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
