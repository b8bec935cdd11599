//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported dimension d = {0}")]
    UnsupportedDimension(usize),

    #[error("construction failed: {reason} (achieved separation constant c = {achieved_c})")]
    ConstructionFailed { reason: String, achieved_c: f64 },

    #[error("accuracy failure: {0}")]
    AccuracyFailure(String),

    #[error("support violation: {0}")]
    SupportViolation(String),

    #[error("problem too large: {0}")]
    TooLarge(String),

    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),

    #[error("mixed atom kinds")]
    MixedAtomKinds,

    #[error("polynomial basis change is singular")]
    BasisFailure,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit code for the CLI: 2 for bad input, 3 for numerical trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_)
            | Error::UnsupportedDimension(_)
            | Error::SupportViolation(_)
            | Error::TooLarge(_)
            | Error::MixedAtomKinds => 2,
            Error::ConstructionFailed { .. }
            | Error::AccuracyFailure(_)
            | Error::NumericalInconsistency(_)
            | Error::BasisFailure => 3,
            Error::Io(_) | Error::Serde(_) => 3,
        }
    }
}
