use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the library. Failed algebraic checks are never errors;
/// they are recorded as report entries instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("not a primitive two-sided axis: {0}")]
    NotAxis(String),

    #[error("axis orbit exceeded {0} elements")]
    OrbitOverflow(usize),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
