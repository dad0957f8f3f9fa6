use thiserror::Error;

/// Errors for rejected inputs and I/O failures.
///
/// Algorithmic non-results (peeling FAIL, inconsistent linear systems,
/// absent quantizations) are ordinary values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("entry ({row}, {col}) out of bounds for {rows}x{cols} matrix")]
    EntryOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("infeasible degree distribution: {0}")]
    InfeasibleDistribution(String),

    #[error("alist parse error: {0}")]
    AlistParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dim(expected: usize, got: usize, context: &'static str) -> Self {
        Error::DimensionMismatch {
            expected,
            got,
            context,
        }
    }
}
