use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid torus size {0}: must be at least 2")]
    InvalidTorusSize(usize),

    #[error("invalid lattice spec: {0}")]
    InvalidSpec(String),

    #[error("algebra elements live on different lattices")]
    LatticeMismatch,

    #[error("element is not invertible (residual {residual:e})")]
    NotInvertible { residual: f64 },

    #[error("matrix is singular (pivot {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },

    #[error("window does not generate a frame (lower bound {lower_bound:e})")]
    NotAFrame { lower_bound: f64 },

    #[error("iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("operator is not positive definite (curvature {curvature:e})")]
    NotPositiveDefinite { curvature: f64 },

    #[error("operator is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
