use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0} is not dominant")]
    NonDominant(String),
    #[error("weight {0} is neither integral nor half-integral")]
    MixedIntegrality(String),
    #[error("cores differ")]
    CoreMismatch,
    #[error("arc {0} is not maximal")]
    NotMaximal(String),
    #[error("no minimal arc supported at position {0}")]
    NoMinimalArcAt(String),
    #[error("unsupported element of rank {0}: only rank <= 1 and C_r are computable")]
    UnsupportedRank(String),
    #[error("dimension mismatch: expected a weight of length {expected}, got {got}")]
    DimensionMismatch { expected: i64, got: usize },
    #[error("Arc(nu) is not contained in Arc(lambda)")]
    ArcNotSubset,
    #[error("invalid odd element: {0}")]
    InvalidXSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
