use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("link, not knot: gcd({p}, {q}) != 1")]
    Link { p: i64, q: i64 },
    #[error("invalid braid word: {0}")]
    InvalidWord(String),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("closure has {0} components, expected a knot")]
    MultiComponent(usize),
    #[error("zero polynomial has no Alexander normalization")]
    ZeroPolynomial,
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
    #[error("layout construction failed: {0}")]
    Layout(String),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
