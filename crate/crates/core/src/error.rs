use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank parameter N = {0} is invalid (need 2 <= N <= 16)")]
    InvalidRank(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("expected integral coordinates, got {0}")]
    NonIntegral(String),
    #[error("box is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("margin violation: {0}")]
    Margin(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
}
