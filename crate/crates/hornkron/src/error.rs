use thiserror::Error;

/// Errors surfaced by the public API. Internal consistency failures
/// (non-integer character sums and the like) panic instead: they signal
/// implementation bugs, not bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition parts must be weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("partition parts must be nonnegative")]
    NegativePart,
    #[error("index set: {0}")]
    BadIndexSet(String),
    #[error("partition has {length} parts but the index set ambient is {ambient}")]
    AmbientTooSmall { length: usize, ambient: usize },
    #[error("|lambda| = {lambda} but |rho| = {rho}")]
    SizeMismatch { lambda: u64, rho: u64 },
    #[error("parameter out of range: {0}")]
    BadRange(String),
    #[error("length bound violated: {0}")]
    LengthBoundViolated(String),
    #[error("equality hypothesis not satisfied: {0}")]
    EqualityNotSatisfied(String),
    #[error("form evaluated on partitions longer than its ambient: {0}")]
    AmbientExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("character table file rejected: {0}")]
    BadTableFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
