use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient {index} requested but precision is {prec}")]
    IndexBeyondPrecision { index: usize, prec: usize },

    #[error("insufficient precision: need {needed}, have {have}")]
    InsufficientPrecision { needed: usize, have: usize },

    #[error("invalid index {n} at level {level}")]
    InvalidIndex { n: u64, level: u32 },

    #[error("invalid level {0}")]
    InvalidLevel(u32),

    #[error("{0} is not an odd prime coprime to the level")]
    InvalidPrime(u64),

    #[error("series is not in the generator algebra: residual has lowest term q^{lowest}")]
    NotInAlgebra { lowest: usize },

    #[error("no recurrence of order <= {order_bound} found")]
    NoRecurrenceFound { order_bound: usize },

    #[error("pairing matrix is singular: rank {rank} of {needed}")]
    SingularPairing { rank: usize, needed: usize },

    #[error("graded pieces do not satisfy U_N f_i = f_(N i): {0}")]
    ClassDecompositionFailed(String),

    #[error("insufficient scale: {0}")]
    InsufficientScale(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
