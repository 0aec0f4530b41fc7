use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis columns are linearly dependent (rank {rank} < {columns} columns)")]
    RankDeficient { rank: usize, columns: usize },
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("the subspace has no non-zero coordinate")]
    ZeroSubspace,
    #[error("capacity exceeded: {what} is {got}, limit {limit}")]
    CapacityExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("the zero set is empty; the existence threshold is undefined")]
    EmptyZeroSet,
    #[error("no best coapproximation exists, so there is no norm-one projection")]
    NoCoapproximation,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
