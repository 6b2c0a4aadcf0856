use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {0}")]
    NonExactDivision(String),
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element {element} out of range for ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("set is not both a circuit and a hyperplane")]
    NotCircuitHyperplane,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("ground set of size {size} exceeds the limit of {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("graph with {vertices} vertices exceeds the limit of {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },
    #[error("recursion budget of {0} nodes exceeded")]
    ResourceBudgetExceeded(u64),
    #[error("unsupported transfer-matrix width {0}")]
    UnsupportedWidth(usize),
    #[error("invalid rank {rank} for ground set of size {size}")]
    InvalidRank { rank: usize, size: usize },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("size budget exceeded: {0}")]
    SizeBudgetExceeded(String),
    #[error("unknown Steiner system {0}")]
    UnknownSystem(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
