use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite input in {0}")]
    NonFiniteInput(&'static str),

    #[error("invalid knot grid: {0}")]
    InvalidGrid(String),

    #[error("singular system: pivot {pivot:e} at row {row}")]
    SingularSystem { row: usize, pivot: f64 },

    #[error("system is not strictly diagonally dominant at row {row}")]
    NotDiagonallyDominant { row: usize },

    #[error("invalid derivative order {0}, expected 1 or 2")]
    InvalidOrder(u8),

    #[error("bad sample specification: {0}")]
    BadSpec(String),
}
