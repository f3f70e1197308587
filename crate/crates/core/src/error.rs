use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element is not divisible by chi = 1 - w")]
    NotDivisible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("wire {wire} out of range for {wires} wires")]
    WireOutOfRange { wire: usize, wires: usize },
    #[error("invalid control specification: {0}")]
    InvalidControls(String),
    #[error("column is not a unit vector")]
    NotAUnitVector,
    #[error("column already has sde 0")]
    SdeZero,
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("grid points are not pairwise distinct")]
    DegenerateIndices,
    #[error("dimension error: {0}")]
    DimensionError(String),
    #[error("dimension {0} is not a power of 3")]
    DimensionNotPowerOf3(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
