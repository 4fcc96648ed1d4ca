use thiserror::Error;

use crate::scalar::Field;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar `{value}` does not belong to the declared field {field}")]
    FieldMismatch { field: Field, value: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("grade {grade} exceeds truncation cap {cap}")]
    TruncationOverflow { grade: usize, cap: usize },
    #[error("grade-zero input to {0}")]
    GradeZeroInput(&'static str),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("braiding matrix is singular")]
    SingularMatrix,
    #[error("diagonal braiding entry ({i},{j}) is zero")]
    ZeroDiagonalEntry { i: usize, j: usize },
    #[error("{0} requires a braiding that passed the Yang-Baxter check")]
    UnverifiedBraiding(&'static str),
    #[error("algebra has no unit")]
    NoUnit,
    #[error("incompatible algebra: {0}")]
    IncompatibleAlgebra(String),
    #[error("incompatible morphism: {0}")]
    IncompatibleMorphism(String),
    #[error("braiding is not symmetric")]
    NonSymmetricBraiding,
    #[error("kernel violation: {0}")]
    KernelViolation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::TruncationOverflow { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
