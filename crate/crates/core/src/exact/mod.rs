//! Exact arithmetic over the Gaussian rationals and sparse linear algebra on top of it.

mod matrix;
mod scalar;

pub use matrix::{EchelonBasis, ExactMatrix, SparseRow};
pub use scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as an exact scalar")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
}
