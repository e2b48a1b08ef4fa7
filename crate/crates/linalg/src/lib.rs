//! Exact linear algebra over prime fields and the rationals.
//!
//! Everything here is deterministic: pivots are chosen as the first nonzero
//! column, and subspaces are stored in canonical reduced row echelon form so
//! that equal subspaces compare equal.

mod echelon;
mod field;
mod matrix;
mod row;
mod subspace;

pub use echelon::Echelon;
pub use field::{is_prime, Field, FieldKind, PrimeField, Rationals};
pub use matrix::DenseMatrix;
pub use row::{FpRow, Row};
pub use subspace::{CoordinateSystem, Quotient, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("subspace is not contained in the enclosing space")]
    NotContained,
    #[error("vector does not lie in the space")]
    NotInSpan,
    #[error("vectors are linearly dependent")]
    Dependent,
}
