use stlie_linalg::LinalgError;

use crate::ring::AlgebraViolation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(#[from] AlgebraViolation),
    #[error("{0}")]
    Input(String),
    #[error("{what} requires a perfect Lie algebra")]
    NotPerfect { what: &'static str },
    #[error("dim sl_n(R) = {dim} exceeds the size guard {max}")]
    GuardExceeded { dim: usize, max: usize },
    #[error("{stage}: {detail}")]
    Validation { stage: String, detail: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl CoreError {
    pub(crate) fn validation(stage: impl Into<String>, detail: impl Into<String>) -> Self {
        CoreError::Validation { stage: stage.into(), detail: detail.into() }
    }
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
