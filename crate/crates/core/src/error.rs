use thiserror::Error;

use crate::tensor::TensorError;

#[derive(Debug, Error)]
pub enum QhaError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("invalid structure: {0}")]
    Structure(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl QhaError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        QhaError::Field { field: field.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, QhaError>;
