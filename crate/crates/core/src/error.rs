use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog key {0:?}")]
    UnknownKey(String),

    #[error("parameter {name} = {value} is an excluded value for {key}")]
    ExcludedParameter {
        key: String,
        name: String,
        value: String,
    },

    #[error("{key} has no parameter named {name:?}")]
    UnknownParameter { key: String, name: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
