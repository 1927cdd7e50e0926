use crate::index::IndexKind;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid index kind for this operation: {0}")]
    InvalidKind(IndexKind),

    #[error("invalid projection: {0}")]
    InvalidProjection(String),

    #[error("contraction mismatch: {0}")]
    Contraction(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("representation failed validation: {0}")]
    Representation(String),

    #[error("unknown catalog entry: {0}")]
    Catalog(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("jet derivative order {order} exceeds truncation {max}")]
    JetOrder { order: usize, max: usize },

    #[error("no rule for charge {charge} acting on {generator}")]
    MissingRule { charge: String, generator: String },

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization failure: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
