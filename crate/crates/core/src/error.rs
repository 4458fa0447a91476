use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown label `{label}` in {context}")]
    Reference { label: String, context: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("index {index} out of range for {what} (size {size})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("{what} exceeds budget ({size} > {limit})")]
    Budget {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("`{0}` fails its axioms; pass the lenient override to continue")]
    AxiomsFailed(String),
    #[error("`{0}` declares no unit")]
    NoUnit(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no applicable tensor backend: {0}")]
    NoBackend(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
