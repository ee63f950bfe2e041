use crate::linalg::Field;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("composite of arity {arity} exceeds the truncation N = {max}")]
    TruncationOverflow { arity: usize, max: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Raised where an operation needs `char 𝕜 ≠ 2` (or a similar hypothesis).
    #[error("unsupported characteristic {characteristic}: requires {hypothesis}")]
    UnsupportedCharacteristic {
        characteristic: u64,
        hypothesis: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("invalid trident: {0}")]
    InvalidTrident(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
