use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("labels must be nonempty")]
    EmptyLabel,

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("element set {bits:#x} is not contained in a ground set of size {size}")]
    OutOfGround { bits: u64, size: usize },

    #[error("ground set of size {size} exceeds the supported maximum of {max}")]
    GroundTooLarge { size: usize, max: usize },

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matroid is not co-transversal: alpha({witness}) = {alpha}")]
    NotCotransversal { witness: String, alpha: i64 },

    #[error("contraction by `{element}` is not transversal: minimal presenting graph {edges} has a cycle")]
    NotTransversal { element: String, edges: String },

    #[error("set exchange rejected: {0}")]
    ExchangeRejected(String),

    #[error("invalid path-circular instance: {0}")]
    InvalidInstance(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
