use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("generator index out of range at column {column}: {token}")]
    IndexOutOfRange { column: usize, token: String },

    #[error("zero exponent at column {column}")]
    ZeroExponent { column: usize },

    #[error("unsupported strand count {n} (allowed {min}..={max})")]
    StrandCount { n: usize, min: usize, max: usize },

    #[error("elements belong to different structures")]
    StructureMismatch,

    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("enumeration cap exceeded: more than {cap} {what}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
