use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("Groebner basis computation exceeded the pair budget of {budget}")]
    BudgetExceeded { budget: usize },

    #[error("empty variety: the ideal is the whole ring")]
    EmptyVariety,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("not a Gale pair: P * Q^T is nonzero")]
    NotGalePair,

    #[error("invalid stellar subdivision: {0}")]
    InvalidSubdivision(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("construction check failed: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
