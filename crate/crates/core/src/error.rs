use thiserror::Error;

/// Precondition and input errors. Every variant is a caller mistake or a
/// degenerate input, never an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: String, found: u32 },
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("degenerate companion curve: {0}")]
    DegenerateCompanion(String),
    #[error("order exceeds truncation")]
    OrderExceedsTruncation,
    #[error("Higgs field must vanish at the Hecke point")]
    HiggsNotVanishing,
    #[error("degenerate local model: {0}")]
    DegenerateLocalModel(String),
    #[error("double point not ordinary")]
    DoublePointNotOrdinary,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
