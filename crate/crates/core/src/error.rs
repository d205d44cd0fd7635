use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Live cosets exceeded the configured bound. The group may be infinite,
    /// or the bound too small for the intermediate table.
    #[error("coset enumeration exceeded {max_cosets} live cosets")]
    BoundExceeded { max_cosets: usize },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid Schläfli type {{{p},{q}}}: both entries must be at least 2")]
    InvalidType { p: i64, q: i64 },

    #[error("k = {k} is not admissible for p = {p}: {reason}")]
    InvalidK { p: u64, k: u64, reason: &'static str },

    #[error("Schläfli types differ: {{{0},{1}}} vs {{{2},{3}}}")]
    TypeMismatch(u64, u64, u64, u64),

    #[error("vertex labeling failed: {0}")]
    LabelError(String),

    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),

    #[error("sweep budget exceeded: {needed} enumerations needed, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("closed-form record failed verification: {0}")]
    VerificationFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
