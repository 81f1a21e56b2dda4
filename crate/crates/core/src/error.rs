//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Invalid type/rank/weights combination.
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation's stated precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is not defined for the active exponent policy.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// The bounded alphabet contains no candidate word for the degree.
    #[error("alphabet window exhausted: {0}")]
    WindowExhausted(String),

    /// Two routes that must agree computed different answers.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// The given root order is not realizable by a reduced word.
    #[error("not a reduced-word order: {0}")]
    NotReducedWordOrder(String),
}

pub type Result<T> = std::result::Result<T, Error>;
