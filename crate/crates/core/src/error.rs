use thiserror::Error;

pub type Result<T> = std::result::Result<T, SepError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SepError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The terminals are adjacent (or a terminal set touches the other's
    /// closed neighbourhood), so no separator exists at all.
    #[error("no separator exists: {0}")]
    NoSeparator(String),

    #[error("graph is not AT-free: asteroidal triple {0:?}")]
    NotAtFree([usize; 3]),

    #[error("enumeration refused: {width} free vertices exceeds the cap of {cap}")]
    CapExceeded { width: usize, cap: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An internal invariant failed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> SepError {
    SepError::InvalidArgument(msg.into())
}
