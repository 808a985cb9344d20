use thiserror::Error;

/// Errors produced by the expansion, covering and dimension routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerronError {
    /// A digit word violates `c_i >= r_{i-1} + 1`. `index` is 1-based.
    #[error("invalid digit at index {index}: {reason}")]
    Validity { index: usize, reason: String },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text that could not be parsed as a rational, word or rule.
    #[error("parse error: {0}")]
    Parse(String),
}

impl PerronError {
    pub(crate) fn validity(index: usize, reason: impl Into<String>) -> Self {
        PerronError::Validity {
            index,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        PerronError::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, PerronError>;
