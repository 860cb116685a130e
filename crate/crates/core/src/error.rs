use thiserror::Error;

/// Errors raised by the symbolic and numerical engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor received inconsistent data; `field` names the offending input.
    #[error("invalid {field}: {reason}")]
    Validation { field: &'static str, reason: String },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is only defined for some of the local fields.
    #[error("unsupported field {0}: {1}")]
    UnsupportedField(String, &'static str),

    /// A documented precondition of a numerical routine does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn validation(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Validation {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
