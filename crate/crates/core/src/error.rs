use thiserror::Error;

/// Errors raised by the group, duality, topology and integer-model layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("enumeration capacity exceeded: group of order {order} is above the bound {bound}")]
    Capacity { order: u64, bound: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
