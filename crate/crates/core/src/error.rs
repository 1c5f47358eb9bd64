use thiserror::Error;

/// Errors raised by matrix, chain, Ferrers and counting operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("out of bounds: {0}")]
    Bounds(String),

    #[error("natural join condition violated: last level has {left} vertices, next first level has {right}")]
    JoinCondition { left: usize, right: usize },

    #[error("size bound exceeded: {0}")]
    Size(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
