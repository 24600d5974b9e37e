use thiserror::Error;

/// Errors produced by the pebbling toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("configuration has {actual} entries but graph has {expected} vertices")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("cannot move from {from}: it holds {available} pebble(s), 2 needed")]
    InsufficientPebbles { from: usize, available: u32 },

    #[error("{from} -> {to} is not an edge")]
    NotAnEdge { from: usize, to: usize },

    #[error("{what} budget of {limit} exceeded")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("random graph generation failed after {attempts} attempts")]
    RetriesExhausted { attempts: u32 },

    #[error("star partition does not verify against the graph")]
    UnverifiedPartition,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
