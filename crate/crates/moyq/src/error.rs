use thiserror::Error;

/// A located structural problem in a sliced diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    /// Slice index (0 = bottom). `usize::MAX` for diagram-level issues.
    pub slice: usize,
    /// Piece index within the slice, left to right.
    pub piece: usize,
    pub reason: String,
}

impl std::fmt::Display for Issue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.slice == usize::MAX {
            write!(f, "diagram: {}", self.reason)
        } else {
            write!(f, "slice {}, piece {}: {}", self.slice, self.piece, self.reason)
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("canonical form requires integer exponents")]
    HalfExponent,

    #[error("polynomial division left a remainder")]
    DivisionRemainder,

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid diagram: {}", .0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Issue>),

    #[error("evaluation error: {0}")]
    Eval(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn eval(msg: impl Into<String>) -> Self {
        Error::Eval(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
