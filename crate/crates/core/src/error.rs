use thiserror::Error;

/// A failure while reading the ASCII surface syntax. Positions are byte
/// offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("namespace error at {pos}: `{var}` is reserved for translation output")]
    Namespace { pos: usize, var: String },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Namespace { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("derivation check failed at {path}: {reason}")]
    Check { path: String, reason: String },
    #[error("partition does not match the goal: {0}")]
    Partition(String),
    #[error("malformed algebra: {0}")]
    Algebra(String),
    #[error("variable `{0}` has no value in the assignment")]
    Unassigned(String),
    #[error("corpus does not match embedding kind {kind}: {detail}")]
    CorpusMismatch { kind: String, detail: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
