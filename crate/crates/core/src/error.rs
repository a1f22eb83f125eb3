use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    GraphDisconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a tree")]
    NotATree,
    #[error("order {order} is too small (need at least {required})")]
    OrderTooSmall { order: usize, required: usize },
    #[error("order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("config error: {0}")]
    Config(String),
}

/// Location-tagged failure while reading a graph or config file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, offset {offset}: {message}")]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 0-based byte offset within the line.
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            offset,
            message: message.into(),
        }
    }
}
