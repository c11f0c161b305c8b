use thiserror::Error;

/// Errors reported by graph construction, parsing and the deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("terminals must be distinct (both are {0})")]
    SameTerminals(usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("contraction of the terminal edge {0}-{1} is not allowed")]
    TerminalContraction(usize, usize),
    #[error("malformed embedding: {0}")]
    MalformedEmbedding(String),
    #[error("embedding is not orientable")]
    NonOrientable,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("search budget of {0} node expansions exceeded")]
    BudgetExceeded(u64),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("bridge {0} is not planar together with the cycle")]
    NonPlanarBridge(usize),
    #[error("attachment {0} lies outside the segment")]
    AttachmentOutsideSegment(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("witness is stale: {0}")]
    StaleWitness(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
