use thiserror::Error;

/// Errors raised by graph construction, parsing and the analysis routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} requires at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("json input: {0}")]
    Json(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    Empty,

    #[error("invalid intersection array: {0}")]
    InvalidArray(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A self-check inside an algorithm failed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
