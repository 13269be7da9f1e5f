use thiserror::Error;

/// Errors produced by graph construction, parsing and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} supports at most {cap} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        cap: usize,
        n: usize,
    },

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("degree sequence is not graphical")]
    NotGraphical,

    #[error("graph is not degree-equivalent to any {0}")]
    OutsideFamily(&'static str),

    #[error("graph is the canonical {0} of its degree sequence")]
    Canonical(&'static str),

    #[error("invalid 2-switch: {0}")]
    InvalidSwitch(String),

    #[error("graph is not cubic")]
    NotCubic,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A step of the constructive witness algorithm could not be carried out.
    /// Only reachable when a precondition was violated upstream.
    #[error("witness construction failed: {0}")]
    ProofInvariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
