use thiserror::Error;

/// Errors produced by graph construction, parsing and the DH algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("graph is not distance-hereditary: pruning stalled in layer {layer} with {remaining} vertices left")]
    NotDistanceHereditary { layer: usize, remaining: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("invalid center shape: {0}")]
    InvalidCenterShape(String),

    #[error("certificate set is empty")]
    EmptyCertificate,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("malformed pruning sequence: {0}")]
    MalformedSequence(String),
}

impl Error {
    /// Stable machine-readable name, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DisconnectedGraph => "DisconnectedGraph",
            Error::NotDistanceHereditary { .. } => "NotDistanceHereditary",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::OutOfRange(_) => "OutOfRange",
            Error::BadParameter(_) => "BadParameter",
            Error::InvalidCenterShape(_) => "InvalidCenterShape",
            Error::EmptyCertificate => "EmptyCertificate",
            Error::Parse { .. } => "ParseError",
            Error::SelfLoop { .. } => "SelfLoop",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::MalformedSequence(_) => "MalformedSequence",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
