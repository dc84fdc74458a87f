//! Error type shared across the crate.

use crate::graph::EdgeKind;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// What went wrong inside a single construction step during trace replay.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepFault {
    /// The step's declared kind (open/closed) contradicts how the edge
    /// actually classifies against the partial graph built so far.
    WrongKind { declared: EdgeKind, actual: EdgeKind },
    /// The step's edge is already present in the partial graph.
    DuplicateEdge,
    /// A closed step references a vertex that is not part of the partial
    /// graph at that point of the replay.
    DanglingVertex { vertex: usize },
    /// Both endpoints of the step are the same vertex.
    SelfLoop,
}

impl std::fmt::Display for StepFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StepFault::WrongKind { declared, actual } => {
                write!(f, "declared {declared} but the edge classifies as {actual}")
            }
            StepFault::DuplicateEdge => write!(f, "edge is already present"),
            StepFault::DanglingVertex { vertex } => {
                write!(f, "vertex {vertex} is not part of the graph at this point")
            }
            StepFault::SelfLoop => write!(f, "both endpoints are the same vertex"),
        }
    }
}

/// All failure modes surfaced by the crate's public operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("self-loops are not allowed (vertex {vertex})")]
    SelfLoop { vertex: usize },

    #[error("cannot add edge ({u}, {v}): classified as {kind}")]
    InvalidUnion { u: usize, v: usize, kind: EdgeKind },

    #[error("cannot add vertex {vertex} by an open edge: the next free index is {next}")]
    NonContiguousVertex { vertex: usize, next: usize },

    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} is isolated, so the degree sequence leaves the positive-term domain")]
    IsolatedVertex { vertex: usize },

    #[error("degree sequences must have at least one term")]
    EmptySequence,

    #[error("degree sequences require positive terms (term {index} is zero)")]
    NonPositiveTerm { index: usize },

    #[error("sequence is not realizable as a connected graph")]
    NotConnectedSequence,

    #[error("sequence is not graphic")]
    NotGraphic,

    #[error("graph is not connected")]
    NotConnected,

    #[error("cannot merge components: {reason}")]
    CannotMerge { reason: String },

    #[error("input of size {n} is below the minimum of {min} for this operation")]
    DomainTooSmall { n: usize, min: usize },

    #[error("requested size {requested} exceeds the supported maximum of {max}")]
    LimitExceeded { requested: usize, max: usize },

    #[error("invalid step {index}: {fault}")]
    InvalidStep { index: usize, fault: StepFault },

    #[error("trace never introduces vertex {missing}, but uses vertex ids up to {max_seen}")]
    NonContiguousTrace { missing: usize, max_seen: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
