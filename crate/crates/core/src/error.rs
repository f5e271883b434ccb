use thiserror::Error;

use crate::graph::{Edge, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("odd number of vertices ({0})")]
    OddOrder(usize),
    #[error("graph is a tree with all degrees odd; it has no other spanning tree")]
    AllOddTree,
    #[error("graph on {0} vertices is too small to split")]
    TooSmall(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration guard: {m} edges exceeds the limit of {limit}")]
    TooManyEdges { m: usize, limit: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("empty input: no edges")]
    EmptyInput,
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
