use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is not part of the graph")]
    InvalidVertex(VertexId),
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),
    #[error("vertex set must not be empty")]
    EmptySet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not thin; factor it through the quotient instead")]
    NotThin,
    #[error("factor list must not be empty")]
    NoFactors,
    #[error("factor index {index} out of range for {count} factors")]
    FactorIndex { index: usize, count: usize },
    #[error("mapping is not a bijection")]
    NotBijective,
    #[error("coordinates of {0} and {1} are identical")]
    IdenticalCoordinates(VertexId, VertexId),
    #[error("graph has {n} vertices, more than the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph carries no vertex labels")]
    Unlabeled,
    #[error("backbone is empty")]
    EmptyBackbone,
    #[error("edit {index} rejected: {reason}")]
    EditRejected { index: usize, reason: String },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("invalid generator spec: {0}")]
    Spec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
