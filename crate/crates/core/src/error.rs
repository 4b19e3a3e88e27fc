use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(Vertex, Vertex),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {0} is already in the set")]
    VertexInSet(Vertex),

    #[error("set is not dominating")]
    NotDominating,

    #[error("sets overlap on vertex {0}")]
    SetOverlap(Vertex),

    #[error("exact search refused: n = {n} exceeds limit {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// A proven property failed to hold. Always an implementation bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
