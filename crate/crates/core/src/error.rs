use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph capacity exceeded: {0} vertices requested, at most {MAX_VERTICES} supported")]
    Capacity(usize),

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("edge {0}-{1} is not present")]
    EdgeAbsent(usize, usize),

    #[error("edge {0}-{1} is already present")]
    EdgePresent(usize, usize),

    #[error("vertex {vertex} has degree {degree}, splitting needs degree at least 4")]
    DegreeTooSmall { vertex: usize, degree: usize },

    #[error("split sides do not cover exactly the neighbourhood of vertex {0}")]
    CoverViolated(usize),

    #[error("split side has {0} vertices, at least 2 required")]
    SideTooSmall(usize),

    #[error("vertices {0:?} do not form a path")]
    NotAPath([usize; 4]),

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("invalid parameter for family `{family}`: {reason}")]
    FamilyParam { family: String, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("oracle size guard: host has {0} vertices, at most 8 allowed")]
    OracleGuard(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid bounds: {0}")]
    Bounds(String),
}
