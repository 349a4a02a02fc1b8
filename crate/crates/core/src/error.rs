use thiserror::Error;

use crate::generator::Feasibility;
use crate::graph::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),

    #[error("edge {0} is already present")]
    EdgePresent(Edge),

    #[error("edge {0} is both removed and added")]
    OverlappingMove(Edge),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("graph is not Eulerian")]
    NotEulerian,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not 3-regular")]
    NotCubic,

    #[error("parameter mismatch: ({n1}, {m1}) vs ({n2}, {m2})")]
    ParameterMismatch { n1: usize, m1: usize, n2: usize, m2: usize },

    #[error("degree profiles differ")]
    DegreeMismatch,

    #[error("no Eulerian graph with n = {n}, m = {m}: {class}")]
    Infeasible { n: usize, m: usize, class: Feasibility },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the supported limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("search exceeded the state cap of {cap}")]
    StateCapExceeded { cap: usize },

    #[error("replay mismatch: {0}")]
    ReplayMismatch(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
