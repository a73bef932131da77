use thiserror::Error;

use crate::graph::Dist;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("pair too far: dist({v}, {w}) = {dist} exceeds {d}")]
    PairTooFar { v: usize, w: usize, d: usize, dist: Dist },
    #[error("blow-up factor must be at least 1")]
    ZeroBlowUp,
    #[error("not a bipartition: {0}")]
    NotBipartition(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("edge has {got} vertices, expected {expected}")]
    WrongEdgeSize { expected: usize, got: usize },
    #[error("edge repeats vertex {0}")]
    RepeatedVertex(usize),
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("{0:?} is not an edge of the hypergraph")]
    EdgeNotInHypergraph(Vec<usize>),
    #[error("uniformity mismatch: host is {host}-uniform, pattern is {pattern}-uniform")]
    UniformityMismatch { host: usize, pattern: usize },
    #[error("pattern has {vertices} vertices, refusing to search more than {cap}")]
    PatternTooLarge { vertices: usize, cap: usize },
    #[error("endpoints must differ, got {0} twice")]
    SameEndpoints(usize),
}

/// Errors from the text file loaders; `line` is 1-based.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EpsilonError {
    #[error("cannot parse {0:?} as a rational number")]
    Malformed(String),
    #[error("epsilon {0} outside [0, 1]")]
    OutOfRange(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("epsilon must lie in (0, 1], got {0}")]
    EpsilonOutOfRange(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("epsilon must lie in (0, 1], got {0}")]
    EpsilonOutOfRange(String),
    #[error("minimum degree violated: vertex {vertex} has degree {degree}, need at least {required}")]
    MinDegree {
        vertex: usize,
        degree: usize,
        required: String,
    },
    #[error("sampling cover needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size cap exceeded: {what} would be {size}, cap is {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: usize },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, exhaustive search is capped at {cap}")]
    TooLarge { vertices: usize, cap: usize },
}

/// A verification failure names the offending part (when there is one) and
/// the violated predicate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("part {part}: edge {edge:?} is not an edge of the input")]
    ForeignEdge { part: String, edge: Vec<usize> },
    #[error("part {part}: edge {edge:?} listed twice")]
    RepeatedEdge { part: String, edge: Vec<usize> },
    #[error("disjointness: edge {edge:?} lies in both {first} and {second}")]
    Overlap {
        edge: Vec<usize>,
        first: String,
        second: String,
    },
    #[error("coverage: edge {edge:?} is in no part")]
    Uncovered { edge: Vec<usize> },
    #[error("budget: |E0| = {e0} exceeds epsilon * n^{power} = {budget}")]
    Budget { e0: usize, power: u32, budget: String },
    #[error("part {part}: diameter {diameter} exceeds cap {cap}")]
    Diameter { part: usize, diameter: Dist, cap: usize },
    #[error("part {part} is empty")]
    EmptyPart { part: usize },
    #[error("edge index {index} out of range (input has {m} edges)")]
    BadIndex { index: usize, m: usize },
    #[error("report mismatch: {0}")]
    Mismatch(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("unknown bound kind {0:?}")]
    UnknownKind(String),
    #[error("bounds need epsilon > 0")]
    ZeroEpsilon,
}
