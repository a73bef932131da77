//! Low-diameter edge decompositions and covers.
//!
//! The crate splits the edge set of a graph (or a `k`-uniform hypergraph)
//! into a small number of parts of bounded diameter, optionally discarding an
//! exceptional set of at most `ε·n²` (resp. `ε·n^k`) edges. It also generates
//! the extremal instances that show the part counts cannot be improved by
//! much, and ships independent oracles that re-check every output.
//!
//! Module map:
//!
//! * [`graph`] / [`hypergraph`]: representations, distances and the subgraph
//!   constructors the algorithms are built from.
//! * [`decompose`]: edge partitions into parts of diameter 2, 3, 4 (graphs)
//!   and tight diameter 3 (hypergraphs).
//! * [`cover`]: edge covers of graphs with minimum degree at least `ε·n`.
//! * [`extremal`]: lower-bound instance generators and exact chromatic number.
//! * [`harness`]: verification, brute-force oracles, bounds and JSON reports.

pub mod algorithm;
pub mod cover;
pub mod decompose;
pub mod epsilon;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod io;
pub mod limits;

pub use algorithm::Algorithm;
pub use cover::EdgeCover;
pub use decompose::EdgePartition;
pub use epsilon::Epsilon;
pub use error::{
    BoundError, CoverError, DecomposeError, EpsilonError, GenError, GraphError, HypergraphError, OracleError,
    ParseError, VerifyError,
};
pub use graph::{Dist, Edge, EdgeSet, Graph, Subgraph, Vertex};
pub use hypergraph::{HyperEdge, HyperEdgeSet, Hypergraph};
pub use limits::Limits;
