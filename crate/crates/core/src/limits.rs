/// Size caps for generators and exhaustive searches.
///
/// Exceeding a cap is always an explicit refusal, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of edges a generator may emit.
    pub max_edges: usize,
    /// Maximum vertex count accepted by the exact chromatic number search.
    pub max_chromatic_vertices: usize,
    /// Maximum vertex count accepted by the max-edge diameter-`d` subgraph oracle.
    pub max_oracle_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_edges: 5_000_000,
            max_chromatic_vertices: 16,
            max_oracle_vertices: 14,
        }
    }
}
