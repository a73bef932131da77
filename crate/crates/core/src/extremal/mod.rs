//! Lower-bound instance generators.
//!
//! Every generator is deterministic given its parameters and seed. Vertex
//! numbering of the set-system families follows the lexicographic order of
//! `k`-subsets. Oversized requests are refused with
//! [`GenError::CapExceeded`](crate::GenError::CapExceeded).

mod chromatic;
mod families;
mod random;
mod spec;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

pub use chromatic::exact_chromatic;
pub use families::{
    gen_diam5_lower, gen_disjoint_cliques, gen_fk, gen_hk, gen_hkt, gen_incidence, gen_kneser, Diam5Partition,
};
pub use random::{
    diam3_lowerbound_recipe, gen_gnp, gen_random_bipartite, gen_random_hypergraph, pair_neighborhood_subgraph,
    recipe_probability,
};
pub use spec::{generate, GenMeta, GenOutput, GenSpec};

/// A named set of vertices, such as one side of a bipartition or one
/// `A_{i,j}` block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub name: String,
    pub vertices: Vec<Vertex>,
}

/// A generated graph with its recorded vertex classes and optional
/// per-vertex labels (the subset a Kneser or incidence vertex stands for).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub classes: Vec<VertexClass>,
    pub labels: Vec<String>,
}

impl Generated {
    fn plain(graph: Graph) -> Self {
        Generated {
            graph,
            classes: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn class(&self, name: &str) -> Option<&[Vertex]> {
        self.classes
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.vertices.as_slice())
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub(crate) fn check_cap(what: &'static str, size: u128, cap: usize) -> Result<(), crate::GenError> {
    if size > cap as u128 {
        Err(crate::GenError::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn check_probability(p: f64) -> Result<(), crate::GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(crate::GenError::InvalidParameter(format!(
            "probability {p} is outside [0, 1]"
        )))
    }
}
