use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{binomial, check_cap, check_probability, Generated, VertexClass};
use crate::error::GenError;
use crate::graph::{blow_up, induced_subgraph, Edge, Graph, Subgraph, Vertex};
use crate::hypergraph::{HyperEdge, Hypergraph};
use crate::limits::Limits;

/// `G(n, p)`: pairs visited in lexicographic order, each kept with
/// probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64, limits: &Limits) -> Result<Graph, GenError> {
    check_probability(p)?;
    check_cap("candidate pairs", binomial(n, 2), limits.max_edges)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges))
}

/// `G(n, n, p)` on classes `left = [0, n)` and `right = [n, 2n)`.
pub fn gen_random_bipartite(n: usize, p: f64, seed: u64, limits: &Limits) -> Result<Generated, GenError> {
    check_probability(p)?;
    if n == 0 {
        return Err(GenError::InvalidParameter("bipartite classes need n >= 1".into()));
    }
    check_cap("candidate pairs", (n as u128) * (n as u128), limits.max_edges)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(p) {
                edges.push(Edge::new(i, n + j));
            }
        }
    }
    Ok(Generated {
        graph: Graph::from_edge_list(2 * n, &edges),
        classes: vec![
            VertexClass {
                name: "left".into(),
                vertices: (0..n).collect(),
            },
            VertexClass {
                name: "right".into(),
                vertices: (n..2 * n).collect(),
            },
        ],
        labels: Vec::new(),
    })
}

/// Random `k`-uniform hypergraph: every `k`-subset, in lexicographic order,
/// is an edge with probability `p`.
pub fn gen_random_hypergraph(k: usize, n: usize, p: f64, seed: u64, limits: &Limits) -> Result<Hypergraph, GenError> {
    check_probability(p)?;
    if k < 2 {
        return Err(GenError::InvalidParameter(format!(
            "uniformity must be at least 2, got {k}"
        )));
    }
    check_cap("candidate k-subsets", binomial(n, k), limits.max_edges)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..n)
        .combinations(k)
        .filter(|_| rng.gen_bool(p))
        .map(|s| HyperEdge::new(s).expect("combinations are distinct"))
        .collect();
    Ok(Hypergraph::from_checked(k, n, edges))
}

/// `1 / (4·√t)`.
pub fn recipe_probability(t: usize) -> f64 {
    1.0 / (4.0 * (t as f64).sqrt())
}

/// `G(t, t, 1/(4√t))` blown up by `r`. Classes are carried through the
/// blow-up, so `left` is `[0, t·r)` and `right` is `[t·r, 2t·r)`.
pub fn diam3_lowerbound_recipe(t: usize, r: usize, seed: u64, limits: &Limits) -> Result<Generated, GenError> {
    if r == 0 {
        return Err(GenError::InvalidParameter("blow-up factor r must be at least 1".into()));
    }
    check_cap("candidate pairs", (t as u128 * r as u128).pow(2), limits.max_edges)?;
    let base = gen_random_bipartite(t, recipe_probability(t), seed, limits)?;
    let graph = blow_up(&base.graph, r).map_err(|e| GenError::InvalidParameter(e.to_string()))?;
    let blocks = |vs: &[Vertex]| vs.iter().flat_map(|&v| v * r..v * r + r).collect();
    let classes = base
        .classes
        .iter()
        .map(|c| VertexClass {
            name: c.name.clone(),
            vertices: blocks(&c.vertices),
        })
        .collect();
    Ok(Generated {
        graph,
        classes,
        labels: Vec::new(),
    })
}

/// The induced subgraph on `N(a) ∪ N(b)`. For an edge `ab` of a bipartite
/// graph it has diameter at most 3.
pub fn pair_neighborhood_subgraph(g: &Graph, a: Vertex, b: Vertex) -> Subgraph {
    induced_subgraph(g, g.neighbors(a).iter().chain(g.neighbors(b)).copied())
}
