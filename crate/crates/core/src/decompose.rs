//! Edge partitions `E = E0 ∪ E1 ∪ … ∪ Eℓ` with `|E0| ≤ ε·n²` (or `ε·n^k`)
//! and every `Ei` of bounded diameter.
//!
//! All procedures are deterministic: ties are broken towards the smallest
//! vertex id, pair or edge. Parts are listed in extraction order.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::algorithm::Algorithm;
use crate::epsilon::Epsilon;
use crate::error::DecomposeError;
use crate::graph::{
    ball_subgraph, diameter_of_edge_set, edge_components, induced_subgraph, peel_min_degree, walk_subgraph, Dist, Edge,
    EdgeSet, Graph, Vertex,
};
use crate::hypergraph::{link_subhypergraph, HyperEdge, HyperEdgeSet, Hypergraph};

/// An edge partition: the exceptional set `e0` plus the bounded-diameter parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition<S = EdgeSet> {
    pub algorithm: Algorithm,
    pub e0: S,
    pub parts: Vec<S>,
    pub epsilon: Epsilon,
    pub diam_cap: usize,
    /// Parts produced by a fallback branch rather than the main extraction step.
    pub fallback_parts: usize,
}

pub type HyperPartition = EdgePartition<HyperEdgeSet>;

fn check_epsilon(eps: Epsilon) -> Result<(), DecomposeError> {
    if eps.is_zero() {
        Err(DecomposeError::EpsilonOutOfRange(eps.to_string()))
    } else {
        Ok(())
    }
}

/// Part `i` holds every edge whose smaller endpoint is `i`; each part is a
/// star and so has diameter at most 2. Empty parts are dropped.
pub fn decompose_stars(g: &Graph) -> EdgePartition {
    let mut buckets: Vec<Vec<Edge>> = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        buckets[e.lo()].push(*e);
    }
    EdgePartition {
        algorithm: Algorithm::Stars,
        e0: EdgeSet::new(),
        parts: buckets
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(EdgeSet::from_iter)
            .collect(),
        epsilon: Epsilon::ZERO,
        diam_cap: 2,
        fallback_parts: 0,
    }
}

/// Deletes (lowest id first) any vertex adjacent to fewer than half of the
/// other remaining vertices, until none is left. The survivors have pairwise
/// common neighbors, so their induced subgraph has diameter at most 2; the
/// deleted vertices' edges form `e0`, fewer than `n²/4` of them.
pub fn prune_to_diam2(g: &Graph) -> EdgePartition {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    while let Some(v) = (0..n).find(|&v| alive[v] && 2 * degree[v] < remaining - 1) {
        alive[v] = false;
        remaining -= 1;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    let core = induced_subgraph(g, (0..n).filter(|&v| alive[v]));
    let e0 = g
        .edges()
        .iter()
        .filter(|e| !alive[e.lo()] || !alive[e.hi()])
        .copied()
        .collect();
    EdgePartition {
        algorithm: Algorithm::Prune,
        e0,
        parts: if core.edges.is_empty() {
            vec![]
        } else {
            vec![core.edges]
        },
        epsilon: Epsilon::new(1, 4).expect("1/4 is in range"),
        diam_cap: 2,
        fallback_parts: 0,
    }
}

/// An endpoint pair `u < v` and the number of paths `u-a-b-v` on four
/// distinct vertices between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairScore {
    pub u: Vertex,
    pub v: Vertex,
    pub paths: u64,
}

/// The pair with the most length-3 paths between its endpoints, ties going
/// to the lexicographically smallest pair; `None` if `g` has no such path.
///
/// Walks `u-a-b-v` are counted as `Σ_{b ∈ N(v)} w2(u, b)`; the degenerate
/// ones (`a = v` or `b = u`) exist only when `u ~ v` and number
/// `deg(u) + deg(v) − 1`.
pub fn best_pair_by_p3(g: &Graph) -> Option<PairScore> {
    let n = g.vertex_count();
    let mut best: Option<PairScore> = None;
    let mut walks2 = vec![0u64; n];
    for u in 0..n {
        walks2.iter_mut().for_each(|c| *c = 0);
        for &a in g.neighbors(u) {
            for &b in g.neighbors(a) {
                walks2[b] += 1;
            }
        }
        for v in u + 1..n {
            let walks3: u64 = g.neighbors(v).iter().map(|&b| walks2[b]).sum();
            let paths = if g.has_edge(u, v) {
                walks3 - (g.degree(u) + g.degree(v) - 1) as u64
            } else {
                walks3
            };
            if paths > 0 && best.is_none_or(|b| paths > b.paths) {
                best = Some(PairScore { u, v, paths });
            }
        }
    }
    best
}

fn remove_part<T: Ord + Clone>(residual: &mut BTreeSet<T>, part: &[T]) {
    for e in part {
        residual.remove(e);
    }
}

/// Greedy diameter-3 partition: while more than `ε·n²` edges remain, pull
/// out `G_3(u, v)` of the residual graph for the pair `(u, v)` carrying the
/// most length-3 paths.
///
/// When the residual has no path on four vertices every component is a star
/// or a triangle; components are then extracted whole, largest first.
pub fn decompose_diam3(g: &Graph, eps: Epsilon) -> Result<EdgePartition, DecomposeError> {
    check_epsilon(eps)?;
    let n = g.vertex_count();
    let mut residual: BTreeSet<Edge> = g.edges().iter().copied().collect();
    let mut parts = Vec::new();
    let mut fallback_parts = 0;
    while !eps.within_budget(residual.len(), n, 2) {
        let rg = Graph::from_edge_list(n, &residual.iter().copied().collect::<Vec<_>>());
        let part = match best_pair_by_p3(&rg) {
            Some(p) => {
                walk_subgraph(&rg, p.u, p.v, 3)
                    .expect("a pair joined by a length-3 path is within distance 3")
                    .edges
            }
            None => {
                fallback_parts += 1;
                largest_component(&rg)
            }
        };
        debug_assert!(!part.is_empty());
        remove_part(&mut residual, part.as_slice());
        parts.push(part);
    }
    Ok(EdgePartition {
        algorithm: Algorithm::Diam3,
        e0: residual.into_iter().collect(),
        parts,
        epsilon: eps,
        diam_cap: 3,
        fallback_parts,
    })
}

fn largest_component(g: &Graph) -> EdgeSet {
    edge_components(g)
        .into_iter()
        .map(|c| induced_subgraph(g, c).edges)
        .rev()
        .max_by_key(EdgeSet::len)
        .unwrap_or_default()
}

fn best_ball(g: &Graph, candidates: &[Vertex]) -> EdgeSet {
    let mut best = EdgeSet::new();
    for &v in candidates {
        let ball = ball_subgraph(g, v, 2).expect("candidate is a vertex of g").edges;
        if ball.len() > best.len() {
            best = ball;
        }
    }
    best
}

/// Greedy diameter-4 partition: while `m_r > ε·n²` edges remain, peel the
/// residual at degree threshold `m_r / 2n` and pull out the radius-2 ball
/// (in the peeled graph) with the most edges.
pub fn decompose_diam4(g: &Graph, eps: Epsilon) -> Result<EdgePartition, DecomposeError> {
    check_epsilon(eps)?;
    let n = g.vertex_count();
    let mut residual: BTreeSet<Edge> = g.edges().iter().copied().collect();
    let mut parts = Vec::new();
    let mut fallback_parts = 0;
    while !eps.within_budget(residual.len(), n, 2) {
        let edges: Vec<Edge> = residual.iter().copied().collect();
        let rg = Graph::from_edge_list(n, &edges);
        let threshold = Ratio::new(edges.len() as u64, 2 * n as u64);
        let peeled = peel_min_degree(&rg, threshold);
        let part = if peeled.edges.is_empty() {
            // Peeling at m/2n keeps at least m/2 edges, so this only runs if
            // that invariant is ever broken.
            fallback_parts += 1;
            edge_components(&rg)
                .into_iter()
                .map(|c| induced_subgraph(&rg, c).edges)
                .find(|s| diameter_of_edge_set(&rg, s).is_ok_and(|d| d.at_most(4)))
                .unwrap_or_else(|| best_ball(&rg, &(0..n).collect::<Vec<_>>()))
        } else {
            let pg = Graph::from_edge_list(n, peeled.edges.as_slice());
            best_ball(&pg, &peeled.vertices)
        };
        debug_assert!(!part.is_empty());
        remove_part(&mut residual, part.as_slice());
        parts.push(part);
    }
    Ok(EdgePartition {
        algorithm: Algorithm::Diam4,
        e0: residual.into_iter().collect(),
        parts,
        epsilon: eps,
        diam_cap: 4,
        fallback_parts,
    })
}

/// Greedy tight-diameter-3 partition of a `k`-uniform hypergraph: while more
/// than `ε·n^k` edges remain, pull out the largest `G(e)` of the residual.
pub fn decompose_hyper_diam3(h: &Hypergraph, eps: Epsilon) -> Result<HyperPartition, DecomposeError> {
    check_epsilon(eps)?;
    let n = h.vertex_count();
    let k = h.uniformity() as u32;
    let mut residual: BTreeSet<HyperEdge> = h.edges().iter().cloned().collect();
    let mut parts = Vec::new();
    while !eps.within_budget(residual.len(), n, k) {
        let rh = h
            .restrict(&residual.iter().cloned().collect())
            .expect("residual edges come from h");
        let mut best = HyperEdgeSet::new();
        for e in &residual {
            let link = link_subhypergraph(&rh, e).expect("e is a residual edge").edges;
            if link.len() > best.len() {
                best = link;
            }
        }
        remove_part(&mut residual, best.as_slice());
        parts.push(best);
    }
    Ok(EdgePartition {
        algorithm: Algorithm::HyperDiam3,
        e0: residual.into_iter().collect(),
        parts,
        epsilon: eps,
        diam_cap: 3,
        fallback_parts: 0,
    })
}

/// Diameter of every part, recomputed with [`diameter_of_edge_set`].
pub fn part_diameters(g: &Graph, p: &EdgePartition) -> Vec<Dist> {
    p.parts
        .iter()
        .map(|s| diameter_of_edge_set(g, s).unwrap_or(Dist::Infinite))
        .collect()
}
