//! Edge covers of graphs with minimum degree at least `ε·n`. Parts may
//! overlap; their union is always the whole edge set.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithm::Algorithm;
use crate::epsilon::Epsilon;
use crate::error::CoverError;
use crate::graph::{ball_subgraph, bfs_distances, walk_subgraph, EdgeSet, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCover {
    pub algorithm: Algorithm,
    pub parts: Vec<EdgeSet>,
    pub epsilon: Epsilon,
    pub diam_cap: usize,
    pub seed: Option<u64>,
    /// Random pairs drawn; zero for the deterministic covers.
    pub samples: usize,
    /// Parts produced before identical ones were merged.
    pub raw_parts: usize,
    /// Parts added by deterministic completion.
    pub fallback_parts: usize,
}

fn check_min_degree(g: &Graph, eps: Epsilon) -> Result<(), CoverError> {
    if eps.is_zero() {
        return Err(CoverError::EpsilonOutOfRange(eps.to_string()));
    }
    let n = g.vertex_count();
    for v in 0..n {
        let degree = g.degree(v);
        if !eps.degree_at_least(degree, n) {
            return Err(CoverError::MinDegree {
                vertex: v,
                degree,
                required: format!("{eps} * {n}"),
            });
        }
    }
    Ok(())
}

/// Keeps the first copy of every part, in order, and drops empty ones.
fn dedup(parts: Vec<EdgeSet>) -> Vec<EdgeSet> {
    let mut seen = HashSet::new();
    parts
        .into_iter()
        .filter(|p| !p.is_empty() && seen.insert(p.clone()))
        .collect()
}

/// `⌈2·ε⁻²·log₂ n⌉`, the number of random pairs drawn by
/// [`cover_sampling_diam3`].
pub fn sample_count(n: usize, eps: Epsilon) -> usize {
    if n < 2 || eps.is_zero() {
        return 0;
    }
    let inv = eps.inverse_f64();
    (2.0 * inv * inv * (n as f64).log2()).ceil() as usize
}

/// Draws [`sample_count`] pairs `(v, w)` uniformly with repetition from a
/// ChaCha8 stream seeded with `seed`, keeps `G_3(v, w)` for each pair at
/// distance at most 3, merges identical parts, then covers any edge still
/// missed by `G_3(u, v)` of its own endpoints.
pub fn cover_sampling_diam3(g: &Graph, eps: Epsilon, seed: u64) -> Result<EdgeCover, CoverError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(CoverError::TooFewVertices(n));
    }
    check_min_degree(g, eps)?;
    let samples = sample_count(n, eps);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = Vec::new();
    for _ in 0..samples {
        let v = rng.gen_range(0..n);
        let w = rng.gen_range(0..n);
        if let Ok(sub) = walk_subgraph(g, v, w, 3) {
            raw.push(sub.edges);
        }
    }
    let raw_parts = raw.len();
    let mut parts = dedup(raw);

    let mut covered = vec![false; g.edge_count()];
    for p in &parts {
        for e in p.iter() {
            covered[g.edge_index(e).expect("part edges come from g")] = true;
        }
    }
    let mut fallback_parts = 0;
    for (i, e) in g.edges().iter().enumerate() {
        if covered[i] {
            continue;
        }
        let part = walk_subgraph(g, e.lo(), e.hi(), 3)
            .expect("endpoints of an edge are at distance 1")
            .edges;
        for f in part.iter() {
            covered[g.edge_index(f).expect("part edges come from g")] = true;
        }
        parts.push(part);
        fallback_parts += 1;
    }
    Ok(EdgeCover {
        algorithm: Algorithm::SamplingDiam3,
        parts,
        epsilon: eps,
        diam_cap: 3,
        seed: Some(seed),
        samples,
        raw_parts,
        fallback_parts,
    })
}

/// Greedy in ascending id: `v` joins when it is at distance more than 2 from
/// every vertex already chosen. Every vertex ends up within distance 2 of
/// the set.
pub fn maximal_scattered_set(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    let mut chosen = Vec::new();
    for v in 0..n {
        if blocked[v] {
            continue;
        }
        chosen.push(v);
        blocked[v] = true;
        for &a in g.neighbors(v) {
            blocked[a] = true;
            for &b in g.neighbors(a) {
                blocked[b] = true;
            }
        }
    }
    chosen
}

/// Radius-2 balls around a maximal scattered set `S` plus `G_5(s, t)` for
/// every pair of centers at distance at most 5. Fewer than `ε⁻²` parts.
/// Parts are kept even when two coincide, so the count is `|S|` plus the
/// number of close pairs.
pub fn cover_diam5(g: &Graph, eps: Epsilon) -> Result<EdgeCover, CoverError> {
    check_min_degree(g, eps)?;
    let centers = maximal_scattered_set(g);
    let mut raw: Vec<EdgeSet> = centers
        .iter()
        .map(|&s| ball_subgraph(g, s, 2).expect("center is a vertex").edges)
        .collect();
    for (i, &s) in centers.iter().enumerate() {
        let dist = bfs_distances(g, s).expect("center is a vertex");
        for &t in &centers[i + 1..] {
            if dist.get(t).at_most(5) {
                raw.push(walk_subgraph(g, s, t, 5).expect("distance checked").edges);
            }
        }
    }
    let raw_parts = raw.len();
    Ok(EdgeCover {
        algorithm: Algorithm::ScatteredDiam5,
        parts: raw,
        epsilon: eps,
        diam_cap: 5,
        seed: None,
        samples: 0,
        raw_parts,
        fallback_parts: 0,
    })
}

/// Radius-3 balls around a maximal scattered set, one part per center.
/// Fewer than `ε⁻¹` parts.
pub fn cover_diam6(g: &Graph, eps: Epsilon) -> Result<EdgeCover, CoverError> {
    check_min_degree(g, eps)?;
    let raw: Vec<EdgeSet> = maximal_scattered_set(g)
        .into_iter()
        .map(|s| ball_subgraph(g, s, 3).expect("center is a vertex").edges)
        .collect();
    let raw_parts = raw.len();
    Ok(EdgeCover {
        algorithm: Algorithm::ScatteredDiam6,
        parts: raw,
        epsilon: eps,
        diam_cap: 6,
        seed: None,
        samples: 0,
        raw_parts,
        fallback_parts: 0,
    })
}
