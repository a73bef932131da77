//! `k`-uniform hypergraphs with the tight-path metric.
//!
//! A tight path of length `ℓ` is a sequence of `ℓ + k − 1` distinct vertices
//! in which every `k` consecutive vertices form an edge; its endpoints are the
//! first and last vertex. Distances are computed in two layers:
//!
//! * [`tight_walk_distances`] runs a BFS over ordered `(k − 1)`-windows and
//!   ignores repeated vertices. It is a lower bound on the true distance.
//! * [`tight_distance`] returns the exact value. A shortest tight walk of
//!   length at most 3 never repeats a vertex (any repeat puts both endpoints in
//!   one edge), so the walk distance is exact up to 3; beyond that an iterative
//!   deepening search over distinct-vertex sequences takes over. That search
//!   is exponential and meant for small instances only.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::HypergraphError;
use crate::graph::{Dist, Vertex};

/// Largest pattern accepted by [`count_labeled_copies`].
pub const PATTERN_VERTEX_CAP: usize = 10;

/// A hyperedge, stored as a sorted list of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperEdge(Vec<Vertex>);

impl HyperEdge {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<HyperEdge, HypergraphError> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::RepeatedVertex(w[0]));
        }
        Ok(HyperEdge(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn intersection_size(&self, other: &HyperEdge) -> usize {
        self.0.iter().filter(|&&v| other.contains(v)).count()
    }
}

impl fmt::Display for HyperEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// A sorted, duplicate-free set of hyperedges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HyperEdgeSet {
    edges: Vec<HyperEdge>,
}

impl HyperEdgeSet {
    pub fn new() -> Self {
        HyperEdgeSet::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &HyperEdge> + '_ {
        self.edges.iter()
    }

    pub fn as_slice(&self) -> &[HyperEdge] {
        &self.edges
    }

    pub fn contains(&self, e: &HyperEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn spanned_vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.edges.iter().flat_map(|e| e.0.iter().copied()).collect();
        set.into_iter().collect()
    }
}

impl FromIterator<HyperEdge> for HyperEdgeSet {
    fn from_iter<I: IntoIterator<Item = HyperEdge>>(iter: I) -> Self {
        let mut edges: Vec<HyperEdge> = iter.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        HyperEdgeSet { edges }
    }
}

/// An ordered `(k − 1)`-tuple of distinct vertices: the BFS state of the
/// tight-path metric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TightWindow(Vec<Vertex>);

impl TightWindow {
    fn key(&self) -> Vec<Vertex> {
        let mut k = self.0.clone();
        k.sort_unstable();
        k
    }

    fn shift(&self, next: Vertex) -> TightWindow {
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[1..]);
        v.push(next);
        TightWindow(v)
    }
}

/// `k`-uniform hypergraph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<HyperEdge>,
    index: HashMap<HyperEdge, usize>,
    incident: Vec<Vec<usize>>,
    // sorted (k-1)-subset -> the vertices completing it to an edge
    completions: HashMap<Vec<Vertex>, Vec<Vertex>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    pub fn from_edges<I>(k: usize, n: usize, edges: I) -> Result<Hypergraph, HypergraphError>
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        if k < 2 {
            return Err(HypergraphError::UniformityTooSmall(k));
        }
        let mut checked = Vec::new();
        let mut seen = HashSet::new();
        for raw in edges {
            if raw.len() != k {
                return Err(HypergraphError::WrongEdgeSize {
                    expected: k,
                    got: raw.len(),
                });
            }
            if let Some(&v) = raw.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            let e = HyperEdge::new(raw)?;
            if !seen.insert(e.clone()) {
                return Err(HypergraphError::DuplicateEdge(e.0));
            }
            checked.push(e);
        }
        Ok(Hypergraph::from_checked(k, n, checked))
    }

    pub(crate) fn from_checked(k: usize, n: usize, edges: Vec<HyperEdge>) -> Hypergraph {
        let mut index = HashMap::with_capacity(edges.len());
        let mut incident = vec![Vec::new(); n];
        let mut completions: HashMap<Vec<Vertex>, Vec<Vertex>> = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            index.insert(e.clone(), i);
            for &v in &e.0 {
                incident[v].push(i);
            }
            for skip in 0..k {
                let key: Vec<Vertex> =
                    e.0.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &v)| v)
                        .collect();
                completions.entry(key).or_default().push(e.0[skip]);
            }
        }
        for list in completions.values_mut() {
            list.sort_unstable();
        }
        Hypergraph {
            k,
            n,
            edges,
            index,
            incident,
            completions,
        }
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in input order.
    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    pub fn edge_index(&self, e: &HyperEdge) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains_edge(&self, e: &HyperEdge) -> bool {
        self.index.contains_key(e)
    }

    /// Ids of the edges containing `v`.
    pub fn incident_edges(&self, v: Vertex) -> &[usize] {
        &self.incident[v]
    }

    pub fn all_edges(&self) -> HyperEdgeSet {
        self.edges.iter().cloned().collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_edge_set(&self, s: &HyperEdgeSet) -> Result<(), HypergraphError> {
        match s.iter().find(|e| !self.contains_edge(e)) {
            Some(e) => Err(HypergraphError::EdgeNotInHypergraph(e.0.clone())),
            None => Ok(()),
        }
    }

    /// Sub-hypergraph on the same vertex ids with exactly the edges of `s`.
    pub fn restrict(&self, s: &HyperEdgeSet) -> Result<Hypergraph, HypergraphError> {
        self.check_edge_set(s)?;
        Ok(Hypergraph::from_checked(self.k, self.n, s.as_slice().to_vec()))
    }

    fn completions_of(&self, key: &[Vertex]) -> &[Vertex] {
        self.completions.get(key).map_or(&[], Vec::as_slice)
    }
}

/// Vertex set and edges of an induced sub-hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubHypergraph {
    pub vertices: Vec<Vertex>,
    pub edges: HyperEdgeSet,
}

/// Tight-walk distances from `v`: like tight paths, but vertices may repeat
/// as long as each edge has `k` distinct vertices. Entry `v` is `Some(0)`.
pub fn tight_walk_distances(h: &Hypergraph, v: Vertex) -> Result<Vec<Option<usize>>, HypergraphError> {
    h.check_vertex(v)?;
    let mut dist = vec![None; h.n];
    dist[v] = Some(0);
    let mut seen: HashSet<TightWindow> = HashSet::new();
    let mut queue = VecDeque::new();
    for &ei in &h.incident[v] {
        let rest: Vec<Vertex> = h.edges[ei].0.iter().copied().filter(|&x| x != v).collect();
        for tail in rest.into_iter().permutations(h.k - 2) {
            let mut w = Vec::with_capacity(h.k - 1);
            w.push(v);
            w.extend(tail);
            let w = TightWindow(w);
            if seen.insert(w.clone()) {
                queue.push_back((w, 0usize));
            }
        }
    }
    while let Some((window, depth)) = queue.pop_front() {
        for &b in h.completions_of(&window.key()) {
            if dist[b].is_none() {
                dist[b] = Some(depth + 1);
            }
            let next = window.shift(b);
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    Ok(dist)
}

/// Is there a tight path of exactly `len` edges from `v` to `w`?
fn tight_path_exists(h: &Hypergraph, v: Vertex, w: Vertex, len: usize) -> bool {
    let total = len + h.k - 1;
    if total > h.n {
        return false;
    }
    let mut seq = vec![v];
    let mut used = vec![false; h.n];
    used[v] = true;
    extend_path(h, &mut seq, &mut used, total, w)
}

fn extend_path(h: &Hypergraph, seq: &mut Vec<Vertex>, used: &mut [bool], total: usize, w: Vertex) -> bool {
    if seq.len() == total {
        return seq.last() == Some(&w);
    }
    let candidates: Vec<Vertex> = if seq.len() < h.k - 1 {
        // still filling the first window: stay inside an edge through the start
        let mut c: Vec<Vertex> = h.incident[seq[0]]
            .iter()
            .map(|&ei| &h.edges[ei])
            .filter(|e| seq.iter().all(|&x| e.contains(x)))
            .flat_map(|e| e.0.iter().copied())
            .filter(|&x| !used[x])
            .collect();
        c.sort_unstable();
        c.dedup();
        c
    } else {
        let mut key = seq[seq.len() + 1 - h.k..].to_vec();
        key.sort_unstable();
        h.completions_of(&key).iter().copied().filter(|&x| !used[x]).collect()
    };
    let last_slot = seq.len() + 1 == total;
    for x in candidates {
        if last_slot != (x == w) {
            continue;
        }
        seq.push(x);
        used[x] = true;
        let found = extend_path(h, seq, used, total, w);
        used[x] = false;
        seq.pop();
        if found {
            return true;
        }
    }
    false
}

fn exact_from_walk(h: &Hypergraph, v: Vertex, w: Vertex, walk: Option<usize>) -> Dist {
    match walk {
        None => Dist::Infinite,
        Some(d) if d <= 3 => Dist::Finite(d),
        Some(d) => (d..=h.n + 1 - h.k).find(|&len| tight_path_exists(h, v, w, len)).into(),
    }
}

/// Exact tight-path distance between two distinct vertices.
pub fn tight_distance(h: &Hypergraph, v: Vertex, w: Vertex) -> Result<Dist, HypergraphError> {
    h.check_vertex(w)?;
    if v == w {
        return Err(HypergraphError::SameEndpoints(v));
    }
    let walk = tight_walk_distances(h, v)?[w];
    Ok(exact_from_walk(h, v, w, walk))
}

/// Tight diameter of the standalone sub-hypergraph with edge set `s`.
/// The empty set has diameter 0.
pub fn tight_diameter(h: &Hypergraph, s: &HyperEdgeSet) -> Result<Dist, HypergraphError> {
    let sub = h.restrict(s)?;
    let verts = s.spanned_vertices();
    let mut best = Dist::Finite(0);
    let mut far = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        let walk = tight_walk_distances(&sub, a)?;
        for &b in &verts[i + 1..] {
            match walk[b] {
                None => return Ok(Dist::Infinite),
                Some(d) if d <= 3 => best = best.max(Dist::Finite(d)),
                Some(d) => far.push((a, b, d)),
            }
        }
    }
    for (a, b, d) in far {
        best = best.max(exact_from_walk(&sub, a, b, Some(d)));
        if best == Dist::Infinite {
            break;
        }
    }
    Ok(best)
}

/// `G(e)`: the sub-hypergraph induced by every vertex of every edge that
/// meets `e` in at least `k − 1` vertices. Its tight diameter is at most 3.
pub fn link_subhypergraph(h: &Hypergraph, e: &HyperEdge) -> Result<SubHypergraph, HypergraphError> {
    if !h.contains_edge(e) {
        return Err(HypergraphError::EdgeNotInHypergraph(e.0.clone()));
    }
    let mut inside = vec![false; h.n];
    for &v in &e.0 {
        inside[v] = true;
    }
    for skip in 0..h.k {
        let key: Vec<Vertex> =
            e.0.iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &v)| v)
                .collect();
        for &b in h.completions_of(&key) {
            inside[b] = true;
        }
    }
    let vertices: Vec<Vertex> = (0..h.n).filter(|&v| inside[v]).collect();
    let edges = vertices
        .iter()
        .flat_map(|&v| h.incident[v].iter())
        .map(|&ei| &h.edges[ei])
        .filter(|f| f.0.iter().all(|&x| inside[x]))
        .cloned()
        .collect();
    Ok(SubHypergraph { vertices, edges })
}

/// Number of injective maps from the pattern's vertices into the host that
/// send every pattern edge onto a host edge (non-induced labeled copies).
pub fn count_labeled_copies(h: &Hypergraph, pattern: &Hypergraph) -> Result<u64, HypergraphError> {
    if h.k != pattern.k {
        return Err(HypergraphError::UniformityMismatch {
            host: h.k,
            pattern: pattern.k,
        });
    }
    if pattern.n > PATTERN_VERTEX_CAP {
        return Err(HypergraphError::PatternTooLarge {
            vertices: pattern.n,
            cap: PATTERN_VERTEX_CAP,
        });
    }
    // edges to test once their largest vertex has been mapped
    let mut due: Vec<Vec<&HyperEdge>> = vec![Vec::new(); pattern.n];
    for e in &pattern.edges {
        due[*e.0.last().expect("k >= 2")].push(e);
    }
    let mut image = vec![0; pattern.n];
    let mut used = vec![false; h.n];
    Ok(count_maps(h, &due, &mut image, &mut used, 0))
}

fn count_maps(h: &Hypergraph, due: &[Vec<&HyperEdge>], image: &mut [Vertex], used: &mut [bool], next: usize) -> u64 {
    if next == due.len() {
        return 1;
    }
    let mut total = 0;
    for x in 0..h.n {
        if used[x] {
            continue;
        }
        image[next] = x;
        let ok = due[next].iter().all(|e| {
            let mapped: Vec<Vertex> = e.0.iter().map(|&p| image[p]).sorted_unstable().collect();
            h.index.contains_key(&HyperEdge(mapped))
        });
        if ok {
            used[x] = true;
            total += count_maps(h, due, image, used, next + 1);
            used[x] = false;
        }
    }
    total
}

/// `H^k` on `2k` vertices: `V = {0..k}`, `W = {k..2k}`, edges `V`, `W` and
/// `{w_i} ∪ V \ {v_i}` for every `i`.
pub fn pattern_hk(k: usize) -> Result<Hypergraph, HypergraphError> {
    if k < 2 {
        return Err(HypergraphError::UniformityTooSmall(k));
    }
    let mut edges = vec![(0..k).collect::<Vec<_>>(), (k..2 * k).collect()];
    for i in 0..k {
        let mut e: Vec<Vertex> = (0..k).filter(|&j| j != i).collect();
        e.push(k + i);
        edges.push(e);
    }
    Hypergraph::from_edges(k, 2 * k, edges)
}

/// `K(2;k)`: complete `k`-partite `k`-uniform hypergraph with parts
/// `{2i, 2i + 1}`; `2k` vertices and `2^k` edges.
pub fn pattern_k2k(k: usize) -> Result<Hypergraph, HypergraphError> {
    if k < 2 {
        return Err(HypergraphError::UniformityTooSmall(k));
    }
    let edges = (0..1usize << k).map(|mask| (0..k).map(|i| 2 * i + ((mask >> i) & 1)).collect());
    Hypergraph::from_edges(k, 2 * k, edges)
}
