//! Undirected simple graphs and the shortest-path machinery the
//! decomposition and covering algorithms are built from.
//!
//! Vertices are dense `0..n` ids. A [`Graph`] remembers the order in which
//! its edges were supplied, so that reports can refer to edges by their
//! position in the input file.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        debug_assert_ne!(a, b, "self-loop");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(&self) -> Vertex {
        self.0
    }

    pub fn hi(&self) -> Vertex {
        self.1
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A shortest-path length, or `Infinite` for unreachable pairs.
///
/// `Finite` values order before `Infinite`, so `max` over distances gives
/// the diameter with the usual convention `diam = ∞` when disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(usize),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn at_most(self, cap: usize) -> bool {
        matches!(self, Dist::Finite(d) if d <= cap)
    }
}

impl From<Option<usize>> for Dist {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Dist::Infinite, Dist::Finite)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

/// A set of edges, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Vertices incident to at least one member edge, ascending.
    pub fn spanned_vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        set.into_iter().collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut edges: Vec<Edge> = iter.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSet { edges }
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Builds a graph from vertex pairs, keeping their order as the edge order.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            g.add_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builds a graph from already-validated edges of some parent graph.
    pub(crate) fn from_edge_list(n: usize, edges: &[Edge]) -> Graph {
        let mut adj = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
            index.insert(*e, i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            adj,
            edges: edges.to_vec(),
            index,
        }
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = Edge::new(u, v);
        if self.index.contains_key(&e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        self.index.insert(e, self.edges.len());
        self.edges.push(e);
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.adj.len(),
            })
        }
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.index.contains_key(&Edge::new(u, v))
    }

    /// Edges in input order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of `e` in the input edge order.
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn all_edges(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    /// The lowest-id vertex of minimum degree, with that degree.
    pub fn min_degree(&self) -> Option<(Vertex, usize)> {
        (0..self.vertex_count())
            .map(|v| (v, self.degree(v)))
            .min_by_key(|&(v, d)| (d, v))
    }

    /// Checks that every edge of `s` belongs to this graph.
    pub fn check_edge_set(&self, s: &EdgeSet) -> Result<(), GraphError> {
        match s.iter().find(|e| !self.index.contains_key(e)) {
            Some(e) => Err(GraphError::EdgeNotInGraph(e.0, e.1)),
            None => Ok(()),
        }
    }

    /// Graph on the same vertex set restricted to the edges of `s`.
    pub fn restrict(&self, s: &EdgeSet) -> Result<Graph, GraphError> {
        self.check_edge_set(s)?;
        Ok(Graph::from_edge_list(self.vertex_count(), s.as_slice()))
    }
}

/// Single-source shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMap {
    source: Vertex,
    dist: Vec<Option<usize>>,
}

impl DistanceMap {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn get(&self, v: Vertex) -> Dist {
        self.dist[v].into()
    }

    pub fn raw(&self) -> &[Option<usize>] {
        &self.dist
    }

    /// Largest finite distance, or `Infinite` if some vertex is unreachable.
    pub fn eccentricity(&self) -> Dist {
        self.dist
            .iter()
            .map(|&d| Dist::from(d))
            .max()
            .unwrap_or(Dist::Finite(0))
    }
}

/// The vertex set of an induced subgraph together with its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: Vec<Vertex>,
    pub edges: EdgeSet,
}

impl Subgraph {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn bfs_raw(adj: &[Vec<Vertex>], source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn bfs_distances(g: &Graph, v: Vertex) -> Result<DistanceMap, GraphError> {
    g.check_vertex(v)?;
    Ok(DistanceMap {
        source: v,
        dist: bfs_raw(&g.adj, v),
    })
}

/// Diameter of a whole graph; `0` when it has at most one vertex.
pub fn graph_diameter(g: &Graph) -> Dist {
    (0..g.vertex_count())
        .map(|v| {
            DistanceMap {
                source: v,
                dist: bfs_raw(&g.adj, v),
            }
            .eccentricity()
        })
        .max()
        .unwrap_or(Dist::Finite(0))
}

/// Diameter of the standalone graph whose edges are exactly `s` and whose
/// vertices are those incident to `s`. The empty set has diameter 0.
pub fn diameter_of_edge_set(g: &Graph, s: &EdgeSet) -> Result<Dist, GraphError> {
    g.check_edge_set(s)?;
    let verts = s.spanned_vertices();
    let local: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let compact = Graph::from_edge_list(
        verts.len(),
        &s.iter()
            .map(|e| Edge::new(local[&e.0], local[&e.1]))
            .collect::<Vec<_>>(),
    );
    Ok(graph_diameter(&compact))
}

/// Induced subgraph on `vertices` (need not be sorted or distinct).
pub fn induced_subgraph(g: &Graph, vertices: impl IntoIterator<Item = Vertex>) -> Subgraph {
    let mut inside = vec![false; g.vertex_count()];
    let mut list = Vec::new();
    for v in vertices {
        if !inside[v] {
            inside[v] = true;
            list.push(v);
        }
    }
    list.sort_unstable();
    let inside = &inside;
    let edges = list
        .iter()
        .flat_map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(move |&&w| u < w && inside[w])
                .map(move |&w| Edge::new(u, w))
        })
        .collect();
    Subgraph { vertices: list, edges }
}

/// `G_d(v, w)`: the induced subgraph on every vertex lying on a walk of
/// length at most `d` from `v` to `w`.
///
/// In an undirected graph `u` lies on such a walk iff
/// `dist(v, u) + dist(u, w) ≤ d`, so two BFS sweeps suffice.
pub fn walk_subgraph(g: &Graph, v: Vertex, w: Vertex, d: usize) -> Result<Subgraph, GraphError> {
    let from_v = bfs_distances(g, v)?;
    let from_w = bfs_distances(g, w)?;
    let vw = from_v.get(w);
    if !vw.at_most(d) {
        return Err(GraphError::PairTooFar { v, w, d, dist: vw });
    }
    let members = (0..g.vertex_count()).filter(|&u| match (from_v.dist[u], from_w.dist[u]) {
        (Some(a), Some(b)) => a + b <= d,
        _ => false,
    });
    Ok(induced_subgraph(g, members))
}

/// `G_r(v)`: the induced subgraph on vertices within distance `r` of `v`.
pub fn ball_subgraph(g: &Graph, v: Vertex, r: usize) -> Result<Subgraph, GraphError> {
    let from_v = bfs_distances(g, v)?;
    let members = (0..g.vertex_count()).filter(|&u| from_v.dist[u].is_some_and(|d| d <= r));
    Ok(induced_subgraph(g, members))
}

/// Repeatedly deletes the lowest-id vertex whose current degree is at most
/// `threshold` and returns the induced subgraph on the survivors.
///
/// The survivors form the unique maximal induced subgraph of minimum degree
/// above `threshold`, so the deletion order does not affect the result.
pub fn peel_min_degree(g: &Graph, threshold: Ratio<u64>) -> Subgraph {
    let n = g.vertex_count();
    let at_most = |deg: usize| Ratio::from_integer(deg as u64) <= threshold;
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut pending: BTreeSet<Vertex> = (0..n).filter(|&v| at_most(degree[v])).collect();
    while let Some(v) = pending.pop_first() {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if at_most(degree[w]) {
                    pending.insert(w);
                }
            }
        }
    }
    induced_subgraph(g, (0..n).filter(|&v| alive[v]))
}

/// `G(r)`: each vertex `i` becomes the independent set `{i·r, …, i·r + r − 1}`
/// and every edge becomes a complete bipartite graph between the blocks.
pub fn blow_up(g: &Graph, r: usize) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(GraphError::ZeroBlowUp);
    }
    let mut edges = Vec::with_capacity(g.edge_count() * r * r);
    for e in g.edges() {
        for a in 0..r {
            for b in 0..r {
                edges.push(Edge::new(e.0 * r + a, e.1 * r + b));
            }
        }
    }
    Ok(Graph::from_edge_list(g.vertex_count() * r, &edges))
}

/// Connected components that contain at least one edge, each as a sorted
/// vertex list; components are ordered by their smallest vertex.
pub fn edge_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] || g.degree(s) == 0 {
            continue;
        }
        let dist = bfs_raw(&g.adj, s);
        let comp: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| dist[v].is_some()).collect();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

/// Common-neighbor test for bipartite diameter at most 3: a bipartite graph
/// on at least three vertices has diameter ≤ 3 iff every two vertices in the
/// same class have a common neighbor.
pub fn bipartite_diam3_check(g: &Graph, side_a: &[Vertex], side_b: &[Vertex]) -> Result<bool, GraphError> {
    let n = g.vertex_count();
    let mut class = vec![None; n];
    for (tag, side) in [(0u8, side_a), (1u8, side_b)] {
        for &v in side {
            g.check_vertex(v)?;
            if class[v].replace(tag).is_some() {
                return Err(GraphError::NotBipartition(format!("vertex {v} listed twice")));
            }
        }
    }
    if let Some(v) = class.iter().position(Option::is_none) {
        return Err(GraphError::NotBipartition(format!("vertex {v} in neither class")));
    }
    if let Some(e) = g.edges().iter().find(|e| class[e.0] == class[e.1]) {
        return Err(GraphError::NotBipartition(format!("edge {e} inside one class")));
    }
    if n < 3 {
        return Err(GraphError::NotBipartition(format!("need at least 3 vertices, got {n}")));
    }
    let share = |x: Vertex, y: Vertex| {
        let (a, b) = (g.neighbors(x), g.neighbors(y));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    };
    let all_share = |side: &[Vertex]| {
        side.iter()
            .enumerate()
            .all(|(i, &x)| side[i + 1..].iter().all(|&y| share(x, y)))
    };
    Ok(all_share(side_a) && all_share(side_b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn set(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn bfs_on_path_clique_and_disconnected() {
        let d = bfs_distances(&path4(), 0).unwrap();
        assert_eq!(d.raw(), &[Some(0), Some(1), Some(2), Some(3)]);
        let d = bfs_distances(&complete(4), 2).unwrap();
        assert_eq!(d.raw(), &[Some(1), Some(1), Some(0), Some(1)]);
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d.get(2), Dist::Infinite);
        assert_eq!(d.get(3), Dist::Infinite);
        assert!(bfs_distances(&g, 4).is_err());
    }

    #[test]
    fn edge_set_diameters() {
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(diameter_of_edge_set(&star, &star.all_edges()), Ok(Dist::Finite(2)));
        let k4 = complete(4);
        assert_eq!(diameter_of_edge_set(&k4, &k4.all_edges()), Ok(Dist::Finite(1)));
        let c6 = cycle(6);
        assert_eq!(diameter_of_edge_set(&c6, &c6.all_edges()), Ok(Dist::Finite(3)));
        assert_eq!(diameter_of_edge_set(&c6, &EdgeSet::new()), Ok(Dist::Finite(0)));
        assert_eq!(diameter_of_edge_set(&c6, &set(&[(0, 1), (3, 4)])), Ok(Dist::Infinite));
        assert_eq!(
            diameter_of_edge_set(&c6, &set(&[(0, 2)])),
            Err(GraphError::EdgeNotInGraph(0, 2))
        );
    }

    #[test]
    fn walk_subgraph_examples() {
        let c6 = cycle(6);
        let s = walk_subgraph(&c6, 0, 3, 3).unwrap();
        assert_eq!(s.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(s.edges, c6.all_edges());
        let s = walk_subgraph(&c6, 0, 2, 3).unwrap();
        assert_eq!(s.vertices, vec![0, 1, 2]);
        assert_eq!(s.edges, set(&[(0, 1), (1, 2)]));
        assert!(matches!(
            walk_subgraph(&c6, 0, 3, 2),
            Err(GraphError::PairTooFar {
                dist: Dist::Finite(3),
                ..
            })
        ));
        for v in 0..6 {
            assert_eq!(walk_subgraph(&c6, v, v, 2), ball_subgraph(&c6, v, 1));
        }
    }

    #[test]
    fn ball_examples() {
        let c6 = cycle(6);
        let b = ball_subgraph(&c6, 0, 2).unwrap();
        assert_eq!(b.vertices, vec![0, 1, 2, 4, 5]);
        assert_eq!(b.edges, set(&[(4, 5), (5, 0), (0, 1), (1, 2)]));
        assert_eq!(diameter_of_edge_set(&c6, &b.edges), Ok(Dist::Finite(4)));
        let b = ball_subgraph(&c6, 3, 0).unwrap();
        assert_eq!(b.vertices, vec![3]);
        assert!(b.edges.is_empty());
        let k4 = complete(4);
        assert_eq!(ball_subgraph(&k4, 0, 1).unwrap().edges, k4.all_edges());
    }

    #[test]
    fn peeling_examples() {
        let k4 = complete(4);
        let p = peel_min_degree(&k4, Ratio::from_integer(2));
        assert_eq!(p.vertices, vec![0, 1, 2, 3]);
        let p = peel_min_degree(&path4(), Ratio::from_integer(1));
        assert!(p.is_empty());
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let p = peel_min_degree(&g, Ratio::from_integer(1));
        assert_eq!(p.vertices, vec![0, 1, 2]);
        assert_eq!(p.edges.len(), 3);
    }

    #[test]
    fn blow_up_examples() {
        let k2 = complete(2);
        let b = blow_up(&k2, 2).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (4, 4));
        assert!(b.has_edge(0, 2) && b.has_edge(0, 3) && b.has_edge(1, 2) && b.has_edge(1, 3));
        let b = blow_up(&complete(3), 2).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (6, 12));
        assert_eq!(blow_up(&path4(), 1).unwrap(), path4());
        assert_eq!(blow_up(&path4(), 0), Err(GraphError::ZeroBlowUp));
    }

    #[test]
    fn bipartite_check_examples() {
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(bipartite_diam3_check(&k22, &[0, 1], &[2, 3]), Ok(true));
        let c6 = cycle(6);
        assert_eq!(bipartite_diam3_check(&c6, &[0, 2, 4], &[1, 3, 5]), Ok(true));
        assert_eq!(bipartite_diam3_check(&path4(), &[0, 2], &[1, 3]), Ok(true));
        let c8 = cycle(8);
        assert_eq!(bipartite_diam3_check(&c8, &[0, 2, 4, 6], &[1, 3, 5, 7]), Ok(false));
        assert!(matches!(
            bipartite_diam3_check(&path4(), &[0, 1], &[2, 3]),
            Err(GraphError::NotBipartition(_))
        ));
        assert!(matches!(
            bipartite_diam3_check(&path4(), &[0, 2], &[1]),
            Err(GraphError::NotBipartition(_))
        ));
    }

    #[test]
    fn components_skip_isolated_vertices() {
        let g = Graph::from_edges(6, [(0, 1), (3, 4), (4, 5)]).unwrap();
        assert_eq!(edge_components(&g), vec![vec![0, 1], vec![3, 4, 5]]);
    }
}
