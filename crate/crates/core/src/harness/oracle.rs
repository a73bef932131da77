//! Brute-force checks written without the producers' code paths: plain
//! adjacency maps, their own BFS, and set algebra for hypergraphs.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::OracleError;
use crate::graph::{Dist, Graph};
use crate::limits::Limits;

/// Diameter of the graph spanned by `edges` (pairs in any orientation).
/// No edges means diameter 0.
pub fn edge_list_diameter(edges: &[(usize, usize)]) -> Dist {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut worst = 0;
    for &s in adj.keys() {
        let mut dist: BTreeMap<usize, usize> = BTreeMap::from([(s, 0)]);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            for &w in &adj[&u] {
                if let Entry::Vacant(e) = dist.entry(w) {
                    e.insert(du + 1);
                    queue.push_back(w);
                }
            }
        }
        if dist.len() < adj.len() {
            return Dist::Infinite;
        }
        worst = worst.max(*dist.values().max().unwrap_or(&0));
    }
    Dist::Finite(worst)
}

/// Whether the `k`-uniform hypergraph with edge list `edges` joins every two
/// of its vertices by a tight path of at most 3 edges.
///
/// Length 1: a shared edge. Length 2: edges `e1`, `e2` with
/// `|e1 ∩ e2| = k − 1`, joining `e1 \ e2` to `e2 \ e1`. Length 3: a middle
/// edge `e2` with `|e1 ∩ e2| = |e2 ∩ e3| = k − 1`, `e2 \ e1 ⊆ e3` and
/// `|e1 ∪ e2 ∪ e3| = k + 2`, joining `e1 \ e2` to `e3 \ e2`.
pub fn hyper_diameter_at_most_3(edges: &[Vec<usize>]) -> bool {
    let sets: Vec<BTreeSet<usize>> = edges.iter().map(|e| e.iter().copied().collect()).collect();
    let Some(k) = sets.first().map(BTreeSet::len) else {
        return true;
    };
    let mut close: HashSet<(usize, usize)> = HashSet::new();
    let mut add = |a: usize, b: usize| {
        close.insert((a.min(b), a.max(b)));
    };
    for e in &sets {
        for &a in e {
            for &b in e {
                if a < b {
                    add(a, b);
                }
            }
        }
    }
    let adjacent: Vec<Vec<usize>> = (0..sets.len())
        .map(|i| {
            (0..sets.len())
                .filter(|&j| j != i && sets[i].intersection(&sets[j]).count() == k - 1)
                .collect()
        })
        .collect();
    let only = |x: &BTreeSet<usize>, y: &BTreeSet<usize>| -> usize {
        *x.difference(y).next().expect("tight neighbors differ in one vertex")
    };
    for (m, mid) in sets.iter().enumerate() {
        for &i in &adjacent[m] {
            add(only(&sets[i], mid), only(mid, &sets[i]));
            for &j in &adjacent[m] {
                if i == j {
                    continue;
                }
                let x = only(mid, &sets[i]);
                let union: BTreeSet<usize> = sets[i].union(mid).chain(sets[j].iter()).copied().collect();
                if sets[j].contains(&x) && union.len() == k + 2 {
                    add(only(&sets[i], mid), only(&sets[j], mid));
                }
            }
        }
    }
    let verts: BTreeSet<usize> = sets.iter().flatten().copied().collect();
    let verts: Vec<usize> = verts.into_iter().collect();
    verts
        .iter()
        .enumerate()
        .all(|(i, &a)| verts[i + 1..].iter().all(|&b| close.contains(&(a, b))))
}

/// The most edges in an induced subgraph of diameter at most `d`.
///
/// Adding edges on a fixed vertex set never increases its diameter, so the
/// maximum over all subgraphs is attained by an induced one; every vertex
/// subset is tried. Refuses graphs above `limits.max_oracle_vertices`.
pub fn max_diam_subgraph_edges(g: &Graph, d: usize, limits: &Limits) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    let cap = limits.max_oracle_vertices.min(20);
    if n > cap {
        return Err(OracleError::TooLarge { vertices: n, cap });
    }
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        let (a, b) = e.endpoints();
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut best = 0;
    for s in 1u32..(1u32 << n) {
        let edges: u32 = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (adj[v] & s).count_ones())
            .sum::<u32>()
            / 2;
        if edges as usize <= best {
            continue;
        }
        let within = (0..n).filter(|&v| s >> v & 1 == 1).all(|v| {
            let mut reach = 1u32 << v;
            for _ in 0..d {
                let mut next = reach;
                for u in 0..n {
                    if reach >> u & 1 == 1 {
                        next |= adj[u] & s;
                    }
                }
                reach = next;
            }
            reach == s
        });
        if within {
            best = edges as usize;
        }
    }
    Ok(best)
}
