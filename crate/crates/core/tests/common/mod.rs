#![allow(dead_code)]

use ldd_core::{Dist, Edge, EdgeSet, Graph};
use proptest::prelude::*;

/// All-pairs distances by Floyd–Warshall; `None` is unreachable.
pub fn floyd(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<Option<usize>>> {
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(a, b) in pairs {
        d[a][b] = Some(1);
        d[b][a] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| x + y < c) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

/// Diameter of the graph spanned by `pairs`, via Floyd–Warshall.
pub fn fw_diameter(pairs: &[(usize, usize)]) -> Dist {
    let mut verts: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let compact: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let d = floyd(verts.len(), &compact);
    let mut worst = Dist::Finite(0);
    for row in &d {
        for x in row {
            worst = worst.max(match x {
                Some(v) => Dist::Finite(*v),
                None => Dist::Infinite,
            });
        }
    }
    worst
}

pub fn pairs_of(s: &EdgeSet) -> Vec<(usize, usize)> {
    s.iter().map(Edge::endpoints).collect()
}

pub fn graph_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(Edge::endpoints).collect()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Random simple graphs on `2..=max_n` vertices, given by an adjacency bitmask.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let chosen: Vec<(usize, usize)> = all.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, chosen).unwrap()
        })
    })
}

/// Like [`arb_graph`] but with edge density biased by `weight` percent.
pub fn arb_dense_graph(min_n: usize, max_n: usize, weight: u32) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(weight as f64 / 100.0), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let chosen: Vec<(usize, usize)> = all.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, chosen).unwrap()
        })
    })
}
