use itertools::Itertools;

use super::{binomial, check_cap, Generated, VertexClass};
use crate::error::GenError;
use crate::graph::{Edge, Graph, Vertex};
use crate::limits::Limits;

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParameter(msg.into())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

fn subset_label(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().join(","))
}

fn class(name: impl Into<String>, vertices: impl IntoIterator<Item = Vertex>) -> VertexClass {
    VertexClass {
        name: name.into(),
        vertices: vertices.into_iter().collect(),
    }
}

/// `t` disjoint cliques of size `n / t`; clique `i` is `[i·s, (i + 1)·s)`.
pub fn gen_disjoint_cliques(n: usize, t: usize, limits: &Limits) -> Result<Generated, GenError> {
    if t == 0 || !n.is_multiple_of(t) {
        return Err(invalid(format!("clique count t = {t} must divide n = {n}")));
    }
    let s = n / t;
    check_cap("edges", t as u128 * binomial(s, 2), limits.max_edges)?;
    let mut edges = Vec::new();
    for c in 0..t {
        for u in c * s..(c + 1) * s {
            for v in u + 1..(c + 1) * s {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Ok(Generated {
        graph: Graph::from_edge_list(n, &edges),
        classes: (0..t)
            .map(|c| class(format!("clique{c}"), c * s..(c + 1) * s))
            .collect(),
        labels: Vec::new(),
    })
}

/// `KG(n, k)`: `k`-subsets of `[n]`, adjacent when disjoint.
pub fn gen_kneser(n: usize, k: usize, limits: &Limits) -> Result<Generated, GenError> {
    if k == 0 || n < 2 * k {
        return Err(invalid(format!(
            "Kneser graph needs n >= 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    let verts = binomial(n, k);
    check_cap("vertices", verts, limits.max_edges)?;
    check_cap("edges", verts.saturating_mul(binomial(n - k, k)) / 2, limits.max_edges)?;
    let sets = subsets(n, k);
    let masks: Vec<Vec<bool>> = sets
        .iter()
        .map(|s| {
            let mut m = vec![false; n];
            s.iter().for_each(|&x| m[x] = true);
            m
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[j].iter().all(|&x| !masks[i][x]) {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Ok(Generated {
        graph: Graph::from_edge_list(sets.len(), &edges),
        classes: Vec::new(),
        labels: sets.iter().map(|s| subset_label(s)).collect(),
    })
}

/// Appends `t` copies of `IG(n, k)` sharing one set class: set `S` (vertex
/// `offset + idx`) is joined to element `x` of block `b` (vertex
/// `offset + C(n,k) + b·n + x`) for every `x ∈ S`.
fn push_hkt(sets: &[Vec<usize>], n: usize, t: usize, offset: usize, edges: &mut Vec<Edge>) {
    let base = offset + sets.len();
    for (idx, s) in sets.iter().enumerate() {
        for b in 0..t {
            for &x in s {
                edges.push(Edge::new(offset + idx, base + b * n + x));
            }
        }
    }
}

fn check_hkt(n: usize, k: usize, t: usize, copies: usize, limits: &Limits) -> Result<(), GenError> {
    if k == 0 || n < k || t == 0 {
        return Err(invalid(format!(
            "need n >= k >= 1 and t >= 1, got n = {n}, k = {k}, t = {t}"
        )));
    }
    let c = binomial(n, k);
    check_cap("vertices", (c + (n * t) as u128) * copies as u128, limits.max_edges)?;
    check_cap("edges", (c * (k * t) as u128) * copies as u128, limits.max_edges)
}

/// `H(n, k, t)`: class `sets` holds the `C(n, k)` subsets, class `elements`
/// holds `t` blocks of `n` elements; each block with the sets is a copy of
/// `IG(n, k)`.
pub fn gen_hkt(n: usize, k: usize, t: usize, limits: &Limits) -> Result<Generated, GenError> {
    check_hkt(n, k, t, 1, limits)?;
    let sets = subsets(n, k);
    let c = sets.len();
    let mut edges = Vec::new();
    push_hkt(&sets, n, t, 0, &mut edges);
    let total = c + n * t;
    let mut labels: Vec<String> = sets.iter().map(|s| subset_label(s)).collect();
    labels.extend((0..t).flat_map(|b| (0..n).map(move |x| format!("{x}#{b}"))));
    Ok(Generated {
        graph: Graph::from_edge_list(total, &edges),
        classes: vec![class("sets", 0..c), class("elements", c..total)],
        labels,
    })
}

/// `IG(n, k)`: `C(n, k)` set vertices followed by `n` element vertices.
pub fn gen_incidence(n: usize, k: usize, limits: &Limits) -> Result<Generated, GenError> {
    gen_hkt(n, k, 1, limits)
}

/// `t = C(4k, k) / 4k`, refused when it is not an integer.
fn hk_blocks(k: usize) -> Result<usize, GenError> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let c = binomial(4 * k, k);
    if !c.is_multiple_of((4 * k) as u128) {
        return Err(invalid(format!(
            "C({}, {k}) = {c} is not divisible by {}, so H_{k} is undefined",
            4 * k,
            4 * k
        )));
    }
    usize::try_from(c / (4 * k) as u128).map_err(|_| invalid("block count overflows"))
}

/// `H_k = H(4k, k, C(4k, k) / 4k)`: `a_k / 2` vertices, `a_k / 16`-regular,
/// where `a_k = 4·C(4k, k)`.
pub fn gen_hk(k: usize, limits: &Limits) -> Result<Generated, GenError> {
    let t = hk_blocks(k)?;
    gen_hkt(4 * k, k, t, limits)
}

/// Two copies of `H_k` with each set vertex matched to its twin. Classes
/// `A1`, `B1` (sets and elements of the first copy) and `A2`, `B2`.
pub fn gen_fk(k: usize, limits: &Limits) -> Result<Generated, GenError> {
    let t = hk_blocks(k)?;
    let n = 4 * k;
    check_hkt(n, k, t, 2, limits)?;
    let sets = subsets(n, k);
    let c = sets.len();
    let half = c + n * t;
    let mut edges = Vec::new();
    for copy in 0..2 {
        push_hkt(&sets, n, t, copy * half, &mut edges);
    }
    edges.extend((0..c).map(|s| Edge::new(s, half + s)));
    Ok(Generated {
        graph: Graph::from_edge_list(2 * half, &edges),
        classes: vec![
            class("A1", 0..c),
            class("B1", c..half),
            class("A2", half..half + c),
            class("B2", half + c..2 * half),
        ],
        labels: Vec::new(),
    })
}

/// How the Kneser vertices `C([4k], k)` are split into `U_1, …, U_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diam5Partition {
    /// Greedy proper coloring in lexicographic order; color class `c` goes
    /// to part `c mod d`.
    GreedyColoring,
    /// Part index (in `0..d`) for each `k`-subset in lexicographic order.
    Explicit(Vec<usize>),
}

fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.vertex_count()];
    for v in 0..g.vertex_count() {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).expect("some color is free");
    }
    color
}

/// Two graphs `F_1`, `F_2`, each `d` disjoint copies of `H_k`, plus the
/// shifted matching `S_{i,1} ~ S_{i+b,2}` (indices mod `d`) for `S ∈ U_b`.
///
/// Copy `i` of `H_k` in `F_j` is the vertex range starting at
/// `((j − 1)·d + i)·a_k/2`; its set class is `A[i,j]` and its element class
/// `B[i,j]`, both with `i` in `0..d` and `j` in `{1, 2}`. Only the distance
/// structure is produced here; whether the parts `U_b` carry large
/// chromatic number is not checked.
pub fn gen_diam5_lower(k: usize, d: usize, partition: &Diam5Partition, limits: &Limits) -> Result<Generated, GenError> {
    if d < 2 {
        return Err(invalid(format!("need d >= 2 copies, got {d}")));
    }
    let t = hk_blocks(k)?;
    let n = 4 * k;
    check_hkt(n, k, t, 2 * d, limits)?;
    let sets = subsets(n, k);
    let c = sets.len();
    let part: Vec<usize> = match partition {
        Diam5Partition::GreedyColoring => {
            let kneser = gen_kneser(n, k, limits)?;
            greedy_coloring(&kneser.graph).into_iter().map(|col| col % d).collect()
        }
        Diam5Partition::Explicit(p) => {
            if p.len() != c {
                return Err(invalid(format!("partition lists {} subsets, need {c}", p.len())));
            }
            if let Some(&b) = p.iter().find(|&&b| b >= d) {
                return Err(invalid(format!("partition index {b} is not below d = {d}")));
            }
            p.clone()
        }
    };
    let half = c + n * t;
    let start = |i: usize, j: usize| ((j - 1) * d + i) * half;
    let mut edges = Vec::new();
    let mut classes = Vec::new();
    for j in 1..=2 {
        for i in 0..d {
            let s = start(i, j);
            push_hkt(&sets, n, t, s, &mut edges);
            classes.push(class(format!("A[{i},{j}]"), s..s + c));
            classes.push(class(format!("B[{i},{j}]"), s + c..s + half));
        }
    }
    for i in 0..d {
        for (idx, &b) in part.iter().enumerate() {
            edges.push(Edge::new(start(i, 1) + idx, start((i + b) % d, 2) + idx));
        }
    }
    Ok(Generated {
        graph: Graph::from_edge_list(2 * d * half, &edges),
        classes,
        labels: Vec::new(),
    })
}
