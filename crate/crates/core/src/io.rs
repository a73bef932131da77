//! Text formats.
//!
//! Graph: a header line `n m` followed by `m` lines `u v` with
//! `0 ≤ u, v < n` and `u ≠ v`. Hypergraph: a header `k n m` followed by `m`
//! lines of `k` distinct ids. Blank lines are ignored; repeated edges are
//! rejected. Every error carries the 1-based line number.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{Edge, Graph};
use crate::hypergraph::{HyperEdge, Hypergraph};

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
}

fn parse_ints(line: usize, toks: &[&str], expected: usize, what: &str) -> Result<Vec<usize>, ParseError> {
    if toks.len() != expected {
        return Err(ParseError::new(
            line,
            format!("{what}: expected {expected} integers, found {}", toks.len()),
        ));
    }
    toks.iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| ParseError::new(line, format!("{what}: {t:?} is not a nonnegative integer")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = numbered_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header \"n m\""))?;
    let hv = parse_ints(hline, &header, 2, "header")?;
    let (n, m) = (hv[0], hv[1]);
    let mut pairs = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in lines {
        if pairs.len() == m {
            return Err(ParseError::new(line, format!("more than the {m} edges announced")));
        }
        let uv = parse_ints(line, &toks, 2, "edge")?;
        let (u, v) = (uv[0], uv[1]);
        if u >= n || v >= n {
            return Err(ParseError::new(
                line,
                format!("vertex {} out of range 0..{n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(ParseError::new(line, format!("self-loop at {u}")));
        }
        if !seen.insert(Edge::new(u, v)) {
            return Err(ParseError::new(line, format!("duplicate edge {u} {v}")));
        }
        pairs.push((u, v));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(ParseError::new(
            last_line + 1,
            format!("expected {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::from_edges(n, pairs).map_err(|e| ParseError::new(hline, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = numbered_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header \"k n m\""))?;
    let hv = parse_ints(hline, &header, 3, "header")?;
    let (k, n, m) = (hv[0], hv[1], hv[2]);
    if k < 2 {
        return Err(ParseError::new(
            hline,
            format!("uniformity must be at least 2, got {k}"),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in lines {
        if edges.len() == m {
            return Err(ParseError::new(line, format!("more than the {m} edges announced")));
        }
        let ids = parse_ints(line, &toks, k, "edge")?;
        if let Some(&v) = ids.iter().find(|&&v| v >= n) {
            return Err(ParseError::new(line, format!("vertex {v} out of range 0..{n}")));
        }
        let e = HyperEdge::new(ids.clone()).map_err(|e| ParseError::new(line, e.to_string()))?;
        if !seen.insert(e) {
            return Err(ParseError::new(line, "duplicate edge"));
        }
        edges.push(ids);
        last_line = line;
    }
    if edges.len() != m {
        return Err(ParseError::new(
            last_line + 1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::from_edges(k, n, edges).map_err(|e| ParseError::new(hline, e.to_string()))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.uniformity(), h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let line: Vec<String> = e.vertices().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}
