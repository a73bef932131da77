//! Re-checks a partition or cover from scratch and builds its report.
//! Producer-side diameters are never consulted.

use std::collections::HashSet;

use super::bounds::{bound_formula, ratio_to_f64, BoundKind};
use super::oracle::{edge_list_diameter, hyper_diameter_at_most_3};
use super::report::{InputDigest, Report, SCHEMA};
use crate::algorithm::Algorithm;
use crate::cover::EdgeCover;
use crate::decompose::{EdgePartition, HyperPartition};
use crate::epsilon::Epsilon;
use crate::error::VerifyError;
use crate::graph::{Dist, Edge, EdgeSet, Graph};
use crate::hypergraph::{tight_diameter, HyperEdge, HyperEdgeSet, Hypergraph};

fn name(part: Option<usize>) -> String {
    match part {
        None => "e0".to_string(),
        Some(i) => format!("part {i}"),
    }
}

fn pair(e: &Edge) -> Vec<usize> {
    vec![e.lo(), e.hi()]
}

fn graph_indices(g: &Graph, part: Option<usize>, s: &EdgeSet) -> Result<Vec<usize>, VerifyError> {
    s.iter()
        .map(|e| {
            g.edge_index(e).ok_or_else(|| VerifyError::ForeignEdge {
                part: name(part),
                edge: pair(e),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(sorted)
}

fn hyper_indices(h: &Hypergraph, part: Option<usize>, s: &HyperEdgeSet) -> Result<Vec<usize>, VerifyError> {
    s.iter()
        .map(|e| {
            h.edge_index(e).ok_or_else(|| VerifyError::ForeignEdge {
                part: name(part),
                edge: e.vertices().to_vec(),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(sorted)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Disjointness, exact union and non-empty parts over edge indices.
fn check_partition(
    m: usize,
    e0: &[usize],
    parts: &[Vec<usize>],
    describe: impl Fn(usize) -> Vec<usize>,
) -> Result<(), VerifyError> {
    let mut owner: Vec<Option<Option<usize>>> = vec![None; m];
    let named = std::iter::once((None, e0)).chain(parts.iter().enumerate().map(|(i, p)| (Some(i), p.as_slice())));
    for (part, idx) in named {
        if let Some(i) = part {
            if idx.is_empty() {
                return Err(VerifyError::EmptyPart { part: i });
            }
        }
        for &x in idx {
            if let Some(first) = owner[x].replace(part) {
                return Err(VerifyError::Overlap {
                    edge: describe(x),
                    first: name(first),
                    second: name(part),
                });
            }
        }
    }
    match owner.iter().position(Option::is_none) {
        Some(x) => Err(VerifyError::Uncovered { edge: describe(x) }),
        None => Ok(()),
    }
}

fn check_budget(eps: Epsilon, e0: usize, n: usize, power: u32) -> Result<(), VerifyError> {
    if eps.within_budget(e0, n, power) {
        Ok(())
    } else {
        Err(VerifyError::Budget {
            e0,
            power,
            budget: eps.budget(n, power).to_string(),
        })
    }
}

fn check_diameters(diameters: &[Dist], cap: usize) -> Result<(), VerifyError> {
    match diameters.iter().position(|d| !d.at_most(cap)) {
        Some(part) => Err(VerifyError::Diameter {
            part,
            diameter: diameters[part],
            cap,
        }),
        None => Ok(()),
    }
}

fn graph_diameter_of(s: &EdgeSet) -> Dist {
    let pairs: Vec<(usize, usize)> = s.iter().map(Edge::endpoints).collect();
    edge_list_diameter(&pairs)
}

struct Outcome {
    algorithm: Algorithm,
    epsilon: Epsilon,
    diam: usize,
    parts: Vec<Vec<usize>>,
    e0: Vec<usize>,
    diameters: Vec<Dist>,
    fallback_parts: usize,
    raw_parts: Option<usize>,
    samples: Option<usize>,
    seed: Option<u64>,
}

fn build_report(input: InputDigest, o: Outcome) -> Report {
    let kind = BoundKind::for_algorithm(o.algorithm);
    let bound = kind.and_then(|k| bound_formula(k, input.n, o.epsilon).ok().map(|b| (k, b)));
    let within_bound = bound.is_none_or(|(k, b)| k.admits(o.parts.len(), b));
    Report {
        schema: SCHEMA.to_string(),
        input,
        algorithm: o.algorithm,
        epsilon: o.epsilon,
        diam: o.diam,
        part_count: o.parts.len(),
        e0_size: o.e0.len(),
        parts: o.parts,
        e0: o.e0,
        diameters: o.diameters.iter().map(|d| d.finite()).collect(),
        bound_kind: bound.map(|(k, _)| k),
        bound: bound.map(|(_, b)| ratio_to_f64(b)),
        within_bound,
        fallback_parts: o.fallback_parts,
        raw_parts: o.raw_parts,
        samples: o.samples,
        seed: o.seed,
        elapsed_ms: 0.0,
    }
}

fn graph_digest(g: &Graph) -> InputDigest {
    InputDigest {
        n: g.vertex_count(),
        m: g.edge_count(),
        uniformity: 2,
        family: None,
        seed: None,
    }
}

/// Disjointness, exact union, `|e0| ≤ ε·n²` and every part's diameter.
pub fn verify_partition(g: &Graph, p: &EdgePartition) -> Result<Report, VerifyError> {
    let e0 = graph_indices(g, None, &p.e0)?;
    let parts = p
        .parts
        .iter()
        .enumerate()
        .map(|(i, s)| graph_indices(g, Some(i), s))
        .collect::<Result<Vec<_>, _>>()?;
    check_partition(g.edge_count(), &e0, &parts, |x| pair(&g.edges()[x]))?;
    check_budget(p.epsilon, e0.len(), g.vertex_count(), 2)?;
    let diameters: Vec<Dist> = p.parts.iter().map(graph_diameter_of).collect();
    check_diameters(&diameters, p.diam_cap)?;
    Ok(build_report(
        graph_digest(g),
        Outcome {
            algorithm: p.algorithm,
            epsilon: p.epsilon,
            diam: p.diam_cap,
            parts,
            e0,
            diameters,
            fallback_parts: p.fallback_parts,
            raw_parts: None,
            samples: None,
            seed: None,
        },
    ))
}

/// As [`verify_partition`] with `|e0| ≤ ε·n^k` and tight diameters. The
/// tight diameter is cross-checked against the set-algebra oracle on the
/// question "at most 3?".
pub fn verify_hyper_partition(h: &Hypergraph, p: &HyperPartition) -> Result<Report, VerifyError> {
    let e0 = hyper_indices(h, None, &p.e0)?;
    let parts = p
        .parts
        .iter()
        .enumerate()
        .map(|(i, s)| hyper_indices(h, Some(i), s))
        .collect::<Result<Vec<_>, _>>()?;
    check_partition(h.edge_count(), &e0, &parts, |x| h.edges()[x].vertices().to_vec())?;
    check_budget(p.epsilon, e0.len(), h.vertex_count(), h.uniformity() as u32)?;
    let mut diameters = Vec::with_capacity(p.parts.len());
    for (i, s) in p.parts.iter().enumerate() {
        let d = tight_diameter(h, s).map_err(|e| VerifyError::Mismatch(e.to_string()))?;
        let lists: Vec<Vec<usize>> = s.iter().map(|e| e.vertices().to_vec()).collect();
        if d.at_most(3) != hyper_diameter_at_most_3(&lists) {
            return Err(VerifyError::Mismatch(format!(
                "part {i}: tight diameter {d} disagrees with the set-algebra oracle"
            )));
        }
        diameters.push(d);
    }
    check_diameters(&diameters, p.diam_cap)?;
    Ok(build_report(
        InputDigest {
            n: h.vertex_count(),
            m: h.edge_count(),
            uniformity: h.uniformity(),
            family: None,
            seed: None,
        },
        Outcome {
            algorithm: p.algorithm,
            epsilon: p.epsilon,
            diam: p.diam_cap,
            parts,
            e0,
            diameters,
            fallback_parts: p.fallback_parts,
            raw_parts: None,
            samples: None,
            seed: None,
        },
    ))
}

/// Union of the parts is the whole edge set and every part's diameter is
/// within the cap. Overlaps are allowed.
pub fn verify_cover(g: &Graph, c: &EdgeCover) -> Result<Report, VerifyError> {
    let parts = c
        .parts
        .iter()
        .enumerate()
        .map(|(i, s)| graph_indices(g, Some(i), s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut covered = vec![false; g.edge_count()];
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(VerifyError::EmptyPart { part: i });
        }
        p.iter().for_each(|&x| covered[x] = true);
    }
    if let Some(x) = covered.iter().position(|&c| !c) {
        return Err(VerifyError::Uncovered {
            edge: pair(&g.edges()[x]),
        });
    }
    let diameters: Vec<Dist> = c.parts.iter().map(graph_diameter_of).collect();
    check_diameters(&diameters, c.diam_cap)?;
    let sampled = c.algorithm == Algorithm::SamplingDiam3;
    Ok(build_report(
        graph_digest(g),
        Outcome {
            algorithm: c.algorithm,
            epsilon: c.epsilon,
            diam: c.diam_cap,
            parts,
            e0: Vec::new(),
            diameters,
            fallback_parts: c.fallback_parts,
            raw_parts: Some(c.raw_parts),
            samples: sampled.then_some(c.samples),
            seed: c.seed,
        },
    ))
}

fn lookup<'a, T>(all: &'a [T], part: Option<usize>, idx: &[usize]) -> Result<Vec<&'a T>, VerifyError>
where
    T: std::fmt::Debug,
{
    let mut seen = HashSet::new();
    idx.iter()
        .map(|&x| {
            let item = all.get(x).ok_or(VerifyError::BadIndex { index: x, m: all.len() })?;
            if !seen.insert(x) {
                return Err(VerifyError::RepeatedEdge {
                    part: name(part),
                    edge: vec![x],
                });
            }
            Ok(item)
        })
        .collect()
}

fn graph_set(g: &Graph, part: Option<usize>, idx: &[usize]) -> Result<EdgeSet, VerifyError> {
    Ok(lookup(g.edges(), part, idx)?.into_iter().copied().collect())
}

fn hyper_set(h: &Hypergraph, part: Option<usize>, idx: &[usize]) -> Result<HyperEdgeSet, VerifyError> {
    Ok(lookup(h.edges(), part, idx)?
        .into_iter()
        .cloned()
        .collect::<Vec<HyperEdge>>()
        .into_iter()
        .collect())
}

fn check_input(r: &Report, n: usize, m: usize, k: usize) -> Result<(), VerifyError> {
    let i = &r.input;
    if (i.n, i.m, i.uniformity) != (n, m, k) {
        return Err(VerifyError::Mismatch(format!(
            "report describes n = {}, m = {}, k = {}; input has n = {n}, m = {m}, k = {k}",
            i.n, i.m, i.uniformity
        )));
    }
    Ok(())
}

/// Compares every recomputed field against the stored report.
fn compare(stored: &Report, fresh: Report) -> Result<Report, VerifyError> {
    let checks: [(&str, bool); 7] = [
        ("part_count", stored.part_count == fresh.part_count),
        ("e0_size", stored.e0_size == fresh.e0_size),
        ("diameters", stored.diameters == fresh.diameters),
        ("bound_kind", stored.bound_kind == fresh.bound_kind),
        ("bound", stored.bound == fresh.bound),
        ("within_bound", stored.within_bound == fresh.within_bound),
        ("diam", stored.diam == fresh.diam),
    ];
    if let Some((field, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(VerifyError::Mismatch(format!(
            "field {field} differs from the recomputed value"
        )));
    }
    Ok(Report {
        input: stored.input.clone(),
        elapsed_ms: stored.elapsed_ms,
        ..fresh
    })
}

/// Rebuilds the partition or cover a graph report describes and verifies
/// it against `g`.
pub fn verify_graph_report(g: &Graph, r: &Report) -> Result<Report, VerifyError> {
    check_input(r, g.vertex_count(), g.edge_count(), 2)?;
    let parts = r
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| graph_set(g, Some(i), p))
        .collect::<Result<Vec<_>, _>>()?;
    let fresh = if r.algorithm.is_cover() {
        if !r.e0.is_empty() {
            return Err(VerifyError::Mismatch("a cover has no e0".into()));
        }
        verify_cover(
            g,
            &EdgeCover {
                algorithm: r.algorithm,
                parts,
                epsilon: r.epsilon,
                diam_cap: r.diam,
                seed: r.seed,
                samples: r.samples.unwrap_or(0),
                raw_parts: r.raw_parts.unwrap_or(r.part_count),
                fallback_parts: r.fallback_parts,
            },
        )?
    } else {
        verify_partition(
            g,
            &EdgePartition {
                algorithm: r.algorithm,
                e0: graph_set(g, None, &r.e0)?,
                parts,
                epsilon: r.epsilon,
                diam_cap: r.diam,
                fallback_parts: r.fallback_parts,
            },
        )?
    };
    compare(r, fresh)
}

/// Hypergraph counterpart of [`verify_graph_report`].
pub fn verify_hyper_report(h: &Hypergraph, r: &Report) -> Result<Report, VerifyError> {
    check_input(r, h.vertex_count(), h.edge_count(), h.uniformity())?;
    let parts = r
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| hyper_set(h, Some(i), p))
        .collect::<Result<Vec<_>, _>>()?;
    let fresh = verify_hyper_partition(
        h,
        &EdgePartition {
            algorithm: r.algorithm,
            e0: hyper_set(h, None, &r.e0)?,
            parts,
            epsilon: r.epsilon,
            diam_cap: r.diam,
            fallback_parts: r.fallback_parts,
        },
    )?;
    compare(r, fresh)
}
