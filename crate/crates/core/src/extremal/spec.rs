use serde::{Deserialize, Serialize};

use super::{
    diam3_lowerbound_recipe, gen_diam5_lower, gen_disjoint_cliques, gen_fk, gen_gnp, gen_hk, gen_hkt, gen_incidence,
    gen_kneser, gen_random_bipartite, gen_random_hypergraph, Diam5Partition, Generated, VertexClass,
};
use crate::error::GenError;
use crate::graph::{blow_up, Graph};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;

/// A generator family with its parameters, as recorded in metadata files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GenSpec {
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    Bipartite {
        n: usize,
        p: f64,
        seed: u64,
    },
    Cliques {
        n: usize,
        t: usize,
    },
    Kneser {
        n: usize,
        k: usize,
    },
    Incidence {
        n: usize,
        k: usize,
    },
    Hkt {
        n: usize,
        k: usize,
        t: usize,
    },
    Hk {
        k: usize,
    },
    Fk {
        k: usize,
    },
    /// `partition` lists a part index per `k`-subset; absent means greedy
    /// coloring classes.
    Diam5 {
        k: usize,
        d: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        partition: Option<Vec<usize>>,
    },
    /// Blow-up of a base graph supplied alongside the spec.
    Blowup {
        r: usize,
    },
    RecipeDiam3 {
        t: usize,
        r: usize,
        seed: u64,
    },
    Hypergraph {
        k: usize,
        n: usize,
        p: f64,
        seed: u64,
    },
}

/// Side metadata written next to a generated instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenMeta {
    pub spec: GenSpec,
    pub n: usize,
    pub m: usize,
    pub uniformity: usize,
    /// Base graph file of a blow-up.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default)]
    pub classes: Vec<VertexClass>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl GenMeta {
    pub fn describe(spec: &GenSpec, out: &GenOutput, source: Option<String>) -> GenMeta {
        let (n, m, uniformity, classes, labels) = match out {
            GenOutput::Graph(g) => (
                g.graph.vertex_count(),
                g.graph.edge_count(),
                2,
                g.classes.clone(),
                g.labels.clone(),
            ),
            GenOutput::Hypergraph(h) => (h.vertex_count(), h.edge_count(), h.uniformity(), vec![], vec![]),
        };
        GenMeta {
            spec: spec.clone(),
            n,
            m,
            uniformity,
            source,
            classes,
            labels,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenOutput {
    Graph(Generated),
    Hypergraph(Hypergraph),
}

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Gnp { .. } => "gnp",
            GenSpec::Bipartite { .. } => "bipartite",
            GenSpec::Cliques { .. } => "cliques",
            GenSpec::Kneser { .. } => "kneser",
            GenSpec::Incidence { .. } => "incidence",
            GenSpec::Hkt { .. } => "hkt",
            GenSpec::Hk { .. } => "hk",
            GenSpec::Fk { .. } => "fk",
            GenSpec::Diam5 { .. } => "diam5",
            GenSpec::Blowup { .. } => "blowup",
            GenSpec::RecipeDiam3 { .. } => "recipe-diam3",
            GenSpec::Hypergraph { .. } => "hypergraph",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            GenSpec::Gnp { seed, .. }
            | GenSpec::Bipartite { seed, .. }
            | GenSpec::RecipeDiam3 { seed, .. }
            | GenSpec::Hypergraph { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

/// Runs the generator named by `spec`. `base` is the graph to blow up and
/// is required for [`GenSpec::Blowup`] only.
pub fn generate(spec: &GenSpec, limits: &Limits, base: Option<&Graph>) -> Result<GenOutput, GenError> {
    let g = match spec {
        GenSpec::Gnp { n, p, seed } => Generated::plain(gen_gnp(*n, *p, *seed, limits)?),
        GenSpec::Bipartite { n, p, seed } => gen_random_bipartite(*n, *p, *seed, limits)?,
        GenSpec::Cliques { n, t } => gen_disjoint_cliques(*n, *t, limits)?,
        GenSpec::Kneser { n, k } => gen_kneser(*n, *k, limits)?,
        GenSpec::Incidence { n, k } => gen_incidence(*n, *k, limits)?,
        GenSpec::Hkt { n, k, t } => gen_hkt(*n, *k, *t, limits)?,
        GenSpec::Hk { k } => gen_hk(*k, limits)?,
        GenSpec::Fk { k } => gen_fk(*k, limits)?,
        GenSpec::Diam5 { k, d, partition } => {
            let part = match partition {
                Some(p) => Diam5Partition::Explicit(p.clone()),
                None => Diam5Partition::GreedyColoring,
            };
            gen_diam5_lower(*k, *d, &part, limits)?
        }
        GenSpec::Blowup { r } => {
            let base = base.ok_or_else(|| GenError::InvalidParameter("blowup needs a base graph".into()))?;
            super::check_cap(
                "edges",
                base.edge_count() as u128 * (*r as u128).pow(2),
                limits.max_edges,
            )?;
            let graph = blow_up(base, *r).map_err(|e| GenError::InvalidParameter(e.to_string()))?;
            Generated {
                graph,
                classes: (0..base.vertex_count())
                    .map(|v| VertexClass {
                        name: format!("block{v}"),
                        vertices: (v * r..v * r + r).collect(),
                    })
                    .collect(),
                labels: Vec::new(),
            }
        }
        GenSpec::RecipeDiam3 { t, r, seed } => diam3_lowerbound_recipe(*t, *r, *seed, limits)?,
        GenSpec::Hypergraph { k, n, p, seed } => {
            return Ok(GenOutput::Hypergraph(gen_random_hypergraph(*k, *n, *p, *seed, limits)?))
        }
    };
    Ok(GenOutput::Graph(g))
}
