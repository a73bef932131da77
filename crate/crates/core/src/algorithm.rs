use std::fmt;

use serde::{Deserialize, Serialize};

/// Which procedure produced a partition or cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// One star per vertex, diameter 2, nothing discarded.
    Stars,
    /// Low-degree deletion down to a single diameter-2 part.
    Prune,
    /// Greedy `G_3(u, v)` extraction.
    Diam3,
    /// Greedy radius-2 ball extraction after peeling.
    Diam4,
    /// Greedy `G(e)` extraction in a uniform hypergraph.
    HyperDiam3,
    /// Random pairs `G_3(v, w)` plus deterministic completion.
    SamplingDiam3,
    /// Scattered-set balls of radius 2 and `G_5` between centers.
    ScatteredDiam5,
    /// Scattered-set balls of radius 3.
    ScatteredDiam6,
    /// Anything assembled by hand.
    Manual,
}

impl Algorithm {
    pub fn is_cover(self) -> bool {
        matches!(
            self,
            Algorithm::SamplingDiam3 | Algorithm::ScatteredDiam5 | Algorithm::ScatteredDiam6
        )
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algorithm::Stars => "stars",
            Algorithm::Prune => "prune",
            Algorithm::Diam3 => "diam3",
            Algorithm::Diam4 => "diam4",
            Algorithm::HyperDiam3 => "hyper-diam3",
            Algorithm::SamplingDiam3 => "sampling-diam3",
            Algorithm::ScatteredDiam5 => "scattered-diam5",
            Algorithm::ScatteredDiam6 => "scattered-diam6",
            Algorithm::Manual => "manual",
        };
        f.write_str(s)
    }
}
