use serde::{Deserialize, Serialize};

use super::bounds::BoundKind;
use crate::algorithm::Algorithm;
use crate::epsilon::Epsilon;
use crate::graph::Dist;

pub const SCHEMA: &str = "ldd/1";

/// What the report was computed on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDigest {
    pub n: usize,
    pub m: usize,
    /// 2 for graphs, `k` for `k`-uniform hypergraphs.
    pub uniformity: usize,
    pub family: Option<String>,
    pub seed: Option<u64>,
}

/// Outcome of a decomposition or cover, with edges referenced by their
/// 0-based position in the input file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub input: InputDigest,
    pub algorithm: Algorithm,
    pub epsilon: Epsilon,
    pub diam: usize,
    pub parts: Vec<Vec<usize>>,
    pub e0: Vec<usize>,
    pub part_count: usize,
    pub e0_size: usize,
    /// Per-part diameter; `null` stands for infinite.
    pub diameters: Vec<Option<usize>>,
    pub bound_kind: Option<BoundKind>,
    pub bound: Option<f64>,
    pub within_bound: bool,
    pub fallback_parts: usize,
    pub raw_parts: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported report schema {0:?}, expected {SCHEMA:?}")]
    Schema(String),
}

impl Report {
    pub fn is_hypergraph(&self) -> bool {
        self.input.uniformity > 2
    }

    pub fn part_diameters(&self) -> Vec<Dist> {
        self.diameters.iter().map(|d| Dist::from(*d)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Report, ReportError> {
        let r: Report = serde_json::from_str(text)?;
        if r.schema != SCHEMA {
            return Err(ReportError::Schema(r.schema));
        }
        Ok(r)
    }
}
