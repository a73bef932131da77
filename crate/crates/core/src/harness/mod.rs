//! Verification, oracles, bounds and reports.

pub mod bounds;
pub mod oracle;
pub mod report;
pub mod verify;

pub use bounds::{bound_formula, BoundKind};
pub use oracle::{edge_list_diameter, hyper_diameter_at_most_3, max_diam_subgraph_edges};
pub use report::{InputDigest, Report, ReportError, SCHEMA};
pub use verify::{verify_cover, verify_graph_report, verify_hyper_partition, verify_hyper_report, verify_partition};
