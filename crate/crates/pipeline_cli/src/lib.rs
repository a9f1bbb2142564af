//! Case drivers and golden-table checks for the order-3 orbifold uniqueness chains,
//! with a report type that renders as a table or as deterministic JSON.

pub mod case;
pub mod golden;
pub mod lattice;
pub mod report;
pub mod tables;

use thiserror::Error;

pub use case::{dimension_report, candidates_report, run_case, twist_bound, verify_all, CaseFile, Expectations};
pub use lattice::{lattice_fixed_type, lattice_report, parse_isometry, LatticeName};
pub use report::{Report, Step, Verdict};
pub use tables::{verify_tables, TableFamily};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read case file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed case file: {0}")]
    Json(#[from] serde_json::Error),
}

/// Process exit status for a finished report.
pub fn exit_code(r: &Report) -> i32 {
    if r.passed() {
        0
    } else {
        1
    }
}
