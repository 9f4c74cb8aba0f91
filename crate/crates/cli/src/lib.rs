//! Verification front end: a registry of checks grouped into suites, reports
//! in JSON or markdown, live tables, and decomposition commands.

pub mod checks;
pub mod commands;
pub mod format;
pub mod render;
pub mod report;

pub use checks::{registry, run_verify, Suite, SuiteFilter};
pub use report::{CheckResult, Report, Status, Summary};
