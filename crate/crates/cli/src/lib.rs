//! Command-line harness over `tableau_corners`: generation, counting,
//! verification suites, bijection checks and polynomial reports.

pub mod app;
pub mod bounds;
pub mod error;
pub mod render;
pub mod report;
pub mod suites;

pub use app::run;
pub use error::{CliError, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use report::{Check, Status, VerificationReport, REPORT_SCHEMA};
