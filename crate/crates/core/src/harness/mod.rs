//! Verification suites, output tables, figure data and the CLI.

pub mod checks;
pub mod cli;
pub mod figures;
pub mod output;

pub use checks::{run_checks, CheckEntry, Outcome, Suite, VerificationReport};
pub use figures::{figure_data, Figure};
pub use output::{emit, parse_csv, parse_json, Format, Meta, OutputTable, Route, Rows};
