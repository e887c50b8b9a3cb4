//! Command-line front end and report formats for `hv-core`.
//!
//! The binary `hv` is a thin wrapper around [`run::run_args`]; everything it
//! prints is produced here so it can be tested without spawning a process.

pub mod cli;
pub mod report;
pub mod run;
pub mod sampling;
pub mod suites;
pub mod table;

pub use cli::{parse_args, Command, Format, RunConfig};
pub use run::{run, run_args, Outcome};
