//! Scenario runner: reads a TOML scenario, measures the geometry, assesses
//! the measurements against tolerances and writes reports.

pub mod cache;
pub mod commands;
pub mod config;
pub mod dump;
pub mod error;
pub mod measure;
pub mod report;

pub use commands::RunOptions;
pub use config::Scenario;
pub use error::{CliError, CliResult};
pub use report::{RunReport, Status};
