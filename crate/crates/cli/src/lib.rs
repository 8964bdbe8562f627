//! Front end for the GCA engine: the algorithm catalog, run
//! configuration, renderers and the subcommands behind the `gca` binary.

pub mod catalog;
pub mod commands;
pub mod config;
pub mod error;
pub mod render;
pub mod verify;

pub use catalog::{build, catalog, lookup};
pub use commands::{cmd_arch, cmd_render, cmd_run, out_dir, ArchRequest, RunReport, OUT_DIR_ENV};
pub use config::{Format, ModeSpec, RunConfig, StopSpec, TraceToggles};
pub use error::CliError;
pub use verify::cmd_verify;
