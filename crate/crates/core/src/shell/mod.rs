//! Configuration parsing, CSV/SVG output and the subcommands of the CLI.

mod commands;
mod config;
pub mod csv;
pub mod svg;

pub use commands::{cmd_arctic, cmd_exact, cmd_limits, cmd_sample, cmd_verify, tv_to_exact, Report};
pub use config::{parse_config, Model, ModelConfig, QSpec, Task};
