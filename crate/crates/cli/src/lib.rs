//! Library backing the `rueppel-lab` binary: the expression grammar, the
//! output record model, configuration loading and the subcommand
//! implementations.

pub mod commands;
pub mod config;
pub mod expr;
pub mod output;

pub use commands::{CliError, Outcome, RingKind, Settings};
pub use output::{Format, OutputRecord, Payload};
