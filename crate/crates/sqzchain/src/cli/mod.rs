//! Config-driven command front end.
//!
//! Everything the `sqzchain` binary does lives here so it stays testable
//! as a library: [`parse_config`] turns a key-value document into a typed
//! [`RunConfig`], [`run_command`] executes one of the five commands
//! against it, and [`Table`] / [`write_csv`] render deterministic CSV.

mod command;
mod config;
mod table;

pub use command::{run_command, CommandName, CommandOutcome};
pub use config::{parse_config, RunConfig};
pub use table::{format_significant, write_csv, Cell, Table};
