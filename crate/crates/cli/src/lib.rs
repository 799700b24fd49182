//! Command-line surface and JSON interchange format for `coalglab`.

pub mod commands;
pub mod doc;

pub use commands::{run_command, Outcome};
