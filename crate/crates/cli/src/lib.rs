//! File formats, report rendering and the command-line frontend for
//! `axial-core`.

pub mod cli;
pub mod format;
pub mod report;

pub use cli::{run, Cli, CommandKind, Outcome, RunConfig};
pub use format::{parse_ideal, print_ideal, IdealFile, ParseError};
