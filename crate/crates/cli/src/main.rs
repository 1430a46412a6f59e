use std::io::Write;
use std::process::ExitCode;

use axial::{run, Cli, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let config = RunConfig::from(Cli::parse());
    let outcome = run(&config);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
