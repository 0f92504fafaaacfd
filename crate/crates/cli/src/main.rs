use std::process::ExitCode;

use clap::Parser;
use tripleforge_cli::app::{run, Cli};

fn main() -> ExitCode {
    run(Cli::parse())
}
