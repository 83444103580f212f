use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use geomlab_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::MissingCoefficients) => {
            Cli::command().error(clap::error::ErrorKind::MissingRequiredArgument, CliError::MissingCoefficients).exit()
        }
        Err(e) => {
            eprintln!("geomlab: error: {e}");
            ExitCode::from(1)
        }
    }
}
