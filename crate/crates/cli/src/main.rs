//! `cutcomplex` command-line tool.
//!
//! Exit status: 0 when every requested check passed, 1 when a mathematical
//! check failed, 2 on usage or input errors.

mod config;
mod output;
mod run;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::config::{Cli, RunConfig};
use crate::run::Verdict;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Io(io::Error),
}

impl CliError {
    /// Errors from the library caused by the arguments or the input data.
    fn from_math(e: cutcomplex::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

fn execute(cli: Cli) -> Result<Verdict, CliError> {
    let config = RunConfig::from_cli(cli)?;
    if let Some(jobs) = config.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    }
    let mut out: Box<dyn Write> = match &config.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    let verdict = run::run(&config, &mut out)?;
    out.flush()?;
    Ok(verdict)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
