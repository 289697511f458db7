mod args;
mod commands;
mod config;
mod output;

use std::process::ExitCode;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::Parser;
use credsave_core::ModelError;

use args::{Cli, Command};
use config::{ConfigError, FileConfig};

const EXIT_IO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

fn run(cli: Cli) -> Result<()> {
    let file = FileConfig::load(cli.config.as_deref())?;
    match &cli.command {
        Command::Simulate(a) => commands::simulate(a, &file),
        Command::Figures(a) => commands::figures(a, &file),
        Command::Steady(a) => commands::steady(a, &file),
        Command::Panel(a) => commands::panel(a, &file),
        Command::Sweep(a) => commands::sweep(a, &file),
    }
}

/// Exit code and diagnostic prefix for a failed run.
fn classify(err: &anyhow::Error) -> (u8, &'static str) {
    if err.downcast_ref::<ConfigError>().is_some() {
        return (EXIT_USAGE, "config");
    }
    match err.downcast_ref::<ModelError>() {
        Some(e) if e.is_numerical() => (EXIT_NUMERIC, "numeric"),
        Some(ModelError::Panel(_)) => (EXIT_USAGE, "config"),
        Some(_) => (EXIT_USAGE, "usage"),
        None => (EXIT_IO, "io"),
    }
}

fn one_line(msg: &str) -> String {
    msg.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or_default();
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("error[usage]: {}", one_line(first));
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let (code, kind) = classify(&err);
            eprintln!("error[{kind}]: {}", one_line(&format!("{err:#}")));
            ExitCode::from(code)
        }
    }
}
