//! `lambert`: evaluate Lambert series, scan asymptotic residuals, compare
//! engines and print constants.

mod bench;
mod config;
mod constants;
mod eval;
mod output;
mod scan;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use config::{CliError, GlobalArgs, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "lambert", version, about = "Lambert series engines and checks")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Σ aₙxⁿ/(1−xⁿ) at one point with one engine.
    Eval(eval::EvalArgs),
    /// Residuals, bounds and margins over a grid.
    Scan(scan::ScanArgs),
    /// Compare engines on terms used, wall time and achieved error.
    Bench(bench::BenchArgs),
    /// Mertens' H by two routes, and γ.
    Constants,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            return fail(&CliError::Usage(first.to_string()));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = RunConfig::from_args(&cli.global)?;
    let (records, outcome) = match &cli.command {
        Command::Eval(args) => eval::run(args, &cfg)?,
        Command::Scan(args) => (scan::run(args, &cfg)?, Ok(())),
        Command::Bench(args) => (bench::run(args, &cfg)?, Ok(())),
        Command::Constants => (constants::run(&cfg)?, Ok(())),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    output::emit(&records, cfg.format, &mut out).map_err(|e| CliError::Io(e.to_string()))?;
    out.flush().map_err(|e| CliError::Io(e.to_string()))?;
    outcome
}

fn fail(e: &CliError) -> ExitCode {
    let body: Value = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
    eprintln!("{body}");
    ExitCode::from(e.exit_code())
}
