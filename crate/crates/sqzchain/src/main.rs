//! Thin binary over the library's command layer.
//!
//! `sqzchain <command> --config <file> [--data <csv>] [--out <csv>] [--seed <u64>]`
//!
//! Exit codes: 0 success, 2 configuration or input parsing, 3 numeric or
//! nonphysical failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use sqzchain::cli::{parse_config, run_command, CommandName};
use sqzchain::Error;

#[derive(Parser)]
#[command(
    name = "sqzchain",
    about = "Waveguide-OPA squeezed-light chain: sweeps, fits, spectra, loss budgets",
    after_help = "Commands: sweep | fit | spectrum | budget | infer\n\
                  The summary goes to stdout; the CSV goes to --out, or follows the\n\
                  summary on stdout when --out is omitted."
)]
struct Cli {
    /// Command to run: sweep, fit, spectrum, budget or infer.
    command: String,
    /// Run configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Input data CSV (required by `fit`).
    #[arg(long)]
    data: Option<PathBuf>,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for synthetic noise (sweep with noise_sigma_db > 0).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let command: CommandName = cli.command.parse()?;
    let config_text = fs::read_to_string(&cli.config).map_err(|e| {
        Error::ConfigValue(format!("cannot read config {}: {e}", cli.config.display()))
    })?;
    let config = parse_config(&config_text)?;
    let data_text = match &cli.data {
        Some(path) => Some(fs::read_to_string(path).map_err(|e| {
            Error::DataFormat(format!("cannot read data {}: {e}", path.display()))
        })?),
        None => None,
    };

    let outcome = run_command(command, &config, data_text.as_deref(), cli.seed)?;
    print!("{}", outcome.summary);
    match &cli.out {
        Some(path) => fs::write(path, &outcome.csv).map_err(|e| {
            Error::DataFormat(format!("cannot write {}: {e}", path.display()))
        })?,
        None => print!("\n{}", outcome.csv),
    }
    Ok(())
}
