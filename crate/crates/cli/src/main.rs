use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dps_cli::{
    run_scenario, CliError, ExceptionalParams, Format, GridParams, McParams, RepParams, Scenario, SpectrumParams, Verb,
};
use serde::Serialize;

/// Reducibility of degenerate principal series and the cosine transform on Grassmannians.
#[derive(Parser)]
#[command(name = "dps", version)]
struct Cli {
    /// Run a scenario file instead of a subcommand.
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,
    /// Seed for randomized verbs; overrides the scenario's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format; overrides the scenario's format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide reducibility of chi x 1.
    Decide(RepParams),
    /// Composition profile of chi x 1.
    Profile(RepParams),
    /// Infinitesimal character of chi x 1 over R or C.
    Infchar(RepParams),
    /// Monte-Carlo estimate of the cosine transform.
    Mc(McParams),
    /// Laurent data of the eigenvalues on lines at a rational point.
    Spectrum(SpectrumParams),
    /// Exceptional exponents in a range.
    Exceptional(ExceptionalParams),
    /// Batch consistency checks over a bounded grid.
    #[command(subcommand)]
    Crosscheck(GridParams),
}

fn to_value<T: Serialize>(p: &T) -> serde_json::Value {
    serde_json::to_value(p).expect("params serialize")
}

fn build_scenario(cli: &Cli) -> Result<Scenario, CliError> {
    let mut scenario = match (&cli.scenario, &cli.command) {
        (Some(_), Some(_)) => return Err(CliError::Validation("give either --scenario or a subcommand, not both".into())),
        (None, None) => return Err(CliError::Validation("missing subcommand or --scenario".into())),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
            Scenario::from_json(&text)?
        }
        (None, Some(cmd)) => {
            let (verb, params) = match cmd {
                Command::Decide(p) => (Verb::Decide, to_value(p)),
                Command::Profile(p) => (Verb::Profile, to_value(p)),
                Command::Infchar(p) => (Verb::Infchar, to_value(p)),
                Command::Mc(p) => (Verb::Mc, to_value(p)),
                Command::Spectrum(p) => (Verb::Spectrum, to_value(p)),
                Command::Exceptional(p) => (Verb::Exceptional, to_value(p)),
                Command::Crosscheck(p) => (Verb::Crosscheck, to_value(p)),
            };
            Scenario { verb, params, seed: None, output: Format::Json }
        }
    };
    if cli.seed.is_some() {
        scenario.seed = cli.seed;
    }
    if let Some(f) = cli.format {
        scenario.output = f;
    }
    Ok(scenario)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = build_scenario(&cli).and_then(|s| run_scenario(&s));
    let run = match result {
        Ok(run) => run,
        Err(e) => {
            let msg = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{msg}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = run.render();
    let written = match &cli.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("{}", serde_json::json!({ "error": "io", "message": e.to_string() }));
        return ExitCode::from(1);
    }
    ExitCode::from(run.exit_code())
}
