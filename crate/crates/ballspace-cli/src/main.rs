//! Scenario-driven verification runner.
//!
//! Exit codes: 0 when every ground-truth expectation is met, 1 on an
//! expectation mismatch, 2 on malformed input (unknown model or suite,
//! non-positive tolerance, unreadable scenario file).

mod report;
mod scenario;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{emit, Format};
use scenario::Scenario;

#[derive(Debug, Parser)]
#[command(name = "ballspace")]
#[command(about = "verification suites for length-space geometry and the space of compact balls")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a scenario file and emit a verification report.
    Run {
        /// Path to the scenario file (flat key-value TOML).
        scenario: PathBuf,

        /// Report format.
        #[arg(long, default_value = "text")]
        format: Format,

        /// Override the scenario's seed.
        #[arg(long)]
        seed: Option<u64>,

        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalogued models with their ground-truth flags.
    ListModels {
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run {
            scenario,
            format,
            seed,
            out,
        } => run(scenario, format, seed, out),
        Command::ListModels { format } => list_models(format),
    }
}

fn run(path: PathBuf, format: Format, seed: Option<u64>, out: Option<PathBuf>) -> ExitCode {
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let mut scenario = match Scenario::parse(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(seed) = seed {
        scenario.seed = seed;
    }
    let report = match suites::run_scenario(&scenario) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = emit(&report, format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn list_models(format: Format) -> ExitCode {
    let models = ballspace::spaces::catalog::list_models();
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&models).expect("catalog serializes")
            );
        }
        Format::Text => {
            println!(
                "{:<18} {:<34} {:<18} parameters",
                "model", "strongly geodesically complete", "unique midpoints"
            );
            for m in models {
                println!(
                    "{:<18} {:<34} {:<18} {}",
                    m.id,
                    format!("{:?}", m.ground_truth.strongly_geodesically_complete).to_lowercase(),
                    format!("{:?}", m.ground_truth.unique_midpoints).to_lowercase(),
                    m.parameters
                );
            }
        }
    }
    ExitCode::SUCCESS
}
