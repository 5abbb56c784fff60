//! Command-line front end for the sweep harness.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad configuration, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use favprop::harness::commands::{self, Outcome};

#[derive(Parser)]
#[command(
    name = "favprop",
    version,
    about = "Leakage sweeps for circular and cylindrical arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep N and write one CSV row per antenna count.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check |alpha| against its analytic bound for every N and interferer.
    VerifyBounds {
        #[arg(long)]
        config: PathBuf,
    },
    /// Compare the shrinking-separation sweep with its predicted limit.
    LimitCheck {
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Print the favorable-propagation verdict as JSON.
    FpCheck {
        #[arg(long)]
        config: PathBuf,
    },
    /// Smallest N with N d min sin(separation / 2) >= margin.
    MinN {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        margin: f64,
    },
}

fn run(command: Command) -> favprop::Result<Outcome> {
    match command {
        Command::Sweep { config, out, svg } => commands::run_sweep(&config, &out, svg.as_deref()),
        Command::VerifyBounds { config } => commands::run_verify_bounds(&config),
        Command::LimitCheck { d, n_max } => commands::run_limit_check(d, n_max),
        Command::FpCheck { config } => commands::run_fp_check(&config),
        Command::MinN { config, margin } => commands::run_min_n(&config, margin),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.report);
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
