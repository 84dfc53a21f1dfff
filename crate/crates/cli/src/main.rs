//! `fracwave`: command-line front end to the fracwave toolkit.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 numerical failure
//! (including failed verification checks), 4 internal error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use commands::{
    DerivArgs, GreenArgs, MlArgs, RegionsArgs, SequentialArgs, SimulateArgs, VerifyArgs, WrightArgs,
};

#[derive(Debug, Parser)]
#[command(name = "fracwave", version, about = "Fractional calculus toolkit for fluid perturbations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mittag-Leffler function E_{eta,gamma}(y)
    Ml(MlArgs),
    /// Wright function W_{kappa,eta}(y)
    Wright(WrightArgs),
    /// Caputo derivative or RL integral of a power term, exact and on a grid
    Deriv(DerivArgs),
    /// Region raster over (0,2)^2
    Regions(RegionsArgs),
    /// Fundamental solution of the order-gamma diffusion equation
    Green(GreenArgs),
    /// Solve the sequential Cauchy problem on a periodic grid
    Sequential(SequentialArgs),
    /// Time-step the coupled fractional continuity/momentum system
    Simulate(SimulateArgs),
    /// Run a verification suite and print a JSON report
    Verify(VerifyArgs),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fracwave_core::Error),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("{0} verification checks failed")]
    ChecksFailed(usize),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use fracwave_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::ChecksFailed(_) => 3,
            CliError::Core(e) if e.is_numerical() => 3,
            // mismatches cannot come from user input: the CLI builds every grid
            CliError::Core(E::GridMismatch(_) | E::MeshMismatch(_)) => 4,
            CliError::Core(_) => 2,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Ml(a) => commands::ml(a),
        Command::Wright(a) => commands::wright(a),
        Command::Deriv(a) => commands::deriv(a),
        Command::Regions(a) => commands::regions(a),
        Command::Green(a) => commands::green(a),
        Command::Sequential(a) => commands::sequential(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
