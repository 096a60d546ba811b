//! `satmut`: scans, tower construction, certification and cache management.
//!
//! Exit codes: 0 when the checked claim holds, 1 on a mathematical
//! mismatch, 2 on an operational error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Symbolic,
    Pointwise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CacheAction {
    List,
    Clear,
    Verify,
}

#[derive(Debug, Parser)]
#[command(name = "satmut", version, about = "Exact sl(3)_q and Schur-function checks for satellites of mutant knots")]
pub struct Cli {
    /// Directory for cached tower stages.
    #[arg(long, global = true, default_value = ".satmut-cache")]
    pub cache_dir: PathBuf,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Repeated summands in symmetric and exterior squares of Schur functions.
    Scan {
        #[arg(long, default_value_t = 6)]
        max_size: u32,
    },
    /// The same scan over hook partitions.
    Hooks {
        #[arg(long, default_value_t = 10)]
        max_size: u32,
    },
    /// Builds and caches the module tower.
    Build {
        #[arg(long, value_enum, default_value_t = StrategyArg::Pointwise)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Computes the mutant trace difference and compares it with the target.
    Certify {
        #[arg(long, value_enum, default_value_t = StrategyArg::Pointwise)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Decomposes V^r ⊗ (V*)^t over sl(3) and checks its squares.
    Mixed {
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        t: u32,
    },
    /// Lists, clears or verifies the stage cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.body);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
