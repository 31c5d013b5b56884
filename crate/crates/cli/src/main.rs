//! `oknap`: generate instances, build universal policies, verify their
//! robustness and time the constructions.
//!
//! Exit codes: 0 success (or robust), 1 I/O and other failures, 2 invalid
//! input or usage, 3 not robust, 4 resource budget exceeded.

mod bench;
mod generate;
mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use oknap_core::{io, Error, EvalConfig, Instance};

/// Environment variable overriding the evaluator's memory budget (bytes).
pub const MEMORY_BUDGET_ENV: &str = "OKNAP_MEMORY_BUDGET";

#[derive(Parser)]
#[command(name = "oknap", version, about = "Universal policies for the knapsack problem with unknown capacity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance (or SubsetSum instance) as JSON.
    Generate(generate::GenerateArgs),
    /// Build a universal policy for an instance.
    Policy(PolicyArgs),
    /// Compute the robustness factor of a policy, optionally against a bound.
    Verify(verify::VerifyArgs),
    /// Time naive and fast policy construction on random instances.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Universal,
    UniversalUd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Impl {
    Naive,
    Fast,
}

#[derive(clap::Args)]
struct PolicyArgs {
    /// Instance JSON file.
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long, value_enum, default_value = "universal")]
    algorithm: Algorithm,
    #[arg(long = "impl", value_enum, default_value = "fast")]
    implementation: Impl,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Outcome that is not an error but still maps to a non-zero exit code.
pub enum Outcome {
    Done,
    NotRobust,
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(io::parse_instance(&text)?)
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn eval_config() -> Result<EvalConfig> {
    let mut config = EvalConfig::default();
    if let Ok(raw) = std::env::var(MEMORY_BUDGET_ENV) {
        config.memory_budget = raw
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("{MEMORY_BUDGET_ENV} must be a byte count, got {raw:?}")))?;
    }
    Ok(config)
}

fn build_policy(args: &PolicyArgs) -> Result<Outcome> {
    let instance = read_instance(&args.input)?;
    let policy = match (args.algorithm, args.implementation) {
        (Algorithm::Universal, Impl::Naive) => oknap_core::universal_naive(&instance),
        (Algorithm::Universal, Impl::Fast) => oknap_core::universal_fast(&instance),
        (Algorithm::UniversalUd, Impl::Naive) => oknap_core::universal_ud_naive(&instance)?,
        (Algorithm::UniversalUd, Impl::Fast) => oknap_core::universal_ud_fast(&instance)?,
    };
    write_output(args.output.as_deref(), &io::policy_to_json(&policy))?;
    Ok(Outcome::Done)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Budget { .. }) => 4,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(args) => generate::run(args),
        Command::Policy(args) => build_policy(args),
        Command::Verify(args) => verify::run(args),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::NotRobust) => ExitCode::from(3),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
