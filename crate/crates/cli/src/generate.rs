use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Subcommand};
use oknap_core::{io, Rational, SubsetSumInstance};

use crate::{write_output, Outcome};

#[derive(Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    kind: Kind,
    /// Output file; standard output when absent.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

/// A SubsetSum source given inline or as a JSON file.
#[derive(Args)]
struct SubsetSumSource {
    /// Comma-separated positive weights.
    #[arg(long, value_delimiter = ',', required_unless_present = "subsetsum")]
    weights: Vec<u64>,
    #[arg(long, required_unless_present = "subsetsum")]
    target: Option<u64>,
    /// SubsetSum JSON file (`{"weights": [...], "target": T}`).
    #[arg(long, conflicts_with_all = ["weights", "target"])]
    subsetsum: Option<PathBuf>,
}

impl SubsetSumSource {
    fn load(&self) -> Result<SubsetSumInstance> {
        match &self.subsetsum {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(io::parse_subsetsum(&text)?)
            }
            None => Ok(SubsetSumInstance::new(
                self.weights.clone(),
                self.target.expect("required by clap"),
            )?),
        }
    }
}

#[derive(Subcommand)]
enum Kind {
    /// Lower-bound family for general instances.
    Fibonacci {
        #[arg(long)]
        n: usize,
    },
    /// Five-item unit-density lower-bound instance.
    Golden {
        #[arg(long, default_value = "1/100")]
        epsilon: Rational,
        /// Fibonacci index k of the convergent F(k+1)/F(k) used for φ.
        #[arg(long, default_value_t = 16)]
        phi_precision: usize,
    },
    /// Reduction gadget for general instances.
    HardnessGeneral {
        #[command(flatten)]
        source: SubsetSumSource,
        #[arg(long)]
        alpha: Rational,
    },
    /// Reduction gadget for unit-density instances.
    HardnessUnit {
        #[command(flatten)]
        source: SubsetSumSource,
    },
    /// Seeded random instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        max_value: u64,
        #[arg(long, default_value_t = 30)]
        max_size: u64,
        #[arg(long)]
        unit_density: bool,
    },
    /// Rewrite a SubsetSum instance into the form the reductions expect.
    NormalizeSubsetsum {
        #[command(flatten)]
        source: SubsetSumSource,
    },
}

pub fn run(args: &GenerateArgs) -> Result<Outcome> {
    let text = match &args.kind {
        Kind::Fibonacci { n } => io::instance_to_json(&oknap_core::gen_fibonacci(*n)?),
        Kind::Golden { epsilon, phi_precision } => {
            let g = oknap_core::gen_golden(epsilon, *phi_precision)?;
            eprintln!(
                "phi approximated by {} with error below {}",
                g.phi_hat, g.phi_error_bound
            );
            io::instance_to_json(&g.instance)
        }
        Kind::HardnessGeneral { source, alpha } => {
            io::gadget_to_json(&oknap_core::gen_hardness_general(&source.load()?, alpha)?)
        }
        Kind::HardnessUnit { source } => {
            io::gadget_to_json(&oknap_core::gen_hardness_unit(&source.load()?)?)
        }
        Kind::Random {
            n,
            seed,
            max_value,
            max_size,
            unit_density,
        } => io::instance_to_json(&oknap_core::gen_random(*n, *seed, *max_value, *max_size, *unit_density)?),
        Kind::NormalizeSubsetsum { source } => {
            let s = source.load()?;
            io::subsetsum_to_json(&oknap_core::normalize_subsetsum(&s.weights, s.target)?)
        }
    };
    write_output(args.output.as_deref(), &text)?;
    Ok(Outcome::Done)
}
