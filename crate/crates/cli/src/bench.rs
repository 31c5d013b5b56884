use std::path::PathBuf;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, ValueEnum};
use oknap_core::{gen_random, Instance};

use crate::{write_output, Algorithm, Outcome};

/// Largest instance on which the quadratic reference constructions run.
pub const NAIVE_CAP: usize = 10_000;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Universal,
    UniversalUd,
    Both,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(short, long, value_enum, default_value = "both")]
    algorithm: Which,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// CSV output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn time(f: impl FnOnce() -> usize) -> (f64, usize) {
    let start = Instant::now();
    let len = f();
    (start.elapsed().as_secs_f64(), len)
}

fn measure(algorithm: Algorithm, naive: bool, instance: &Instance) -> f64 {
    let (secs, len) = match (algorithm, naive) {
        (Algorithm::Universal, true) => time(|| oknap_core::universal_naive(instance).len()),
        (Algorithm::Universal, false) => time(|| oknap_core::universal_fast(instance).len()),
        (Algorithm::UniversalUd, true) => time(|| oknap_core::universal_ud_naive(instance).map_or(0, |p| p.len())),
        (Algorithm::UniversalUd, false) => time(|| oknap_core::universal_ud_fast(instance).map_or(0, |p| p.len())),
    };
    assert_eq!(len, instance.len(), "unit-density instances are generated for universal-ud");
    secs
}

pub fn run(args: &BenchArgs) -> Result<Outcome> {
    let algorithms: &[Algorithm] = match args.algorithm {
        Which::Universal => &[Algorithm::Universal],
        Which::UniversalUd => &[Algorithm::UniversalUd],
        Which::Both => &[Algorithm::Universal, Algorithm::UniversalUd],
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["algorithm", "impl", "n", "seconds"])?;
    for &algorithm in algorithms {
        let unit = algorithm == Algorithm::UniversalUd;
        for &n in &args.sizes {
            let instance = gen_random(n, args.seed, 1_000_000, 1_000_000, unit)?;
            let name = match algorithm {
                Algorithm::Universal => "universal",
                Algorithm::UniversalUd => "universal-ud",
            };
            for naive in [true, false] {
                if naive && n > NAIVE_CAP {
                    continue;
                }
                let secs = measure(algorithm, naive, &instance);
                let kind = if naive { "naive" } else { "fast" };
                w.write_record([name, kind, &n.to_string(), &format!("{secs:.6}")])?;
            }
        }
    }
    let text = String::from_utf8(w.into_inner()?)?;
    write_output(args.output.as_deref(), &text)?;
    Ok(Outcome::Done)
}
