use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use oknap_core::{io, robustness_factor_with, Rational, RobustnessReport};

use crate::{eval_config, read_instance, Outcome};

#[derive(Args)]
pub struct VerifyArgs {
    /// Instance JSON file.
    #[arg(short, long)]
    instance: PathBuf,
    /// Policy JSON file; a gadget file works as well.
    #[arg(short, long)]
    policy: PathBuf,
    /// Check α-robustness for this bound, e.g. `3/2`.
    #[arg(long, conflicts_with = "phi")]
    alpha: Option<Rational>,
    /// Check robustness against the golden ratio.
    #[arg(long)]
    phi: bool,
    /// Write the per-capacity table as CSV to this file (`-` for standard
    /// output).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Print the full report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn write_csv(report: &RobustnessReport, path: &PathBuf) -> Result<()> {
    let rows = report.per_capacity.as_ref().expect("table requested");
    let sink: Box<dyn std::io::Write> = if path.as_os_str() == "-" {
        Box::new(std::io::stdout())
    } else {
        Box::new(fs::File::create(path).with_context(|| format!("writing {}", path.display()))?)
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["capacity", "opt_value", "policy_value", "ratio"])?;
    for row in rows {
        w.write_record([
            row.capacity.to_string(),
            row.opt_value.to_string(),
            row.policy_value.to_string(),
            row.ratio.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn join(ids: &[oknap_core::ItemId]) -> String {
    ids.iter().map(|i| i.as_str()).collect::<Vec<_>>().join(",")
}

pub fn run(args: &VerifyArgs) -> Result<Outcome> {
    let instance = read_instance(&args.instance)?;
    let text = fs::read_to_string(&args.policy).with_context(|| format!("reading {}", args.policy.display()))?;
    let policy = io::parse_policy(&text)?;
    let mut config = eval_config()?;
    config.with_table = args.report.is_some();
    if let Some(alpha) = &args.alpha {
        if alpha < &Rational::one() {
            return Err(oknap_core::Error::Precondition(format!("alpha must be at least 1, got {alpha}")).into());
        }
    }
    let report = robustness_factor_with(&instance, &policy, &config)?;

    let robust = if let Some(alpha) = &args.alpha {
        Some(report.factor.is_at_most(alpha))
    } else if args.phi {
        Some(report.factor.is_at_most_phi())
    } else {
        None
    };

    if args.json {
        let mut doc = serde_json::to_value(&report)?;
        doc.as_object_mut()
            .expect("report is an object")
            .remove("per_capacity");
        if let Some(r) = robust {
            doc["robust"] = r.into();
        }
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("factor: {} (~{})", report.factor, report.factor.to_decimal_string(12));
        println!("witness capacity: {}", report.witness_capacity);
        println!("witness optimum: {{{}}} value {}", join(&report.witness_opt), report.opt_value);
        println!("policy value: {}", report.policy_value);
        match robust {
            Some(true) => println!("ROBUST"),
            Some(false) => println!(
                "NOT ROBUST: counterexample at capacity {} with optimal set {{{}}}",
                report.witness_capacity,
                join(&report.witness_opt)
            ),
            None => {}
        }
    }
    if let Some(path) = &args.report {
        write_csv(&report, path)?;
    }
    Ok(match robust {
        Some(false) => Outcome::NotRobust,
        _ => Outcome::Done,
    })
}
