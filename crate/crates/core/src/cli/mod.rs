//! Command-line front end: `eval`, `expand`, `verify` and `suite list`.
//!
//! Settings resolve as flag, then environment (`CYCLOT_TOLERANCE`,
//! `CYCLOT_WORKERS`), then the suite file, then built-in defaults.

pub mod config;
pub mod suite;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::identities::{catalog, IdentityError};
use crate::numkernel::{evaluate, EvalOptions, Family, NumError, SeriesSpec};
use crate::quasishuffle::stuffle_expand;

pub use config::{Format, IdentityGrid, SuiteConfig};
pub use suite::{bundled_suites, render, run_suite, SuiteResult, Summary, STANDARD_SUITE};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclotsum",
    version,
    about = "Cyclotomic Euler T-sums, t-values and parity checks"
)]
pub struct Cli {
    /// Target absolute error per evaluation.
    #[arg(long, global = true, env = "CYCLOT_TOLERANCE")]
    pub tolerance: Option<f64>,
    /// Largest head length tried by the summation engine.
    #[arg(long, global = true)]
    pub max_terms: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for `verify`.
    #[arg(long, global = true, env = "CYCLOT_WORKERS")]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a series, e.g. `T[2;3](0/1;0/1)`.
    Eval { spec: String },
    /// Stuffle-expand a T-sum into multiple t-values.
    Expand { spec: String },
    /// Run a suite file, or a bundled suite by name (default `standard`).
    Verify { config: Option<String> },
    /// Bundled suites and the identity catalog.
    Suite {
        #[command(subcommand)]
        action: SuiteAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum SuiteAction {
    List,
}

fn parse_spec(text: &str) -> Result<SeriesSpec, CliError> {
    text.parse::<SeriesSpec>()
        .map_err(|e| CliError::Parse(e.to_string()))
}

fn emit(cli: &Cli, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn eval_options(cli: &Cli) -> EvalOptions {
    let mut opts = EvalOptions::default();
    if let Some(t) = cli.tolerance {
        opts.tolerance = t;
    }
    if let Some(m) = cli.max_terms {
        opts.max_terms = m;
    }
    opts
}

/// Loads a suite from a path or a bundled name.
pub fn load_suite(name_or_path: &str) -> Result<SuiteConfig, CliError> {
    if let Some((_, text)) = bundled_suites()
        .into_iter()
        .find(|(n, _)| *n == name_or_path)
    {
        return SuiteConfig::from_toml(text);
    }
    let text = std::fs::read_to_string(name_or_path)
        .map_err(|e| CliError::Config(format!("{name_or_path}: {e}")))?;
    SuiteConfig::from_toml(&text)
}

/// Runs one parsed command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format.unwrap_or_default();
    match &cli.command {
        Command::Eval { spec } => {
            let s = parse_spec(spec)?;
            let e = evaluate(&s, &eval_options(cli))?;
            let v = e.value;
            let text = match format {
                Format::Json => format!(
                    "{}\n",
                    json!({"spec": s.to_string(), "pretty": s.pretty(), "re": v.re, "im": v.im,
                           "err": v.err, "terms": e.terms})
                ),
                Format::Csv => format!(
                    "spec,re,im,err,terms\n{},{},{},{},{}\n",
                    s, v.re, v.im, v.err, e.terms
                ),
                Format::Text => format!("{} = {v}  ({} terms)\n", s.pretty(), e.terms),
            };
            emit(cli, out, &text)?;
            Ok(0)
        }
        Command::Expand { spec } => {
            let s = parse_spec(spec)?;
            let (inner, (q, x)) = match (s.family, s.outer) {
                (Family::TSum, Some(o)) => (s.inner.clone(), o),
                _ => return Err(CliError::Parse(format!("{s} is not a T-sum"))),
            };
            let sum = stuffle_expand(&inner, q, x);
            let text = match format {
                Format::Json => {
                    let terms: Vec<_> = sum
                        .terms
                        .iter()
                        .map(|t| json!({"coeff": t.coeff, "spec": t.spec().to_string()}))
                        .collect();
                    format!(
                        "{}\n",
                        json!({"spec": s.to_string(), "formula": sum.to_string(), "terms": terms})
                    )
                }
                Format::Csv => {
                    let mut t = String::from("coeff,spec\n");
                    for r in &sum.terms {
                        t += &format!("{},{}\n", r.coeff, r.spec());
                    }
                    t
                }
                Format::Text => {
                    let mut t = format!("{} = {}\n", s.pretty(), sum);
                    for r in sum.records() {
                        t += &r;
                        t.push('\n');
                    }
                    t
                }
            };
            emit(cli, out, &text)?;
            Ok(0)
        }
        Command::Verify { config } => {
            let mut cfg = load_suite(config.as_deref().unwrap_or("standard"))?;
            if let Some(t) = cli.tolerance {
                cfg.tolerance = t;
            }
            if let Some(m) = cli.max_terms {
                cfg.truncation_cap = m;
            }
            if let Some(f) = cli.format {
                cfg.format = f;
            }
            if let Some(o) = &cli.output {
                cfg.output_path = Some(o.clone());
            }
            cfg.validate()?;
            let result = run_suite(&cfg, cli.workers)?;
            let text = render(&result, cfg.format)?;
            match &cfg.output_path {
                Some(path) => std::fs::write(path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            for (id, secs) in &result.wall_time {
                writeln!(err, "{id}: {secs:.2}s")?;
            }
            let m = result.summary;
            writeln!(err, "pass {} fail {} skipped {}", m.pass, m.fail, m.skipped)?;
            Ok(result.exit_code())
        }
        Command::Suite {
            action: SuiteAction::List,
        } => {
            let mut t = String::from("bundled suites:\n");
            for (name, text) in bundled_suites() {
                let n = SuiteConfig::from_toml(text)?.instances().len();
                t += &format!("  {name}\t{n} instances\n");
            }
            t += "identities:\n";
            for (id, location) in catalog() {
                t += &format!("  {id}\t{location}\n");
            }
            emit(cli, out, &t)?;
            Ok(0)
        }
    }
}
