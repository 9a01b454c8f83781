//! Runs a suite configuration and renders the result.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::identities::{run_instance, Evaluator, IdentityReport, Outcome};
use crate::numkernel::EvalOptions;

use super::config::{Format, SuiteConfig};
use super::CliError;

/// The suite configuration shipped with the crate.
pub const STANDARD_SUITE: &str = include_str!("../../suites/standard.toml");

/// Bundled suites by name.
pub fn bundled_suites() -> Vec<(&'static str, &'static str)> {
    vec![("standard", STANDARD_SUITE)]
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Reports in grid order plus counts. Wall times are kept apart from the
/// serialized data so that report files are byte-stable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub reports: Vec<IdentityReport>,
    pub summary: Summary,
    #[serde(skip)]
    pub wall_time: BTreeMap<String, f64>,
}

impl SuiteResult {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail != 0)
    }
}

/// Evaluates every instance of `cfg` on `workers` threads (`None` lets
/// rayon decide). Results are assembled in configuration order.
pub fn run_suite(cfg: &SuiteConfig, workers: Option<usize>) -> Result<SuiteResult, CliError> {
    let instances = cfg.instances();
    let opts = EvalOptions {
        tolerance: cfg.tolerance,
        max_terms: cfg.truncation_cap,
        ..EvalOptions::default()
    };
    let ev = Evaluator::new(opts);
    let slack = cfg.tolerance;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Config(format!("worker pool: {e}")))?;
    let timed: Vec<(IdentityReport, f64)> = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| {
                let t = Instant::now();
                let r = run_instance(inst, &ev, slack);
                (r, t.elapsed().as_secs_f64())
            })
            .collect()
    });
    let mut summary = Summary::default();
    let mut wall_time = BTreeMap::new();
    let mut reports = Vec::with_capacity(timed.len());
    for (r, secs) in timed {
        match r.outcome() {
            Outcome::Pass => summary.pass += 1,
            Outcome::Fail => summary.fail += 1,
            Outcome::Skipped => summary.skipped += 1,
        }
        *wall_time.entry(r.identity_id.clone()).or_insert(0.0) += secs;
        reports.push(r);
    }
    Ok(SuiteResult {
        reports,
        summary,
        wall_time,
    })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    identity_id: &'a str,
    params: String,
    lhs_re: Option<f64>,
    lhs_im: Option<f64>,
    lhs_err: Option<f64>,
    rhs_re: Option<f64>,
    rhs_im: Option<f64>,
    rhs_err: Option<f64>,
    residual: Option<f64>,
    budget: Option<f64>,
    pass: bool,
    skipped_reason: &'a str,
    error: &'a str,
}

pub fn render(result: &SuiteResult, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(result)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &result.reports {
                w.serialize(CsvRow {
                    identity_id: &r.identity_id,
                    params: r.params_text(),
                    lhs_re: r.lhs.map(|v| v.re),
                    lhs_im: r.lhs.map(|v| v.im),
                    lhs_err: r.lhs.map(|v| v.err),
                    rhs_re: r.rhs.map(|v| v.re),
                    rhs_im: r.rhs.map(|v| v.im),
                    rhs_err: r.rhs.map(|v| v.err),
                    residual: r.residual,
                    budget: r.budget,
                    pass: r.pass,
                    skipped_reason: r.skipped_reason.as_deref().unwrap_or(""),
                    error: r.error.as_deref().unwrap_or(""),
                })?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8_lossy(&bytes).into_owned())
        }
        Format::Text => {
            let mut s = String::new();
            for r in &result.reports {
                let status = match r.outcome() {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::Skipped => "skip",
                };
                let detail = match (r.residual, r.budget, &r.skipped_reason, &r.error) {
                    (Some(res), Some(b), _, _) => format!("residual {res:.3e} budget {b:.3e}"),
                    (_, _, Some(why), _) => why.clone(),
                    (_, _, _, Some(e)) => e.clone(),
                    _ => String::new(),
                };
                s += &format!("{status} {} {} {detail}\n", r.identity_id, r.params_text());
            }
            let m = result.summary;
            s += &format!("pass {} fail {} skipped {}\n", m.pass, m.fail, m.skipped);
            Ok(s)
        }
    }
}
