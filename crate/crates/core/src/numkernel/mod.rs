//! Numerical evaluation of the series families at roots of unity.
//!
//! Every routine returns a [`CVal`] whose `err` bounds the absolute error.
//! Sums are split into a directly summed head and an asymptotic tail (see
//! `expansion`), which handles conditionally convergent and log-weighted
//! tails without extrapolation.

mod cval;
mod engine;
mod expansion;
mod families;
mod kernel;
pub mod spec;
pub mod weight;

pub use cval::CVal;
pub use engine::{product_tail, Evaluated, TailFactor};
pub use families::*;
pub use kernel::{phi, phi_deriv, phi_deriv_with, phi_with, Phi_big, Phi_big_with};
pub use spec::{Comp, Family, ParseError, SeriesSpec};
pub use weight::{Cx, Factor, Weight, WeightTerm};

#[derive(Clone, Debug, PartialEq)]
pub struct EvalOptions {
    /// Target absolute error per evaluation.
    pub tolerance: f64,
    /// Largest head length tried before giving up.
    pub max_terms: u64,
    /// Smallest head length; raising it only costs time.
    pub min_terms: u64,
    /// Truncation order of the asymptotic tails in `1/n`.
    pub order: usize,
    /// Return the constant-term value of logarithmically divergent sums
    /// instead of failing.
    pub regularize: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tolerance: 1e-9,
            max_terms: 2_000_000,
            min_terms: 64,
            order: 26,
            regularize: false,
        }
    }
}

impl EvalOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        EvalOptions {
            tolerance,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumError {
    #[error("divergent series: {0}")]
    DivergentSeries(String),
    #[error("pole at {0}")]
    PoleAt(String),
    #[error("tolerance {requested:e} not met (best error estimate {achieved:e})")]
    ToleranceNotMet { requested: f64, achieved: f64 },
}
