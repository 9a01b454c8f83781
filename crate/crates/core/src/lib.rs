//! Cyclotomic Euler T-sums, multiple t-values and their parity identities.
//!
//! * [`cyclo`]: exact roots of unity.
//! * [`numkernel`]: evaluation of every series family with error bounds.
//! * [`quasishuffle`]: stuffle expansion of T-sums into multiple t-values.
//! * [`ratfrac`]: rational kernels in partial-fraction form.
//! * [`identities`]: both sides of the parity theorems and related identities.
//! * [`cli`]: the command-line front end and suite runner.

pub mod cli;
pub mod cyclo;
pub mod identities;
pub mod numkernel;
pub mod quasishuffle;
pub mod ratfrac;

pub use cyclo::Root;
pub use numkernel::{CVal, Comp, EvalOptions, NumError, SeriesSpec};
