//! Explicit parity identities, built as symbolic [`Expr`] pairs and checked
//! numerically.
//!
//! Every builder returns [`Sides`]. Terms are merged symbolically before
//! evaluation, so divergent pieces whose coefficients cancel disappear. A
//! surviving divergent piece makes the instance a [`IdentityError::DivergentInstance`].

pub mod catalog;
pub mod cubic;
pub mod expr;
pub mod general;
pub mod known;
pub mod laurent;
pub mod linear;
pub mod mtv;
pub mod quadratic;
pub mod report;
pub mod residue;
pub mod triple;

use thiserror::Error;

use crate::numkernel::{CVal, NumError};
use crate::ratfrac::RatFracError;

pub use catalog::{catalog, run_instance, IdentityId, Instance, KernelSpec, PoleSpec, Scalar};
pub use cubic::cubic_ones_parity_sides;
pub use expr::{Atom, Evaluator, Expr, Term};
pub use general::{general_r1_sides, general_r2_sides, general_sides, KernelRoute};
pub use known::known_value;
pub use laurent::{laurent_coeff_Phi, laurent_coeff_phi, Around};
pub use linear::{linear_parity_corollary, linear_parity_sides};
pub use mtv::{mtv_relations_sides, MtvVariant};
pub use quadratic::quadratic_parity_sides;
pub use report::{IdentityReport, Outcome};
pub use residue::residue_sum_zero;
pub use triple::{triple_t_parity_sides, TripleRoute};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum IdentityError {
    #[error("divergent term with nonzero coefficient: {0}")]
    DivergentInstance(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("extra pole at {0} has order {1}; only simple poles are supported")]
    UnsupportedPoleOrder(String, usize),
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error(transparent)]
    Kernel(#[from] RatFracError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Both sides of an identity instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Sides {
    pub fn new(lhs: Expr, rhs: Expr) -> Sides {
        Sides { lhs, rhs }
    }

    /// Fails if either side keeps a divergent atom after merging.
    pub fn check(self) -> Result<Sides, IdentityError> {
        for e in [&self.lhs, &self.rhs] {
            if let Some(a) = e.divergent_atom() {
                return Err(IdentityError::DivergentInstance(a.pretty()));
            }
        }
        Ok(self)
    }

    pub fn evaluate(&self, ev: &Evaluator) -> Result<(CVal, CVal), IdentityError> {
        Ok((ev.expr(&self.lhs)?, ev.expr(&self.rhs)?))
    }

    /// `lhs - rhs` as one expression.
    pub fn difference(&self) -> Expr {
        self.lhs.clone() - self.rhs.clone()
    }
}

/// `(p, x) = (1, 1)` is the divergent corner shared by all hypotheses.
pub(crate) fn excluded(p: u32, x: crate::Root) -> bool {
    p == 1 && x.is_one()
}
