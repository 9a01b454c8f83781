//! Head/tail evaluation of nested sums and Euler-type product sums.
//!
//! Both plans are split at a cut `M`: the head is summed directly with
//! running accumulators and the tail comes from [`Expansion`] arithmetic.
//! The cut is doubled until two consecutive values agree to the tolerance.

use num_complex::Complex64 as C;

use super::expansion::{Expansion, TailMode};
use super::weight::{Compiled, Weight};
use super::{CVal, EvalOptions, NumError};
use crate::cyclo::common_level;

/// Outcome of an evaluation: the value and the final cut used.
#[derive(Clone, Copy, Debug)]
pub struct Evaluated {
    pub value: CVal,
    pub terms: u64,
}

pub(crate) enum Plan<'a> {
    /// `Σ_{0<n₁<…<n_r} Π w_j(n_j)`.
    Nested(&'a [Weight]),
    /// `Σ_n Π_j (Σ_{m≤n} f_j(m)) · g(n)`.
    Euler {
        factors: &'a [Weight],
        outer: &'a Weight,
    },
}

impl Plan<'_> {
    fn weights(&self) -> Vec<&Weight> {
        match self {
            Plan::Nested(ws) => ws.iter().collect(),
            Plan::Euler { factors, outer } => {
                factors.iter().chain(std::iter::once(*outer)).collect()
            }
        }
    }
}

struct Snapshot {
    value: C,
    scale: f64,
}

enum Prepared {
    Nested {
        weights: Vec<Compiled>,
        tails: Vec<Expansion>,
    },
    Euler {
        factors: Vec<Compiled>,
        tails: Vec<Expansion>,
        outer: Compiled,
        outer_exp: Expansion,
        mode: TailMode,
    },
}

fn pole(label: &str) -> NumError {
    NumError::PoleAt(format!("a summand of {label} has a vanishing denominator"))
}

impl Prepared {
    fn new(
        plan: &Plan,
        period: usize,
        opts: &EvalOptions,
        label: &str,
    ) -> Result<Prepared, NumError> {
        let order = opts.order;
        let mode = if opts.regularize {
            TailMode::Regularized
        } else {
            TailMode::Strict
        };
        let div = |_| NumError::DivergentSeries(label.to_string());
        match plan {
            Plan::Nested(ws) => {
                let r = ws.len();
                let mut tails = vec![Expansion::constant(period, order, C::new(1.0, 0.0)); r + 1];
                for j in (0..r).rev() {
                    let step = Expansion::from_weight(&ws[j], period, order).mul(&tails[j + 1]);
                    let m = if j == r - 1 { mode } else { TailMode::Strict };
                    tails[j] = step.tail_sum(m).map_err(div)?;
                }
                let weights = ws.iter().map(|w| w.compile(period as u64)).collect();
                Ok(Prepared::Nested { weights, tails })
            }
            Plan::Euler { factors, outer } => {
                let tails = factors
                    .iter()
                    .map(|f| {
                        Expansion::from_weight(f, period, order)
                            .tail_sum(TailMode::Regularized)
                            .map_err(div)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Prepared::Euler {
                    factors: factors.iter().map(|w| w.compile(period as u64)).collect(),
                    tails,
                    outer: outer.compile(period as u64),
                    outer_exp: Expansion::from_weight(outer, period, order),
                    mode,
                })
            }
        }
    }

    fn at(&self, m: u64, period: usize, order: usize, label: &str) -> Result<Snapshot, NumError> {
        match self {
            Prepared::Nested { weights, tails } => {
                let r = weights.len();
                let mut heads = vec![C::new(0.0, 0.0); r + 1];
                heads[0] = C::new(1.0, 0.0);
                for n in 1..=m {
                    for j in (1..=r.min(n as usize)).rev() {
                        let w = weights[j - 1].at(n).ok_or_else(|| pole(label))?;
                        let h = heads[j - 1];
                        heads[j] += h * w;
                    }
                }
                let mut value = C::new(0.0, 0.0);
                let mut scale = 0.0;
                for (h, t) in heads.iter().zip(tails) {
                    let v = h * t.eval(m);
                    value += v;
                    scale += v.norm() + h.norm();
                }
                Ok(Snapshot { value, scale })
            }
            Prepared::Euler {
                factors,
                tails,
                outer,
                outer_exp,
                mode,
            } => {
                let mut partial = vec![C::new(0.0, 0.0); factors.len()];
                let mut head = C::new(0.0, 0.0);
                let mut scale: f64 = 0.0;
                for n in 1..=m {
                    let mut prod = outer.at(n).ok_or_else(|| pole(label))?;
                    for (p, f) in partial.iter_mut().zip(factors) {
                        *p += f.at(n).ok_or_else(|| pole(label))?;
                        prod *= *p;
                    }
                    head += prod;
                    scale = scale.max(head.norm());
                }
                let mut summand = outer_exp.clone();
                for (p, t) in partial.iter().zip(tails) {
                    let c = p + t.eval(m);
                    summand = summand.mul(&Expansion::constant(period, order, c).sub(t));
                }
                let tail = summand
                    .tail_sum(*mode)
                    .map_err(|_| NumError::DivergentSeries(label.to_string()))?
                    .eval(m);
                scale += tail.norm() + partial.iter().map(|p| p.norm()).sum::<f64>();
                Ok(Snapshot {
                    value: head + tail,
                    scale,
                })
            }
        }
    }
}

pub(crate) fn evaluate(plan: Plan, opts: &EvalOptions, label: &str) -> Result<Evaluated, NumError> {
    let weights = plan.weights();
    let period =
        common_level(weights.iter().flat_map(|w| w.terms.iter().map(|t| t.twist))) as usize;
    let shift = weights.iter().map(|w| w.max_shift()).fold(0.0, f64::max);
    let depth = weights.len() as f64;
    let start = opts
        .min_terms
        .max(16 * period as u64)
        .max((16.0 * (shift + depth)).ceil() as u64)
        .next_power_of_two();
    let prepared = Prepared::new(&plan, period, opts, label)?;
    let mut m = start;
    let mut prev = prepared.at(m, period, opts.order, label)?;
    let mut best = f64::INFINITY;
    loop {
        let m2 = 2 * m;
        if m2 > opts.max_terms.max(2 * start) {
            return Err(NumError::ToleranceNotMet {
                requested: opts.tolerance,
                achieved: best,
            });
        }
        let cur = prepared.at(m2, period, opts.order, label)?;
        let roundoff = 16.0 * f64::EPSILON * (cur.scale + prev.scale) * (m2 as f64).log2();
        let err = (cur.value - prev.value).norm() + roundoff;
        best = best.min(err);
        if !err.is_finite() {
            return Err(pole(label));
        }
        if err <= opts.tolerance {
            return Ok(Evaluated {
                value: CVal::from_complex(cur.value, err),
                terms: m2,
            });
        }
        if roundoff > opts.tolerance {
            return Err(NumError::ToleranceNotMet {
                requested: opts.tolerance,
                achieved: err,
            });
        }
        prev = cur;
        m = m2;
    }
}

/// One factor of a product summand in [`product_tail`].
pub enum TailFactor<'a> {
    /// `Σ_{k≤m} f(k)`.
    Partial(&'a Weight),
    /// `Σ_{k>m} f(k)`.
    Remainder(&'a Weight),
}

/// `Σ_{m>from} g(m) Π_j F_j(m)` from the asymptotic expansions alone, without
/// summing any term past `from` (partial sums up to `from` are summed directly).
pub fn product_tail(
    outer: &Weight,
    factors: &[TailFactor],
    from: u64,
    opts: &EvalOptions,
) -> Result<C, NumError> {
    let label = "product tail";
    let twists = factors
        .iter()
        .map(|f| match f {
            TailFactor::Partial(w) | TailFactor::Remainder(w) => *w,
        })
        .chain(std::iter::once(outer))
        .flat_map(|w| w.terms.iter().map(|t| t.twist));
    let period = common_level(twists) as usize;
    let order = opts.order;
    let div = |_| NumError::DivergentSeries(label.to_string());
    let mut summand = Expansion::from_weight(outer, period, order);
    for f in factors {
        let factor = match f {
            TailFactor::Remainder(w) => Expansion::from_weight(w, period, order)
                .tail_sum(TailMode::Strict)
                .map_err(div)?,
            TailFactor::Partial(w) => {
                let tau = Expansion::from_weight(w, period, order)
                    .tail_sum(TailMode::Regularized)
                    .map_err(div)?;
                let compiled = w.compile(period as u64);
                let mut head = C::new(0.0, 0.0);
                for k in 1..=from {
                    head += compiled.at(k).ok_or_else(|| pole(label))?;
                }
                Expansion::constant(period, order, head + tau.eval(from)).sub(&tau)
            }
        };
        summand = summand.mul(&factor);
    }
    Ok(summand.tail_sum(TailMode::Strict).map_err(div)?.eval(from))
}
