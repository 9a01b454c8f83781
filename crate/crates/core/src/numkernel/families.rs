use num_complex::Complex64 as C;

use super::engine::{self, Evaluated, Plan};
use super::spec::{Family, SeriesSpec};
use super::weight::Weight;
use super::{CVal, EvalOptions, NumError};
use crate::cyclo::Root;

fn one() -> C {
    C::new(1.0, 0.0)
}

fn finite_sum(n: u64, p: u32, x: Root, shift: f64) -> CVal {
    let mut total = C::new(0.0, 0.0);
    let mut size = 0.0;
    for k in 1..=n {
        let t = x.pow(k as i64).complex() / (k as f64 + shift).powi(p as i32);
        total += t;
        size += t.norm();
    }
    CVal::from_complex(total, 2.0 * f64::EPSILON * (n as f64 + 1.0) * size)
}

/// `ζ_n(p;x) = Σ_{k=1}^{n} x^k/k^p`.
pub fn partial_zeta(n: u64, p: u32, x: Root) -> CVal {
    finite_sum(n, p, x, 0.0)
}

/// `t_n(p;x) = Σ_{k=1}^{n} x^k/(k-1/2)^p`.
pub fn partial_t(n: u64, p: u32, x: Root) -> CVal {
    finite_sum(n, p, x, -0.5)
}

/// Summand weights of a spec: the nested parts, or the inner factors
/// followed by the outer weight for Euler-type families.
pub fn spec_weights(spec: &SeriesSpec) -> (Vec<Weight>, Option<Weight>) {
    let half = C::new(-0.5, 0.0);
    let zero = C::new(0.0, 0.0);
    let inner_shift = match spec.family {
        Family::SSum | Family::Mzv | Family::Polylog => zero,
        _ => half,
    };
    let inner = spec
        .inner
        .parts
        .iter()
        .enumerate()
        .map(|(j, &(k, x))| match spec.family {
            Family::Mtv => {
                let c = 2f64.powi(1 - k as i32);
                Weight::monomial(C::new(c, 0.0), x, C::new(-((j + 1) as f64) / 2.0, 0.0), k)
            }
            _ => Weight::monomial(one(), x, inner_shift, k),
        })
        .collect();
    let outer = spec.outer.map(|(q, x)| {
        let shift = if spec.family == Family::TSum {
            half
        } else {
            zero
        };
        Weight::monomial(one(), x, shift, q)
    });
    (inner, outer)
}

/// Evaluates any spec, returning the value and the head length used.
pub fn evaluate(spec: &SeriesSpec, opts: &EvalOptions) -> Result<Evaluated, NumError> {
    let label = spec.to_string();
    if !spec.is_admissible() && !opts.regularize {
        return Err(NumError::DivergentSeries(label));
    }
    if spec.family == Family::Polylog
        && spec.inner.parts[0].0 == 1
        && !spec.inner.parts[0].1.is_one()
    {
        let x = spec.inner.parts[0].1.complex();
        let v = -(one() - x).ln();
        return Ok(Evaluated {
            value: CVal::from_complex(v, 8.0 * f64::EPSILON * (1.0 + v.norm())),
            terms: 0,
        });
    }
    let (inner, outer) = spec_weights(spec);
    match outer {
        Some(g) => engine::evaluate(
            Plan::Euler {
                factors: &inner,
                outer: &g,
            },
            opts,
            &label,
        ),
        None => engine::evaluate(Plan::Nested(&inner), opts, &label),
    }
}

/// `Σ_{0<n₁<…<n_r} Π w_j(n_j)` for arbitrary weights.
pub fn nested_sum(
    parts: &[Weight],
    opts: &EvalOptions,
    label: &str,
) -> Result<Evaluated, NumError> {
    engine::evaluate(Plan::Nested(parts), opts, label)
}

/// `Σ_n Π_j (Σ_{m≤n} f_j(m)) · g(n)` for arbitrary weights.
pub fn euler_product_sum(
    factors: &[Weight],
    outer: &Weight,
    opts: &EvalOptions,
    label: &str,
) -> Result<Evaluated, NumError> {
    engine::evaluate(Plan::Euler { factors, outer }, opts, label)
}

pub fn polylog_with(p: u32, x: Root, opts: &EvalOptions) -> Result<CVal, NumError> {
    evaluate(&SeriesSpec::polylog(p, x), opts).map(|e| e.value)
}

/// `Li_p(x)`; `Li_1` uses `-log(1-x)`.
pub fn polylog(p: u32, x: Root) -> Result<CVal, NumError> {
    polylog_with(p, x, &EvalOptions::default())
}

pub fn t_polylog_with(p: u32, x: Root, opts: &EvalOptions) -> Result<CVal, NumError> {
    evaluate(&SeriesSpec::t_polylog(p, x), opts).map(|e| e.value)
}

/// `t̃_p(x) = Σ_{n≥1} xⁿ/(n-1/2)^p`.
pub fn t_polylog(p: u32, x: Root) -> Result<CVal, NumError> {
    t_polylog_with(p, x, &EvalOptions::default())
}

fn check_family(spec: &SeriesSpec, ok: &[Family]) {
    assert!(ok.contains(&spec.family), "{} is not one of {:?}", spec, ok);
}

pub fn multiple_value_with(spec: &SeriesSpec, opts: &EvalOptions) -> Result<CVal, NumError> {
    check_family(
        spec,
        &[
            Family::MtV,
            Family::Mzv,
            Family::Mtv,
            Family::Polylog,
            Family::TPolylog,
        ],
    );
    evaluate(spec, opts).map(|e| e.value)
}

/// Multiple t-values, multiple polylogarithm values and multiple T-values.
pub fn multiple_value(spec: &SeriesSpec) -> Result<CVal, NumError> {
    multiple_value_with(spec, &EvalOptions::default())
}

pub fn euler_sum_with(spec: &SeriesSpec, opts: &EvalOptions) -> Result<CVal, NumError> {
    check_family(spec, &[Family::TSum, Family::SSum, Family::STildeSum]);
    evaluate(spec, opts).map(|e| e.value)
}

/// T-sums, S-sums and S-tilde sums.
pub fn euler_sum(spec: &SeriesSpec) -> Result<CVal, NumError> {
    euler_sum_with(spec, &EvalOptions::default())
}

/// Multiple t-value through multiple polylogarithms at square roots:
///
/// ```text
/// t̃_k(x) = 2^{|k|-r} (Π √x_j) Σ_σ σ₁…σ_r Li_k(σ₁√x₁, …, σ_r√x_r)
/// ```
///
/// `flips[j]` replaces `√x_j` by `-√x_j`; the result does not depend on it.
pub fn t_via_li_branches(
    spec: &SeriesSpec,
    flips: &[bool],
    opts: &EvalOptions,
) -> Result<CVal, NumError> {
    check_family(spec, &[Family::MtV]);
    if !spec.is_admissible() {
        return Err(NumError::DivergentSeries(spec.to_string()));
    }
    let r = spec.inner.len();
    let roots: Vec<Root> = spec
        .inner
        .parts
        .iter()
        .enumerate()
        .map(|(j, &(_, x))| {
            let s = x.sqrt();
            if flips.get(j).copied().unwrap_or(false) {
                s.mul(Root::MINUS_ONE)
            } else {
                s
            }
        })
        .collect();
    let mut total = CVal::ZERO;
    for mask in 0u32..(1 << r) {
        let mut sign = 1.0;
        let parts = spec
            .inner
            .parts
            .iter()
            .zip(&roots)
            .enumerate()
            .map(|(j, (&(k, _), &s))| {
                if mask & (1 << j) != 0 {
                    sign = -sign;
                    (k, s.mul(Root::MINUS_ONE))
                } else {
                    (k, s)
                }
            })
            .collect();
        let v = multiple_value_with(&SeriesSpec::mzv(super::Comp::new(parts)), opts)?;
        total = total + v.scale(C::new(sign, 0.0));
    }
    let prefactor = roots.iter().fold(Root::ONE, |a, &b| a.mul(b)).complex()
        * 2f64.powi(spec.inner.weight() as i32 - r as i32);
    Ok(total.scale(prefactor))
}

pub fn t_via_li_with(spec: &SeriesSpec, opts: &EvalOptions) -> Result<CVal, NumError> {
    t_via_li_branches(spec, &[], opts)
}

pub fn t_via_li(spec: &SeriesSpec) -> Result<CVal, NumError> {
    t_via_li_with(spec, &EvalOptions::default())
}
