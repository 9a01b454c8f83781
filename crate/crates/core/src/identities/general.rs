//! Parity for a rational kernel `r(s)` paired with `Φ(s;x) φ^{(p-1)}(s+1/2;y)`.
//!
//! Every residue of the kernel function is collected. Extra simple poles of
//! `r` end up on the left as `Φ·φ^{(p-1)}` values; the integer and
//! half-integer poles become nested sums built from the partial fractions
//! of `r`, and the special point contributes Taylor data of `(s-a)^q r(s)`.

use num_complex::Complex64 as C;

use super::expr::{binom, li, li_pair, pair, sign, stsum, ti, tsum, Atom, Expr};
use super::{excluded, IdentityError, Sides};
use crate::cyclo::Root;
use crate::numkernel::{Cx, Weight};
use crate::ratfrac::{strip_special_pole, validate_kernel, KernelVariant, PartialFraction};

const NEAR: f64 = 1e-12;

/// How the sums over integer poles are written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KernelRoute {
    /// Closed form through T- or S̃-sums when every pole sits at the special
    /// point, nested sums otherwise.
    #[default]
    Auto,
    /// Always nested sums from the partial fractions.
    Generic,
}

/// Kernel with special point `-1/2`.
pub fn general_r1_sides(
    p: u32,
    x: Root,
    y: Root,
    r: &PartialFraction,
) -> Result<Sides, IdentityError> {
    general_sides(KernelVariant::R1, p, x, y, r, KernelRoute::Auto)
}

/// Kernel with special point `0`.
pub fn general_r2_sides(
    p: u32,
    x: Root,
    y: Root,
    r: &PartialFraction,
) -> Result<Sides, IdentityError> {
    general_sides(KernelVariant::R2, p, x, y, r, KernelRoute::Auto)
}

pub fn general_sides(
    variant: KernelVariant,
    p: u32,
    x: Root,
    y: Root,
    r: &PartialFraction,
    route: KernelRoute,
) -> Result<Sides, IdentityError> {
    if p == 0 {
        return Err(IdentityError::Precondition("p must be positive".into()));
    }
    let class = validate_kernel(r, variant)?;
    if r.poles.is_empty() {
        return Err(IdentityError::Precondition("zero kernel".into()));
    }
    if excluded(p, y) {
        return Err(IdentityError::DivergentInstance(
            "t̃_1(1) from (p, y) = (1, 1)".into(),
        ));
    }
    let xy = x.mul(y);
    let lead: C = r.poles.iter().map(|pl| pl.coeffs[0]).sum();
    if xy.is_one() && lead.norm() > NEAR {
        return Err(IdentityError::DivergentInstance(
            "kernel decays like 1/s while xy = 1".into(),
        ));
    }
    let special = variant.special_point();
    let extra: Vec<_> = r
        .poles
        .iter()
        .filter(|pl| (pl.at - special).norm() > NEAR)
        .collect();
    for pl in &extra {
        if pl.order() > 1 {
            return Err(IdentityError::UnsupportedPoleOrder(
                format!("{}", pl.at),
                pl.order() as usize,
            ));
        }
    }
    if route == KernelRoute::Auto && extra.is_empty() {
        let pl = &r.poles[0];
        return match variant {
            KernelVariant::R1 => closed_r1(p, x, y, &pl.coeffs),
            KernelVariant::R2 => closed_r2(p, x, y, &pl.coeffs),
        };
    }

    // Residues at the extra simple poles α: c Φ(α;x) (-1)^{p-1} φ^{(p-1)}(α+1/2;y)/(p-1)!.
    let fact: f64 = (1..p).map(f64::from).product();
    let mut lhs = Expr::zero();
    for pl in &extra {
        let c = -pl.coeffs[0] * sign(p as i64 - 1) as f64 / fact;
        lhs = lhs
            + scalar(c)
                * Expr::atom(Atom::BigPhi {
                    s: Cx::new(pl.at),
                    x,
                })
                * Expr::atom(Atom::PhiDeriv {
                    m: p - 1,
                    s: Cx::new(pl.at + 0.5),
                    x: y,
                });
    }

    let q = class.special_order;
    let big_r = strip_special_pole(r, special, q)?;
    let rho = |j: u32| -> Result<C, IdentityError> {
        let f: f64 = (1..=j).map(f64::from).product();
        Ok(big_r.derivative(j).eval(special)? / f)
    };
    let one = C::new(1.0, 0.0);
    let f_y = Weight::monomial(one, y, C::new(-0.5, 0.0), p);
    let g_y = Weight::monomial(one, y.inv(), C::new(-0.5, 0.0), p);
    let mut rhs = Expr::zero();

    // Poles at -n, n ≥ 1: (xy)^n r(-n) (t̃_p(y)/y + (-1)^p t_n(p;y⁻¹)).
    let v = weight_at(r, -1, 0.0, xy);
    rhs = rhs
        + ti(p, y) * nested(vec![v.clone()]) * y.inv()
        + (nested(vec![g_y.clone(), v.clone()]) + nested(vec![g_y.times(&v)])) * sign(p as i64);

    match variant {
        KernelVariant::R1 => {
            // Poles at n ≥ 0, reindexed by n+1: x (xy)^{-n} r(n-1) Σ_{m≥n} y^m/(m-1/2)^p.
            let w = weight_at(r, 1, -1.0, xy.inv());
            rhs = rhs + (nested(vec![w.clone(), f_y.clone()]) + nested(vec![w.times(&f_y)])) * x;
            for m in 0..p + q {
                rhs = rhs + pair(m, x) * scalar(rho(p + q - m - 1)?);
            }
            for m in 0..q {
                for k in 0..q - m {
                    let c = sign(k as i64) * binom((k + p - 1) as i64, (p - 1) as i64);
                    rhs = rhs + li(k + p, y) * pair(m, x) * scalar(rho(q - m - k - 1)? * c as f64);
                }
            }
            for m in 0..p {
                let u = weight_at(&derivative_over_factorial(r, p - m - 1), -1, -0.5, xy);
                rhs = rhs + pair(m, x) * nested(vec![u]);
            }
        }
        KernelVariant::R2 => {
            // Poles at n ≥ 1: y⁻¹ (xy)^{-n} r(n) Σ_{m>n} y^m/(m-1/2)^p.
            let w = weight_at(r, 1, 0.0, xy.inv());
            rhs = rhs + nested(vec![w, f_y]) * y.inv();
            for k in 0..=q {
                let c = sign(k as i64) * binom((k + p - 1) as i64, (p - 1) as i64);
                rhs = rhs + ti(k + p, y) * y.inv() * scalar(rho(q - k)? * c as f64);
            }
            for m in 0..q {
                for k in 0..q - m {
                    let c = sign(k as i64) * binom((k + p - 1) as i64, (p - 1) as i64);
                    rhs = rhs
                        + ti(k + p, y)
                            * y.inv()
                            * li_pair(m, x)
                            * scalar(rho(q - m - k - 1)? * c as f64);
                }
            }
            // Poles at -(n+1/2), n ≥ 0, reindexed by n+1.
            for m in 0..p {
                let u = weight_at(&derivative_over_factorial(r, p - m - 1), -1, 0.5, xy);
                rhs = rhs + pair(m, x) * nested(vec![u]) * xy.inv();
            }
        }
    }
    Sides::new(lhs, rhs).check()
}

/// `r(σn + e)` as a weight in `n`, times `zⁿ`.
fn weight_at(r: &PartialFraction, sigma: i64, e: f64, z: Root) -> Weight {
    let sg = sigma as f64;
    let mut w = Weight::default();
    for pl in &r.poles {
        for (i, &c) in pl.coeffs.iter().enumerate() {
            if c == C::new(0.0, 0.0) {
                continue;
            }
            let k = i as u32 + 1;
            let shift = (C::new(e, 0.0) - pl.at) * sg;
            w = w.plus(Weight::monomial(c * sg.powi(k as i32), z, shift, k));
        }
    }
    w
}

fn derivative_over_factorial(r: &PartialFraction, j: u32) -> PartialFraction {
    let f: f64 = (1..=j).map(f64::from).product();
    r.derivative(j).scaled(C::new(1.0 / f, 0.0))
}

fn nested(ws: Vec<Weight>) -> Expr {
    if ws.iter().any(|w| w.terms.is_empty()) {
        return Expr::zero();
    }
    Expr::atom(Atom::Nested(ws))
}

/// Exact rational when the value is an integer, a numeric scalar otherwise.
fn scalar(c: C) -> Expr {
    if c.im == 0.0 && c.re.fract() == 0.0 && c.re.abs() < 1e15 {
        Expr::int(c.re as i64)
    } else {
        Expr::scalar(c)
    }
}

/// `r(s) = Σ_j c_j (s+1/2)^{-j}`; `coeffs[j-1] = c_j`.
fn closed_r1(p: u32, x: Root, y: Root, coeffs: &[C]) -> Result<Sides, IdentityError> {
    let xy = x.mul(y);
    let pi = p as i64;
    let c = |j: u32| scalar(coeffs[j as usize - 1]);
    let q = coeffs.len() as u32;
    let mut lhs = Expr::zero();
    let mut rhs = Expr::zero();
    for j in 1..=q {
        let ji = j as i64;
        lhs = lhs
            + c(j)
                * (tsum(&[(p, y)], j, xy.inv()) * x - tsum(&[(p, y.inv())], j, xy) * sign(pi + ji));
        // The pair at m = p+j-1 absorbs x t̃_{p+j}(x⁻¹) from the integer poles.
        rhs = rhs
            + c(j)
                * (ti(p, y) * ti(j, xy.inv()) * x
                    + ti(p, y) * ti(j, xy) * y.inv() * sign(ji)
                    + ti(p + j, x) * sign(pi + ji - 1));
        for m in 0..p {
            let mi = m as i64;
            rhs = rhs
                + c(j)
                    * pair(m, x)
                    * li(p + j - m - 1, xy)
                    * (sign(ji) * binom(pi + ji - mi - 2, ji - 1));
        }
    }
    for m in 0..q {
        for k in 0..q - m {
            let b = sign(k as i64) * binom((k + p - 1) as i64, pi - 1);
            rhs = rhs + c(m + k + 1) * pair(m, x) * li(k + p, y) * b;
        }
    }
    Sides::new(lhs, rhs).check()
}

/// `r(s) = Σ_j c_j s^{-j}`; the sides are scaled by `y`.
fn closed_r2(p: u32, x: Root, y: Root, coeffs: &[C]) -> Result<Sides, IdentityError> {
    let xy = x.mul(y);
    let pi = p as i64;
    let c = |j: u32| scalar(coeffs[j as usize - 1]);
    let q = coeffs.len() as u32;
    let mut lhs = Expr::zero();
    let mut rhs = Expr::zero();
    for j in 1..=q {
        let ji = j as i64;
        lhs = lhs
            + c(j)
                * (stsum(&[(p, y)], j, xy.inv())
                    - stsum(&[(p, y.inv())], j, xy) * y * sign(pi + ji));
        rhs = rhs
            + c(j)
                * (ti(p, y) * li(j, xy.inv())
                    + ti(p, y) * li(j, xy) * sign(ji)
                    + ti(p + j, y) * (sign(ji) * binom(pi + ji - 1, pi - 1)));
        for m in 0..p {
            let mi = m as i64;
            rhs = rhs
                + c(j)
                    * pair(m, x)
                    * ti(p + j - m - 1, xy)
                    * x.inv()
                    * (sign(ji) * binom(pi + ji - mi - 2, ji - 1));
        }
    }
    for m in 0..q {
        for k in 0..q - m {
            let b = sign(k as i64) * binom((k + p - 1) as i64, pi - 1);
            rhs = rhs + c(m + k + 1) * ti(k + p, y) * li_pair(m, x) * b;
        }
    }
    Sides::new(lhs, rhs).check()
}
