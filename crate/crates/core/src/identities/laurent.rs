//! Expansion coefficients of the kernel functions about integers and half-integers.
#![allow(non_snake_case)]

use num_complex::Complex64 as C;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::expr::{binom, sign};
use crate::cyclo::Root;
use crate::numkernel::{
    partial_t, partial_zeta, polylog_with, t_polylog_with, CVal, EvalOptions, NumError,
};

/// Which function is expanded: `φ^{(p-1)}(s;x)` or `φ^{(p-1)}(s+1/2;x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Around {
    IntegerSide,
    HalfShifted,
}

fn real(v: i64) -> C {
    C::new(v as f64, 0.0)
}

/// Coefficient of `(s - n)^k` in `(-1)^{p-1} φ^{(p-1)}(s;x)/(p-1)!` (integer side)
/// or in the same expression with `s + 1/2` as argument (half-shifted).
///
/// Negative `k` addresses the principal part, which is `x^{-n}` at `k = -p` for
/// the integer side at `n ≤ 0` and zero otherwise.
pub fn laurent_coeff_phi(
    n: i64,
    p: u32,
    k: i64,
    x: Root,
    around: Around,
) -> Result<CVal, NumError> {
    laurent_coeff_phi_with(n, p, k, x, around, &EvalOptions::default())
}

pub fn laurent_coeff_phi_with(
    n: i64,
    p: u32,
    k: i64,
    x: Root,
    around: Around,
    opts: &EvalOptions,
) -> Result<CVal, NumError> {
    assert!(p >= 1, "p must be positive");
    if k < 0 {
        let hit = around == Around::IntegerSide && n <= 0 && k == -(p as i64);
        return Ok(if hit {
            x.pow(-n).to_complex()
        } else {
            CVal::ZERO
        });
    }
    let ku = k as u32;
    let w = ku + p;
    let c = binom(k + p as i64 - 1, p as i64 - 1) as f64;
    let sk = sign(k);
    let sp = sign(p as i64);
    let v = match (around, n <= 0) {
        (Around::IntegerSide, true) => {
            let m = (-n) as u64;
            let inner = polylog_with(w, x, opts)?.scale(real(sk))
                + partial_zeta(m, w, x.inv()).scale(real(sp));
            inner.scale(x.pow(m as i64).complex() * c)
        }
        (Around::IntegerSide, false) => {
            let inner = polylog_with(w, x, opts)? - partial_zeta(n as u64 - 1, w, x);
            inner.scale(x.pow(-n).complex() * (c * sk as f64))
        }
        (Around::HalfShifted, true) => {
            let m = (-n) as u64;
            let inner = t_polylog_with(w, x, opts)?.scale(real(sk) * x.inv().complex())
                + partial_t(m, w, x.inv()).scale(real(sp));
            inner.scale(x.pow(m as i64).complex() * c)
        }
        (Around::HalfShifted, false) => {
            let inner = t_polylog_with(w, x, opts)? - partial_t(n as u64, w, x);
            inner.scale(x.pow(-n - 1).complex() * (c * sk as f64))
        }
    };
    Ok(v)
}

/// Coefficient of `(s - a)^m` in `Φ(s;x)` about an integer or half-integer `a`.
///
/// At integers `m = -1` gives the residue `x^{-a}`. About positive
/// half-integers the expansion follows from `Φ(s;x) = -Φ(-s;x⁻¹)`.
pub fn laurent_coeff_Phi(a: Rational64, m: i64, x: Root) -> Result<CVal, NumError> {
    laurent_coeff_Phi_with(a, m, x, &EvalOptions::default())
}

pub fn laurent_coeff_Phi_with(
    a: Rational64,
    m: i64,
    x: Root,
    opts: &EvalOptions,
) -> Result<CVal, NumError> {
    let half = Rational64::new(1, 2);
    if a.is_integer() {
        let n = a.to_integer();
        if m < 0 {
            return Ok(if m == -1 {
                x.pow(-n).to_complex()
            } else {
                CVal::ZERO
            });
        }
        let mu = m as u32;
        let pair = if mu == 0 && x.is_one() {
            CVal::ZERO
        } else {
            polylog_with(mu + 1, x, opts)?.scale(real(sign(m)))
                - polylog_with(mu + 1, x.inv(), opts)?
        };
        return Ok(pair.scale(x.pow(-n).complex()));
    }
    if !(a - half).is_integer() {
        return Err(NumError::PoleAt(format!(
            "{a} is neither an integer nor a half-integer"
        )));
    }
    if m < 0 {
        return Ok(CVal::ZERO);
    }
    let mu = m as u32;
    let t_pair = |y: Root| -> Result<CVal, NumError> {
        if mu == 0 && y.is_one() {
            return Ok(CVal::ZERO);
        }
        Ok(t_polylog_with(mu + 1, y, opts)?.scale(real(sign(m)))
            - t_polylog_with(mu + 1, y.inv(), opts)?.scale(y.complex()))
    };
    if a < Rational64::zero() {
        // a = -(n + 1/2)
        let n = (-a - half).to_integer();
        Ok(t_pair(x)?.scale(x.pow(n).complex()))
    } else {
        let n = (a - half).to_integer();
        Ok(t_pair(x.inv())?.scale(x.pow(-n).complex() * (-(sign(m) as f64))))
    }
}
