//! The kernel functions φ and Φ.
//!
//! ```text
//! φ(s;x) = Σ_{k≥0} x^k/(k+s)
//! Φ(s;x) = φ(s;x) - φ(-s;x⁻¹) - 1/s
//! ```
//!
//! Φ is summed with the two series paired index by index, which is the
//! symmetric-pairing limit at `x = 1` (where Φ = π cot πs).

#![allow(non_snake_case)]

use num_complex::Complex64 as C;

use super::weight::{Factor, Weight, WeightTerm};
use super::{engine, CVal, EvalOptions, NumError};
use crate::cyclo::Root;

fn is_integer(s: C) -> bool {
    s.im == 0.0 && s.re.fract() == 0.0
}

fn term(coeff: C, twist: Root, shift: C, power: u32) -> WeightTerm {
    WeightTerm {
        coeff: coeff.into(),
        twist,
        factors: vec![Factor {
            shift: shift.into(),
            power,
        }],
    }
}

pub fn phi_deriv_with(m: u32, s: C, x: Root, opts: &EvalOptions) -> Result<CVal, NumError> {
    if is_integer(s) && s.re <= 0.0 {
        return Err(NumError::PoleAt(format!("s = {}", s.re)));
    }
    if x.is_one() && m == 0 {
        return Err(NumError::DivergentSeries("phi(s;1)".into()));
    }
    let w = Weight {
        terms: vec![term(C::new(1.0, 0.0), x, s, m + 1)],
    };
    let tail = engine::evaluate(engine::Plan::Nested(&[w]), opts, "phi")?.value;
    let first = CVal::from(s.powi(-(m as i32) - 1));
    let fact: f64 = (1..=m).map(f64::from).product();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok((first + tail).scale(C::new(sign * fact, 0.0)))
}

/// `φ^{(m)}(s;x) = (-1)^m m! Σ_{k≥0} x^k/(k+s)^{m+1}`.
pub fn phi_deriv(m: u32, s: C, x: Root) -> Result<CVal, NumError> {
    phi_deriv_with(m, s, x, &EvalOptions::default())
}

pub fn phi_with(s: C, x: Root, opts: &EvalOptions) -> Result<CVal, NumError> {
    phi_deriv_with(0, s, x, opts)
}

pub fn phi(s: C, x: Root) -> Result<CVal, NumError> {
    phi_with(s, x, &EvalOptions::default())
}

pub fn Phi_big_with(s: C, x: Root, opts: &EvalOptions) -> Result<CVal, NumError> {
    if is_integer(s) {
        return Err(NumError::PoleAt(format!("s = {}", s.re)));
    }
    let w = Weight {
        terms: vec![
            term(C::new(1.0, 0.0), x, s, 1),
            term(C::new(-1.0, 0.0), x.inv(), -s, 1),
        ],
    };
    let tail = engine::evaluate(engine::Plan::Nested(&[w]), opts, "Phi")?.value;
    Ok(tail + CVal::from(1.0 / s))
}

/// `Φ(s;x)`; poles at every integer.
pub fn Phi_big(s: C, x: Root) -> Result<CVal, NumError> {
    Phi_big_with(s, x, &EvalOptions::default())
}
