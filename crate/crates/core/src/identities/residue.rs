//! Direct check that the residues of the linear kernel sum to zero.

use num_complex::Complex64 as C;

use super::expr::{binom, li, pair, sign, ti, Evaluator};
use crate::cyclo::Root;
use crate::numkernel::{product_tail, CVal, EvalOptions, NumError, TailFactor, Weight};

/// Sum of all residues of `Φ(s;x) φ^{(p-1)}(s+1/2;y) (-1)^{p-1}/((p-1)!(s+1/2)^q)`:
/// the integer poles on both sides and the half-integer poles below `-1/2`
/// summed term by term up to `cutoff`, their remainders from asymptotic
/// expansions, and the residue at `-1/2`. The total should vanish.
pub fn residue_sum_zero(p: u32, q: u32, x: Root, y: Root, cutoff: u64) -> Result<CVal, NumError> {
    residue_sum_zero_with(p, q, x, y, cutoff, &Evaluator::default())
}

pub fn residue_sum_zero_with(
    p: u32,
    q: u32,
    x: Root,
    y: Root,
    cutoff: u64,
    ev: &Evaluator,
) -> Result<CVal, NumError> {
    residue_total(p, q, x, y, cutoff, ev, true)
}

/// The same total with the remainders past `cutoff` dropped; it tends to zero
/// as the cutoff grows.
pub fn residue_head_sum(p: u32, q: u32, x: Root, y: Root, cutoff: u64) -> Result<CVal, NumError> {
    residue_total(p, q, x, y, cutoff, &Evaluator::default(), false)
}

fn residue_total(
    p: u32,
    q: u32,
    x: Root,
    y: Root,
    cutoff: u64,
    ev: &Evaluator,
    tails: bool,
) -> Result<CVal, NumError> {
    assert!(p >= 1 && q >= 1, "exponents must be positive");
    let opts: &EvalOptions = ev.options();
    let xy = x.mul(y);
    let (pi, qi) = (p as i64, q as i64);
    let sq = sign(qi) as f64;
    let sp = sign(pi) as f64;
    let tp = ev.expr(&ti(p, y))?;
    let tpv = tp.value();
    let yi = y.inv().complex();

    // Constant pieces: the residue at -1/2 and the half-integer coefficients.
    let mut half_res = ti(p + q, x) * sign(pi + qi - 1) - ti(p + q, x.inv()) * x;
    for m in 0..q {
        let k = q - 1 - m;
        half_res = half_res
            + li(k + p, y) * pair(m, x) * (sign(k as i64) * binom(k as i64 + pi - 1, pi - 1));
    }
    let at_half = ev.expr(&half_res)?;
    let mut coeffs: Vec<(u32, CVal)> = Vec::new();
    for m in 0..p {
        let c = pair(m, x) * (sign(qi) * binom(pi + qi - m as i64 - 2, qi - 1));
        coeffs.push((p + q - m - 1, ev.expr(&c)?));
    }

    // Heads.
    let mut head = C::new(0.0, 0.0);
    let mut scale: f64 = 0.0;
    let mut t_y = C::new(0.0, 0.0);
    let mut t_yi = C::new(0.0, 0.0);
    for n in 0..=cutoff {
        let nf = n as f64;
        if n >= 1 {
            t_y += y.pow(n as i64).complex() / (nf - 0.5).powi(p as i32);
            t_yi += y.inv().pow(n as i64).complex() / (nf - 0.5).powi(p as i32);
        }
        let plus = x.pow(-(n as i64)).complex() * y.pow(-(n as i64) - 1).complex()
            / (nf + 0.5).powi(q as i32)
            * (tpv - t_y);
        head += plus;
        scale = scale.max(plus.norm());
        if n >= 1 {
            let xyn = xy.pow(n as i64).complex();
            let minus = xyn * sq / (nf - 0.5).powi(q as i32) * (tpv * yi + t_yi * sp);
            let mut halfs = C::new(0.0, 0.0);
            for (w, c) in &coeffs {
                halfs += c.value() * xyn / nf.powi(*w as i32);
            }
            head += minus + halfs;
            scale = scale.max(minus.norm()).max(halfs.norm());
        }
    }

    // Remainders past the cutoff.
    let mut tail = C::new(0.0, 0.0);
    if tails {
        let f_y = Weight::monomial(C::new(1.0, 0.0), y, C::new(-0.5, 0.0), p);
        let f_yi = Weight::monomial(C::new(1.0, 0.0), y.inv(), C::new(-0.5, 0.0), p);
        let g_plus = Weight::monomial(yi, xy.inv(), C::new(0.5, 0.0), q);
        let g_minus = Weight::monomial(C::new(sq, 0.0), xy, C::new(-0.5, 0.0), q);
        tail = product_tail(&g_plus, &[TailFactor::Remainder(&f_y)], cutoff, opts)?;
        tail += product_tail(&g_minus, &[], cutoff, opts)? * tpv * yi;
        tail += product_tail(&g_minus, &[TailFactor::Partial(&f_yi)], cutoff, opts)? * sp;
        for (w, c) in &coeffs {
            let g = Weight::monomial(C::new(1.0, 0.0), xy, C::new(0.0, 0.0), *w);
            tail += product_tail(&g, &[], cutoff, opts)? * c.value();
        }
    }

    // Constants enter through every term; bound their propagated error crudely.
    let const_err = tp.err * (cutoff as f64 + 1.0).min(1e3)
        + coeffs.iter().map(|(_, c)| c.err).sum::<f64>() * 2.0;
    let round = 8.0 * f64::EPSILON * scale * cutoff as f64;
    let total = CVal::from_complex(head + tail, const_err + round) + at_half;
    Ok(total)
}
