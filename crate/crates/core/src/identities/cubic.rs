//! Parity for Euler T-sums of order three with all inner exponents one.

use num_rational::Rational64;

use super::expr::{li, pair, sign, ssum, ti, tsum, Expr};
use super::{excluded, IdentityError, Sides};
use crate::cyclo::Root;

/// Two ways to read the closed formula where its literal text misbehaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubicReading {
    /// Range `m + k = q + 1` for the single-Li bracket sum (literally `m + k = q - 3`).
    pub single_sum_q_plus_one: bool,
    /// Pairs `Li_1(x_2)` with `S_{1;q}(x_1⁻¹; X)` (literally `x_2⁻¹`).
    pub symmetric_s_pairing: bool,
}

impl CubicReading {
    pub const CORRECTED: CubicReading = CubicReading {
        single_sum_q_plus_one: true,
        symmetric_s_pairing: true,
    };
    pub const LITERAL: CubicReading = CubicReading {
        single_sum_q_plus_one: false,
        symmetric_s_pairing: false,
    };
}

/// `x T_{1,1,1;q}(x1,x2,x3;X⁻¹) + (-1)^q T_{1,1,1;q}(x1⁻¹,x2⁻¹,x3⁻¹;X)`, `X = x x1 x2 x3`.
pub fn cubic_ones_parity_sides(q: u32, x: Root, xs: [Root; 3]) -> Result<Sides, IdentityError> {
    cubic_ones_parity_sides_with(q, x, xs, CubicReading::CORRECTED)
}

pub fn cubic_ones_parity_sides_with(
    q: u32,
    x: Root,
    xs: [Root; 3],
    reading: CubicReading,
) -> Result<Sides, IdentityError> {
    if q == 0 {
        return Err(IdentityError::Precondition("q must be positive".into()));
    }
    let big = xs.iter().fold(x, |a, r| a.mul(*r));
    if excluded(q, big) {
        return Err(IdentityError::DivergentInstance(
            "t̃_1(1) from (q, x x1 x2 x3) = (1, 1)".into(),
        ));
    }
    let lhs = tsum(&[(1, xs[0]), (1, xs[1]), (1, xs[2])], q, big.inv()) * x
        + tsum(
            &[(1, xs[0].inv()), (1, xs[1].inv()), (1, xs[2].inv())],
            q,
            big,
        ) * sign(q as i64);
    Sides::new(lhs, cubic_rhs(q, x, xs, reading)).check()
}

fn cubic_rhs(q: u32, x: Root, xs: [Root; 3], reading: CubicReading) -> Expr {
    let big = xs.iter().fold(x, |a, r| a.mul(*r));
    let bi = big.inv();
    let sq = sign(q as i64);
    let t1 = |i: usize| ti(1, xs[i]);
    let pairs = [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)];
    let mut rhs = t1(0) * t1(1) * t1(2) * ti(q, bi) * x;

    for &(i, j, k) in &pairs {
        let xij = x.mul(xs[i]).mul(xs[j]);
        rhs = rhs - t1(i) * t1(j) * (tsum(&[(1, xs[k])], q, bi) - ti(q + 1, xij.inv())) * x;
    }
    for i in 0..3 {
        let (j, k) = others(i);
        let xi = x.mul(xs[i]);
        rhs = rhs
            + t1(i)
                * (tsum(&[(1, xs[j]), (1, xs[k])], q, bi)
                    - tsum(&[(1, xs[j])], q + 1, xi.mul(xs[j]).inv())
                    - tsum(&[(1, xs[k])], q + 1, xi.mul(xs[k]).inv())
                    + ti(q + 2, xi.inv()))
                * x;
    }
    for &(i, j, _) in &pairs {
        rhs = rhs
            + tsum(
                &[(1, xs[i]), (1, xs[j])],
                q + 1,
                x.mul(xs[i]).mul(xs[j]).inv(),
            ) * x;
    }
    for i in 0..3 {
        rhs = rhs - tsum(&[(1, xs[i])], q + 2, x.mul(xs[i]).inv()) * x;
    }
    rhs = rhs + t1(0) * t1(1) * t1(2) * ti(q, big) * xs[0].mul(xs[1]).mul(xs[2]).inv() * sq;
    for &(i, j, k) in &pairs {
        rhs = rhs - t1(i) * t1(j) * tsum(&[(1, xs[k].inv())], q, big) * xs[i].mul(xs[j]).inv() * sq;
    }
    for i in 0..3 {
        let (j, k) = others(i);
        rhs = rhs + t1(i) * tsum(&[(1, xs[j].inv()), (1, xs[k].inv())], q, big) * xs[i].inv() * sq;
    }
    rhs = rhs + ti(q + 3, x) * sq;

    // Brackets against values at X.
    let qq = q as i64;
    rhs = rhs
        + (li(q, big) * pair(2, x)
            + (li(q + 2, big) * pair(0, x)).scale(Rational64::from_integer(qq * (qq + 1) / 2))
            + li(q + 1, big) * pair(1, x) * qq)
            * sq;
    let s = |a: u32, b: u32, i: usize| ssum(&[(a, xs[i].inv())], b, big);
    let sum3 = |f: &dyn Fn(usize) -> Expr| (0..3).map(f).sum::<Expr>();
    rhs = rhs
        + pair(0, x)
            * (sum3(&|i| li(1, xs[i]) * li(q + 1, big)) - sum3(&|i| s(1, q + 1, i)))
            * (sq * qq);
    rhs = rhs - pair(0, x) * (sum3(&|i| li(2, xs[i]) * li(q, big)) + sum3(&|i| s(2, q, i))) * sq;
    rhs = rhs + pair(1, x) * (sum3(&|i| li(1, xs[i]) * li(q, big)) - sum3(&|i| s(1, q, i))) * sq;

    let second = if reading.symmetric_s_pairing { 0 } else { 1 };
    let mixed = pairs
        .iter()
        .map(|&(i, j, _)| li(1, xs[i]) * li(1, xs[j]) * li(q, big))
        .sum::<Expr>()
        - li(1, xs[0]) * (s(1, q, 1) + s(1, q, 2))
        - li(1, xs[1]) * (s(1, q, second) + s(1, q, 2))
        - li(1, xs[2]) * (s(1, q, 0) + s(1, q, 1))
        + pairs
            .iter()
            .map(|&(i, j, _)| ssum(&[(1, xs[i].inv()), (1, xs[j].inv())], q, big))
            .sum::<Expr>();
    rhs = rhs + pair(0, x) * mixed * sq;

    // Sums produced by the pole at -1/2.
    let single_total: i64 = if reading.single_sum_q_plus_one {
        qq + 1
    } else {
        qq - 3
    };
    for m in 0..=single_total.max(-1) {
        let k = (single_total - m) as u32;
        rhs = rhs + sum3(&|i| li(k + 1, xs[i])) * pair(m as u32, x) * sign(k as i64);
    }
    for m in 0..q {
        for k1 in 0..(q - m) {
            for k2 in 0..(q - m - k1) {
                let k3 = q - 1 - m - k1 - k2;
                rhs = rhs
                    + li(k1 + 1, xs[0])
                        * li(k2 + 1, xs[1])
                        * li(k3 + 1, xs[2])
                        * pair(m, x)
                        * sign((k1 + k2 + k3) as i64);
            }
        }
    }
    for m in 0..=q {
        for k1 in 0..=(q - m) {
            let k2 = q - m - k1;
            let prods = li(k1 + 1, xs[0]) * li(k2 + 1, xs[1])
                + li(k1 + 1, xs[0]) * li(k2 + 1, xs[2])
                + li(k1 + 1, xs[2]) * li(k2 + 1, xs[1]);
            rhs = rhs + prods * pair(m, x) * sign((k1 + k2) as i64);
        }
    }
    rhs
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}
