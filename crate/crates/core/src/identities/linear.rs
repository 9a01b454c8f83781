//! Linear parity for Euler T-sums of order one.

use super::expr::{binom, li, pair, sign, ti, tsum, Expr};
use super::{excluded, IdentityError, Sides};
use crate::cyclo::Root;

/// `x T_{p;q}(y;(xy)⁻¹) - (-1)^{p+q} T_{p;q}(y⁻¹;xy)` against its reduction to
/// products of depth-one values.
pub fn linear_parity_sides(p: u32, q: u32, x: Root, y: Root) -> Result<Sides, IdentityError> {
    if p == 0 || q == 0 {
        return Err(IdentityError::Precondition(
            "exponents must be positive".into(),
        ));
    }
    let xy = x.mul(y);
    if excluded(p, y) {
        return Err(IdentityError::DivergentInstance(
            "t̃_1(1) from (p, y) = (1, 1)".into(),
        ));
    }
    if excluded(q, xy) {
        return Err(IdentityError::DivergentInstance(
            "t̃_1(1) from (q, xy) = (1, 1)".into(),
        ));
    }
    let (pi, qi) = (p as i64, q as i64);
    let lhs = tsum(&[(p, y)], q, xy.inv()) * x - tsum(&[(p, y.inv())], q, xy) * sign(pi + qi);

    let mut rhs = ti(p, y) * ti(q, xy.inv()) * x
        + ti(p, y) * ti(q, xy) * y.inv() * sign(qi)
        + ti(p + q, x) * sign(pi + qi - 1);
    for m in 0..p {
        let mi = m as i64;
        rhs =
            rhs + pair(m, x) * li(p + q - m - 1, xy) * (sign(qi) * binom(pi + qi - mi - 2, qi - 1));
    }
    for m in 0..q {
        let mi = m as i64;
        // (-1)^m x t̃_{m+1}(x⁻¹) - t̃_{m+1}(x) is -(-1)^m times the pair bracket.
        rhs = rhs
            + pair(m, x)
                * li(p + q - m - 1, y)
                * (-sign(qi + mi) * binom(pi + qi - mi - 2, pi - 1));
    }
    Sides::new(lhs, rhs).check()
}

/// `2 T_{p;q}(1;1)` in terms of `t(k)` and `ζ(k)` for `p, q ≥ 2` with odd `p + q`.
pub fn linear_parity_corollary(p: u32, q: u32) -> Result<Sides, IdentityError> {
    if p < 2 || q < 2 || (p + q) % 2 == 0 {
        return Err(IdentityError::Precondition(format!(
            "need p, q >= 2 and p + q odd, got ({p}, {q})"
        )));
    }
    let one = Root::ONE;
    let t = |k: u32| ti(k, one);
    let z = |k: u32| li(k, one);
    let (pi, qi) = (p as i64, q as i64);
    let lhs = tsum(&[(p, one)], q, one) * 2;
    let mut rhs = t(p) * t(q) * (1 + sign(qi)) + t(p + q);
    for k in 1..=p / 2 {
        let ki = k as i64;
        rhs = rhs
            - t(2 * k) * z(p + q - 2 * k) * (2 * sign(qi) * binom(pi + qi - 2 * ki - 1, qi - 1));
    }
    for k in 1..=q / 2 {
        let ki = k as i64;
        rhs = rhs
            - t(2 * k) * z(p + q - 2 * k) * (2 * sign(qi) * binom(pi + qi - 2 * ki - 1, pi - 1));
    }
    Ok(Sides::new(lhs, rhs))
}

/// The closed form `Σ_{n≥1} ...` of a single `t(k)` in terms of `ζ(k)`, kept
/// here so that callers can rewrite corollary output in `t` alone.
pub fn t_from_zeta(k: u32) -> Expr {
    li(k, Root::ONE) * ((1i64 << k) - 1)
}
