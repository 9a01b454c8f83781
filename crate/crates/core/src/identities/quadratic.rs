//! Quadratic parity for Euler T-sums of order two.

use super::expr::{binom, li, pair, sign, ssum, ti, tsum, Expr};
use super::{excluded, IdentityError, Sides};
use crate::cyclo::Root;

/// The order-two sums `x T_{p1,p2;q}(x1,x2;X⁻¹) + (-1)^{p1+p2+q} T(x1⁻¹,x2⁻¹;X)`,
/// `X = x x1 x2`, against order-one sums and products of depth-one values.
pub fn quadratic_parity_sides(
    p1: u32,
    p2: u32,
    q: u32,
    x: Root,
    x1: Root,
    x2: Root,
) -> Result<Sides, IdentityError> {
    if p1 == 0 || p2 == 0 || q == 0 {
        return Err(IdentityError::Precondition(
            "exponents must be positive".into(),
        ));
    }
    let big = x.mul(x1).mul(x2);
    for (p, r, name) in [
        (p1, x1, "(p1, x1)"),
        (p2, x2, "(p2, x2)"),
        (q, big, "(q, x x1 x2)"),
    ] {
        if excluded(p, r) {
            return Err(IdentityError::DivergentInstance(format!(
                "t̃_1(1) from {name} = (1, 1)"
            )));
        }
    }
    let lhs = tsum(&[(p1, x1), (p2, x2)], q, big.inv()) * x
        + tsum(&[(p1, x1.inv()), (p2, x2.inv())], q, big) * sign((p1 + p2 + q) as i64);
    let rhs = quadratic_rhs(p1, p2, q, x, x1, x2);
    Sides::new(lhs, rhs).check()
}

/// Right-hand side of the quadratic parity relation, without admissibility checks.
pub(crate) fn quadratic_rhs(p1: u32, p2: u32, q: u32, x: Root, x1: Root, x2: Root) -> Expr {
    let big = x.mul(x1).mul(x2);
    let (a1, a2, b) = (p1 as i64, p2 as i64, q as i64);
    let xx1 = x.mul(x1);
    let xx2 = x.mul(x2);

    let mut rhs = tsum(&[(p1, x1)], p2 + q, xx1.inv()) * x
        + tsum(&[(p2, x2)], p1 + q, xx2.inv()) * x
        + ti(p1, x1) * tsum(&[(p2, x2)], q, big.inv()) * x
        + ti(p2, x2) * tsum(&[(p1, x1)], q, big.inv()) * x
        - ti(p1, x1) * tsum(&[(p2, x2.inv())], q, big) * x1.inv() * sign(a2 + b)
        - ti(p2, x2) * tsum(&[(p1, x1.inv())], q, big) * x2.inv() * sign(a1 + b)
        + ti(p1 + p2 + q, x) * sign(a1 + a2 + b)
        - ti(p1, x1) * ti(p2 + q, xx1.inv()) * x
        - ti(p2, x2) * ti(p1 + q, xx2.inv()) * x
        - ti(p1, x1) * ti(p2, x2) * ti(q, big.inv()) * x
        - ti(p1, x1) * ti(p2, x2) * ti(q, big) * x1.mul(x2).inv() * sign(b);

    for m in 0..(p1 + q) {
        let k = p1 + q - 1 - m;
        rhs =
            rhs - li(k + p2, x2) * pair(m, x) * (sign(k as i64) * binom(k as i64 + a2 - 1, a2 - 1));
    }
    for m in 0..(p2 + q) {
        let k = p2 + q - 1 - m;
        rhs =
            rhs - li(k + p1, x1) * pair(m, x) * (sign(k as i64) * binom(k as i64 + a1 - 1, a1 - 1));
    }
    for m in 0..(p1 + p2) {
        let mi = m as i64;
        rhs = rhs
            - pair(m, x)
                * li(p1 + p2 + q - m - 1, big)
                * (sign(b) * binom(a1 + a2 + b - mi - 2, b - 1));
    }
    for m in 0..q {
        for k1 in 0..(q - m) {
            let k2 = q - 1 - m - k1;
            let c = sign((k1 + k2) as i64)
                * binom(k1 as i64 + a1 - 1, a1 - 1)
                * binom(k2 as i64 + a2 - 1, a2 - 1);
            rhs = rhs - li(k1 + p1, x1) * li(k2 + p2, x2) * pair(m, x) * c;
        }
    }
    rhs = rhs + mixed_sum(p1, p2, q, x, x1, big) + mixed_sum(p2, p1, q, x, x2, big);
    rhs
}

/// `-(-1)^q Σ_{m+k≤pb-1} C(k+pa-1,pa-1) C(pb+q-m-k-2,q-1) P_m(x)
///  ((-1)^k Li_{k+pa}(xa) Li_{w}(X) + (-1)^{pa} S_{k+pa;w}(xa⁻¹;X))`, `w = pb+q-m-k-1`.
fn mixed_sum(pa: u32, pb: u32, q: u32, x: Root, xa: Root, big: Root) -> Expr {
    let (a, b, c) = (pa as i64, pb as i64, q as i64);
    let mut out = Expr::zero();
    for m in 0..pb {
        for k in 0..(pb - m) {
            let w = pb + q - m - k - 1;
            let coeff = -sign(c)
                * binom(k as i64 + a - 1, a - 1)
                * binom(b + c - (m + k) as i64 - 2, c - 1);
            if coeff == 0 {
                continue;
            }
            let inner = li(k + pa, xa) * li(w, big) * sign(k as i64)
                + ssum(&[(k + pa, xa.inv())], w, big) * sign(a);
            out = out + pair(m, x) * inner * coeff;
        }
    }
    out
}

/// The closed `(p1, p2, q) = (1, 1, 2)` instance, written out term by term.
pub fn example_112(x: Root, x1: Root, x2: Root) -> Sides {
    let big = x.mul(x1).mul(x2);
    let xi = x.inv();
    let lhs =
        tsum(&[(1, x1), (1, x2)], 2, big.inv()) * x + tsum(&[(1, x1.inv()), (1, x2.inv())], 2, big);
    let br = |k: u32| ti(k, x) - ti(k, xi) * x;
    let bp = |k: u32| ti(k, x) + ti(k, xi) * x;
    let rhs = -(br(3) * (li(1, x1) + li(1, x2)))
        - bp(2) * (li(2, x1) + li(2, x2) - li(2, big) - li(1, x1) * li(1, x2))
        - br(1)
            * (li(3, x1) + li(3, x2) + li(3, big) * 2
                - li(2, x1) * li(1, x2)
                - li(1, x1) * li(2, x2)
                + li(1, x1) * li(2, big)
                + li(1, x2) * li(2, big)
                - ssum(&[(1, x1.inv())], 2, big)
                - ssum(&[(1, x2.inv())], 2, big))
        + tsum(&[(1, x1)], 3, x.mul(x1).inv()) * x
        + tsum(&[(1, x2)], 3, x.mul(x2).inv()) * x
        + ti(1, x1) * tsum(&[(1, x2)], 2, big.inv()) * x
        + ti(1, x2) * tsum(&[(1, x1)], 2, big.inv()) * x
        + ti(1, x1) * tsum(&[(1, x2.inv())], 2, big) * x1.inv()
        + ti(1, x2) * tsum(&[(1, x1.inv())], 2, big) * x2.inv()
        + ti(4, x)
        - ti(1, x1) * ti(3, x.mul(x1).inv()) * x
        - ti(1, x2) * ti(3, x.mul(x2).inv()) * x
        - ti(1, x1) * ti(1, x2) * ti(2, big.inv()) * x
        - ti(1, x1) * ti(1, x2) * ti(2, big) * x1.mul(x2).inv();
    Sides::new(lhs, rhs)
}

/// The closed `(p1, p2, q) = (1, 2, 2)` instance, written out term by term.
pub fn example_122(x: Root, x1: Root, x2: Root) -> Sides {
    let big = x.mul(x1).mul(x2);
    let xi = x.inv();
    let lhs =
        tsum(&[(1, x1), (2, x2)], 2, big.inv()) * x - tsum(&[(1, x1.inv()), (2, x2.inv())], 2, big);
    let br = |k: u32| ti(k, x) - ti(k, xi) * x;
    let bp = |k: u32| ti(k, x) + ti(k, xi) * x;
    let s = |a: u32, b: u32, r: Root| ssum(&[(a, r)], b, big);
    let rhs = tsum(&[(1, x1)], 4, x.mul(x1).inv()) * x
        + tsum(&[(2, x2)], 3, x.mul(x2).inv()) * x
        + ti(1, x1) * tsum(&[(2, x2)], 2, big.inv()) * x
        + ti(2, x2) * tsum(&[(1, x1)], 2, big.inv()) * x
        - ti(1, x1) * tsum(&[(2, x2.inv())], 2, big) * x1.inv()
        + ti(2, x2) * tsum(&[(1, x1.inv())], 2, big) * x2.inv()
        - ti(5, x)
        - ti(1, x1) * ti(4, x.mul(x1).inv()) * x
        - ti(2, x2) * ti(3, x.mul(x2).inv()) * x
        - ti(1, x1) * ti(2, x2) * ti(2, big.inv()) * x
        - ti(1, x1) * ti(2, x2) * ti(2, big) * x1.mul(x2).inv()
        + bp(4) * li(1, x1)
        + br(3) * (li(2, x1) - li(2, x2) - li(2, big))
        + bp(2)
            * (li(3, x1) - li(3, x2) * 2
                + li(3, big) * 2
                + li(1, x1) * li(2, x2)
                + li(1, x1) * li(2, big)
                - s(1, 2, x1.inv()))
        + br(1)
            * (li(4, x1) - li(4, x2) * 3 - li(4, big) * 3
                + li(2, x1) * li(2, x2)
                + li(1, x1) * li(3, x2) * 2
                - li(1, x1) * li(3, big) * 2
                + li(2, x1) * li(2, big)
                - li(2, x2) * li(2, big)
                + s(1, 3, x1.inv()) * 2
                + s(2, 2, x1.inv())
                - s(2, 2, x2.inv()));
    Sides::new(lhs, rhs)
}
