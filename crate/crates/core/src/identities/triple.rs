//! Parity of triple t-values, through the order-two T-sum relation.

use num_rational::Rational64;

use super::expr::{li, mtv, sign, ssum, ti, Expr};
use super::quadratic::quadratic_rhs;
use super::{excluded, IdentityError, Sides};
use crate::cyclo::Root;

/// Which right-hand side [`triple_t_parity_sides`] builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TripleRoute {
    /// A closed fixture when one exists, the reduction otherwise.
    #[default]
    Auto,
    /// Only the closed `(1,2,1)` and `(2,2,2)` fixtures.
    Tabulated,
    /// Quadratic relation composed with the reduction and stuffle rewriting.
    Generic,
}

/// `t̃_{p,q,m}(x,y,z) + (-1)^{p+q+m} xyz t̃_{p,q,m}(x⁻¹,y⁻¹,z⁻¹)` against lower depths.
pub fn triple_t_parity_sides(
    (p, q, m): (u32, u32, u32),
    (x, y, z): (Root, Root, Root),
    route: TripleRoute,
) -> Result<Sides, IdentityError> {
    if p == 0 || q == 0 || m == 0 {
        return Err(IdentityError::Precondition(
            "exponents must be positive".into(),
        ));
    }
    for (k, r, name) in [(p, x, "(p, x)"), (q, y, "(q, y)"), (m, z, "(m, z)")] {
        if excluded(k, r) {
            return Err(IdentityError::DivergentInstance(format!(
                "t̃_1(1) from {name} = (1, 1)"
            )));
        }
    }
    let tabulated = match (p, q, m) {
        (1, 2, 1) => Some(fixture_121(x, y, z)),
        (2, 2, 2) => Some(fixture_222(x, y, z)),
        _ => None,
    };
    let sides = match (route, tabulated) {
        (TripleRoute::Generic, _) | (TripleRoute::Auto, None) => generic(p, q, m, x, y, z),
        (_, Some(s)) => s,
        (TripleRoute::Tabulated, None) => {
            return Err(IdentityError::Unsupported(format!(
                "no tabulated triple formula for ({p},{q},{m}) and generic reduction disabled"
            )))
        }
    };
    sides.check()
}

fn lhs(p: u32, q: u32, m: u32, x: Root, y: Root, z: Root) -> Expr {
    let xyz = x.mul(y).mul(z);
    mtv(&[(p, x), (q, y), (m, z)])
        + mtv(&[(p, x.inv()), (q, y.inv()), (m, z.inv())]) * xyz * sign((p + q + m) as i64)
}

/// `-t̃_{p+q,m}(uv,w) + t̃_m(w)(t̃_{p,q}(u,v) + t̃_{p+q}(uv))`, the non-T part of
/// the reduction of `T_{m,p;q}(w,u;v)`.
fn rest(p: u32, q: u32, m: u32, u: Root, v: Root, w: Root) -> Expr {
    let uv = u.mul(v);
    -mtv(&[(p + q, uv), (m, w)]) + ti(m, w) * (mtv(&[(p, u), (q, v)]) + ti(p + q, uv))
}

fn generic(p: u32, q: u32, m: u32, x: Root, y: Root, z: Root) -> Sides {
    let xyz = x.mul(y).mul(z);
    let w = sign((p + q + m) as i64);
    // t̃_{p,q,m}(x,y,z) = -T_{m,p;q}(z,x;y) + rest, and the quadratic relation
    // at (x0, x1, x2) = ((xyz)⁻¹, z, x) pairs T_{m,p;q}(z,x;y) with its mirror.
    let rhs = -(quadratic_rhs(m, p, q, xyz.inv(), z, x) * xyz)
        + rest(p, q, m, x, y, z)
        + rest(p, q, m, x.inv(), y.inv(), z.inv()) * xyz * w;
    Sides::new(lhs(p, q, m, x, y, z), rhs.expand_t_sums())
}

fn fixture_121(x: Root, y: Root, z: Root) -> Sides {
    let big = x.mul(y).mul(z);
    let (xi, yi, zi) = (x.inv(), y.inv(), z.inv());
    let xy = x.mul(y);
    let yz = y.mul(z);
    let xm = |k: u32| ti(k, big.inv()) * big - ti(k, big);
    let xp = |k: u32| ti(k, big.inv()) * big + ti(k, big);
    let t2 = |a: u32, b: u32, r: Root, s: Root| mtv(&[(a, r), (b, s)]);
    let rhs = xm(3) * (li(1, x) + li(1, z))
        + xp(2) * (li(2, x) + li(2, z) - li(2, yi) - li(1, x) * li(1, z))
        + xm(1)
            * (li(3, x) + li(3, z) + li(3, yi) * 2 - li(1, x) * li(2, z) - li(1, z) * li(2, x)
                + li(1, z) * li(2, yi)
                + li(1, x) * li(2, yi)
                - ssum(&[(1, zi)], 2, yi)
                - ssum(&[(1, xi)], 2, yi))
        - t2(1, 3, z, xy)
        - t2(1, 3, x, yz)
        - t2(3, 1, xy, z)
        - ti(4, big) * 2
        // With t̃_{2,1} here and in the z⁻¹ product below the residual is O(1); the exponent
        // order (p,q) = (1,2) is what makes the identity hold.
        - ti(1, x) * t2(1, 2, z, y)
        - ti(1, z) * t2(1, 2, xi, yi) * xy
        + ti(1, z) * ti(3, xy)
        - ti(1, z) * ti(3, xy.inv()) * xy
        - ti(1, x) * t2(1, 2, zi, yi) * yz
        - ti(1, x) * ti(3, yz.inv()) * yz
        - ti(4, big.inv()) * big
        + ti(1, x) * ti(1, z) * ti(2, y)
        + ti(1, x) * ti(1, z) * ti(2, yi) * y
        - t2(3, 1, xy.inv(), zi) * big
        + ti(1, zi) * t2(1, 2, xi, yi) * big
        + ti(1, zi) * ti(3, xy.inv()) * big;
    Sides::new(lhs(1, 2, 1, x, y, z), rhs)
}

fn fixture_222(x: Root, y: Root, z: Root) -> Sides {
    let big = x.mul(y).mul(z);
    let (xi, yi, zi) = (x.inv(), y.inv(), z.inv());
    let xy = x.mul(y);
    let yz = y.mul(z);
    let xm = |k: u32| ti(k, big.inv()) * big - ti(k, big);
    let xp = |k: u32| ti(k, big.inv()) * big + ti(k, big);
    let t2 = |a: u32, b: u32, r: Root, s: Root| mtv(&[(a, r), (b, s)]);
    let s = |a: u32, b: u32, r: Root| ssum(&[(a, r)], b, yi);
    let rhs = -(xp(4) * (li(2, x) + li(2, z) + li(2, yi)))
        - xm(3) * (li(3, x) * 2 + li(3, z) * 2 - li(3, yi) * 2)
        - xp(2)
            * (li(4, x) * 3
                + li(4, z) * 3
                + li(4, yi) * 3
                + li(2, z) * li(2, x)
                + li(2, z) * li(2, yi)
                + li(2, x) * li(2, yi)
                + s(2, 2, zi)
                + s(2, 2, xi))
        - xm(1)
            * (li(5, x) * 4 + li(5, z) * 4 - li(5, yi) * 4
                + li(3, z) * li(2, x) * 2
                + li(2, z) * li(3, x) * 2
                - li(2, z) * li(3, yi) * 2
                + li(3, z) * li(2, yi) * 2
                - li(2, x) * li(3, yi) * 2
                + li(3, x) * li(2, yi) * 2
                - s(2, 3, zi) * 2
                - s(3, 2, zi) * 2
                - s(2, 3, xi) * 2
                - s(3, 2, xi) * 2)
        - t2(4, 2, xy, z)
        - t2(2, 4, x, yz)
        + ti(2, z) * ti(4, xy)
        - t2(4, 2, xy.inv(), zi) * big
        + ti(2, zi) * t2(2, 2, xi, yi) * big
        + ti(2, zi) * ti(4, xy.inv()) * big
        - t2(2, 4, z, xy)
        - ti(6, big) * 2
        - ti(2, x) * t2(2, 2, z, y)
        + ti(2, z) * t2(2, 2, xi, yi) * xy
        + ti(2, z) * ti(4, xy.inv()) * xy
        + ti(2, x) * t2(2, 2, zi, yi) * yz
        + ti(2, x) * ti(4, yz.inv()) * yz
        - ti(6, big.inv()) * big
        + ti(2, x) * ti(2, y) * ti(2, z)
        + ti(2, x) * ti(2, yi) * ti(2, z) * y;
    Sides::new(lhs(2, 2, 2, x, y, z), rhs)
}

/// `t(2,2,2)` against its closed reduction at trivial twists.
pub fn t222_reduction() -> Sides {
    let one = Root::ONE;
    let t = |k: u32| ti(k, one);
    let r = |n: i64, d: i64| Rational64::new(n, d);
    let rhs = (t(2) * t(2) * t(2)).scale(r(5, 9))
        + t(2) * mtv(&[(2, one), (2, one)])
        + (t(2) * t(4)).scale(r(1, 3))
        - mtv(&[(2, one), (4, one)])
        - mtv(&[(4, one), (2, one)])
        - t(6).scale(r(3, 2));
    Sides::new(mtv(&[(2, one), (2, one), (2, one)]), rhs)
}
