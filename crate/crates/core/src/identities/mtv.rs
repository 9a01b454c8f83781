//! Multiple T-values of depth two and three as S̃-sums.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::expr::{big_mtv, stsum, ti, Atom, Expr};
use super::{excluded, IdentityError, Sides};
use crate::cyclo::Root;
use crate::numkernel::{Comp, SeriesSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MtvVariant {
    Depth2,
    Depth3,
}

fn pow2_inv(e: u32) -> Rational64 {
    Rational64::new(1, 1i64 << e)
}

/// `T̃_{p,q}(x,y) = y/2^{p+q-2} S̃_{p;q}(x;y)` or the depth-three analogue
/// `T̃_{p,q,r}(x,y,z) = yz/2^{p+q+r-3} (t̃_r(z) S̃_{p;q}(x;y) - S̃_{p,r;q}(x,z;y))`.
///
/// At `(q, y) = (1, 1)` the two depth-three S̃-sums diverge individually while
/// their combination converges; both are then replaced by their regularized
/// constant terms, which cancel the divergent parts consistently.
pub fn mtv_relations_sides(
    variant: MtvVariant,
    exps: &[u32],
    twists: &[Root],
) -> Result<Sides, IdentityError> {
    let depth = match variant {
        MtvVariant::Depth2 => 2,
        MtvVariant::Depth3 => 3,
    };
    if exps.len() != depth || twists.len() != depth || exps.contains(&0) {
        return Err(IdentityError::Precondition(format!(
            "{variant:?} needs {depth} positive exponents and twists"
        )));
    }
    let last = depth - 1;
    if excluded(exps[last], twists[last]) {
        return Err(IdentityError::DivergentInstance(format!(
            "T̃ with last entry (1, 1): {}",
            SeriesSpec::big_mtv(Comp::from_slices(exps, twists)).pretty()
        )));
    }
    let lhs = big_mtv(
        &exps
            .iter()
            .copied()
            .zip(twists.iter().copied())
            .collect::<Vec<_>>(),
    );
    let (p, q, x, y) = (exps[0], exps[1], twists[0], twists[1]);
    let rhs = match variant {
        MtvVariant::Depth2 => (stsum(&[(p, x)], q, y) * y).scale(pow2_inv(p + q - 2)),
        MtvVariant::Depth3 => {
            let (r, z) = (exps[2], twists[2]);
            let st = |inner: &[(u32, Root)]| {
                if excluded(q, y) {
                    Expr::atom(Atom::Regularized(SeriesSpec::st_sum(
                        Comp::new(inner.to_vec()),
                        q,
                        y,
                    )))
                } else {
                    stsum(inner, q, y)
                }
            };
            ((ti(r, z) * st(&[(p, x)]) - st(&[(p, x), (r, z)])) * y.mul(z))
                .scale(pow2_inv(p + q + r - 3))
        }
    };
    Sides::new(lhs, rhs).check()
}
