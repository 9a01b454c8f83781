//! Closed forms for a handful of values at trivial twists.

use num_rational::Rational64;

use super::expr::{Evaluator, Expr};
use super::linear::t_from_zeta;
use super::IdentityError;
use crate::numkernel::CVal;

/// Identifiers accepted by [`known_value`].
pub fn known_ids() -> Vec<String> {
    let mut ids: Vec<String> = ["T23", "T32", "T34", "T43", "T25", "T52", "t222"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    ids.extend((2..=8).map(|p| format!("t-single-{p}")));
    ids
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Closed form written over `ζ(k) = Li_k(1)`, with `t(k) = (2^k - 1) ζ(k)`.
pub fn known_expr(id: &str) -> Result<Expr, IdentityError> {
    let t = t_from_zeta;
    let half = r(1, 2);
    let e = match id {
        "T23" => t(5).scale(half) + (t(2) * t(3)).scale(r(3, 7)),
        "T32" => t(5).scale(half) + (t(2) * t(3)).scale(r(4, 7)),
        "T34" => t(7).scale(half) + (t(3) * t(4)).scale(r(6, 7)) - (t(2) * t(5)).scale(r(10, 31)),
        "T43" => t(7).scale(half) + (t(3) * t(4)).scale(r(1, 7)) + (t(2) * t(5)).scale(r(10, 31)),
        "T25" => t(7).scale(half) + (t(2) * t(5)).scale(r(5, 31)) + (t(3) * t(4)).scale(r(2, 7)),
        "T52" => t(7).scale(half) + (t(2) * t(5)).scale(r(26, 31)) - (t(3) * t(4)).scale(r(2, 7)),
        "t222" => t(6).scale(r(1, 48)),
        _ => match id
            .strip_prefix("t-single-")
            .and_then(|p| p.parse::<u32>().ok())
        {
            Some(p) if (2..=8).contains(&p) => t(p),
            _ => return Err(IdentityError::UnknownId(id.to_string())),
        },
    };
    Ok(e)
}

pub fn known_value(id: &str) -> Result<CVal, IdentityError> {
    Ok(Evaluator::default().expr(&known_expr(id)?)?)
}

/// The series each known value closes, in the series grammar.
pub fn known_series(id: &str) -> Result<String, IdentityError> {
    let s = match id {
        "T23" => "T[2;3](0/1;0/1)".to_string(),
        "T32" => "T[3;2](0/1;0/1)".to_string(),
        "T34" => "T[3;4](0/1;0/1)".to_string(),
        "T43" => "T[4;3](0/1;0/1)".to_string(),
        "T25" => "T[2;5](0/1;0/1)".to_string(),
        "T52" => "T[5;2](0/1;0/1)".to_string(),
        "t222" => "t[2,2,2](0/1,0/1,0/1)".to_string(),
        _ => {
            known_expr(id)?;
            format!("ti[{}](0/1)", &id["t-single-".len()..])
        }
    };
    Ok(s)
}
