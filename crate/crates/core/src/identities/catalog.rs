//! Named identity families and single-instance checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C;
use serde::{Deserialize, Serialize};

use super::expr::{Atom, Evaluator, Expr};
use super::known::{known_expr, known_series};
use super::report::IdentityReport;
use super::residue::residue_sum_zero_with;
use super::{
    cubic_ones_parity_sides, excluded, general_sides, linear_parity_corollary, linear_parity_sides,
    mtv_relations_sides, quadratic_parity_sides, triple_t_parity_sides, IdentityError, KernelRoute,
    MtvVariant, Sides, TripleRoute,
};
use crate::cyclo::Root;
use crate::numkernel::{CVal, SeriesSpec};
use crate::ratfrac::{KernelVariant, PartialFraction, Pole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    Linear,
    LinearCorollary,
    Quadratic,
    Triple,
    Cubic,
    Mtv,
    GeneralR1,
    GeneralR2,
    Known,
    Residue,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Linear,
        IdentityId::LinearCorollary,
        IdentityId::Quadratic,
        IdentityId::Triple,
        IdentityId::Cubic,
        IdentityId::Mtv,
        IdentityId::GeneralR1,
        IdentityId::GeneralR2,
        IdentityId::Known,
        IdentityId::Residue,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Linear => "linear",
            IdentityId::LinearCorollary => "linear-corollary",
            IdentityId::Quadratic => "quadratic",
            IdentityId::Triple => "triple",
            IdentityId::Cubic => "cubic",
            IdentityId::Mtv => "mtv",
            IdentityId::GeneralR1 => "general-r1",
            IdentityId::GeneralR2 => "general-r2",
            IdentityId::Known => "known",
            IdentityId::Residue => "residue",
        }
    }

    /// Where the statement lives, in words.
    pub fn location(self) -> &'static str {
        match self {
            IdentityId::Linear => "linear parity theorem, Euler T-sums of order one",
            IdentityId::LinearCorollary => {
                "corollary of the linear theorem at x = y = 1, p + q odd"
            }
            IdentityId::Quadratic => "quadratic parity theorem, Euler T-sums of order two",
            IdentityId::Triple => "triple t-value parity, closed (1,2,1) and (2,2,2) cases",
            IdentityId::Cubic => "cubic parity with p1 = p2 = p3 = 1",
            IdentityId::Mtv => "multiple T-values through S̃-sums, depths two and three",
            IdentityId::GeneralR1 => "general rational kernel, special point -1/2",
            IdentityId::GeneralR2 => "general rational kernel, special point 0",
            IdentityId::Known => "closed forms at x = 1 and t(i) = (2^i - 1) ζ(i)",
            IdentityId::Residue => "residue sum of the linear kernel vanishes",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<IdentityId, IdentityError> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| IdentityError::UnknownId(s.to_string()))
    }
}

/// `(id, location)` for every family.
pub fn catalog() -> Vec<(IdentityId, &'static str)> {
    IdentityId::ALL
        .iter()
        .map(|&id| (id, id.location()))
        .collect()
}

/// A partial-fraction kernel in config form: one record per pole, with
/// `coeffs[j-1]` multiplying `1/(s-pole)^j`. Complex numbers are written
/// `"re,im"`; real coefficients may be plain numbers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelSpec {
    pub poles: Vec<PoleSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleSpec {
    pub pole: String,
    pub coeffs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Real(f64),
    Text(String),
}

fn parse_complex(text: &str) -> Result<C, IdentityError> {
    let bad = || IdentityError::Precondition(format!("expected \"re,im\", got {text:?}"));
    let (re, im) = text.split_once(',').ok_or_else(bad)?;
    Ok(C::new(
        re.trim().parse().map_err(|_| bad())?,
        im.trim().parse().map_err(|_| bad())?,
    ))
}

impl Scalar {
    fn value(&self) -> Result<C, IdentityError> {
        match self {
            Scalar::Real(v) => Ok(C::new(*v, 0.0)),
            Scalar::Text(t) => parse_complex(t),
        }
    }
}

impl KernelSpec {
    pub fn to_partial_fraction(&self) -> Result<PartialFraction, IdentityError> {
        let poles = self
            .poles
            .iter()
            .map(|p| {
                Ok(Pole {
                    at: parse_complex(&p.pole)?,
                    coeffs: p
                        .coeffs
                        .iter()
                        .map(Scalar::value)
                        .collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<Vec<_>, IdentityError>>()?;
        Ok(PartialFraction::new(poles))
    }

    /// The inverse of [`KernelSpec::to_partial_fraction`].
    pub fn from_partial_fraction(r: &PartialFraction) -> KernelSpec {
        let text = |c: C| format!("{},{}", c.re, c.im);
        KernelSpec {
            poles: r
                .poles
                .iter()
                .map(|p| PoleSpec {
                    pole: text(p.at),
                    coeffs: p.coeffs.iter().map(|&c| Scalar::Text(text(c))).collect(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.poles {
            for (j, v) in p.coeffs.iter().enumerate() {
                let v = match v {
                    Scalar::Real(r) if *r == 0.0 => continue,
                    Scalar::Real(r) => r.to_string(),
                    Scalar::Text(t) => format!("({t})"),
                };
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{v}/(s - ({}))", p.pole)?;
                if j > 0 {
                    write!(f, "^{}", j + 1)?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// One concrete parameter choice for a family.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Linear {
        p: u32,
        q: u32,
        x: Root,
        y: Root,
    },
    LinearCorollary {
        p: u32,
        q: u32,
    },
    Quadratic {
        p1: u32,
        p2: u32,
        q: u32,
        x: Root,
        x1: Root,
        x2: Root,
    },
    Triple {
        exps: (u32, u32, u32),
        twists: (Root, Root, Root),
        route: TripleRoute,
    },
    Cubic {
        q: u32,
        x: Root,
        xs: [Root; 3],
    },
    Mtv {
        variant: MtvVariant,
        exps: Vec<u32>,
        twists: Vec<Root>,
    },
    General {
        variant: KernelVariant,
        p: u32,
        x: Root,
        y: Root,
        kernel: KernelSpec,
        route: KernelRoute,
    },
    Known {
        name: String,
    },
    Residue {
        p: u32,
        q: u32,
        x: Root,
        y: Root,
        cutoff: u64,
    },
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl Instance {
    pub fn id(&self) -> IdentityId {
        match self {
            Instance::Linear { .. } => IdentityId::Linear,
            Instance::LinearCorollary { .. } => IdentityId::LinearCorollary,
            Instance::Quadratic { .. } => IdentityId::Quadratic,
            Instance::Triple { .. } => IdentityId::Triple,
            Instance::Cubic { .. } => IdentityId::Cubic,
            Instance::Mtv { .. } => IdentityId::Mtv,
            Instance::General {
                variant: KernelVariant::R1,
                ..
            } => IdentityId::GeneralR1,
            Instance::General { .. } => IdentityId::GeneralR2,
            Instance::Known { .. } => IdentityId::Known,
            Instance::Residue { .. } => IdentityId::Residue,
        }
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            m.insert(k.to_string(), v);
        };
        match self {
            Instance::Linear { p, q, x, y } => {
                put("p", p.to_string());
                put("q", q.to_string());
                put("x", x.to_string());
                put("y", y.to_string());
            }
            Instance::LinearCorollary { p, q } => {
                put("p", p.to_string());
                put("q", q.to_string());
            }
            Instance::Quadratic {
                p1,
                p2,
                q,
                x,
                x1,
                x2,
            } => {
                put("p1", p1.to_string());
                put("p2", p2.to_string());
                put("q", q.to_string());
                put("x", x.to_string());
                put("x1", x1.to_string());
                put("x2", x2.to_string());
            }
            Instance::Triple {
                exps,
                twists,
                route,
            } => {
                put("exps", join(&[exps.0, exps.1, exps.2]));
                put("twists", join(&[twists.0, twists.1, twists.2]));
                put("route", format!("{route:?}").to_lowercase());
            }
            Instance::Cubic { q, x, xs } => {
                put("q", q.to_string());
                put("x", x.to_string());
                put("xs", join(xs));
            }
            Instance::Mtv {
                variant,
                exps,
                twists,
            } => {
                put("variant", format!("{variant:?}").to_lowercase());
                put("exps", join(exps));
                put("twists", join(twists));
            }
            Instance::General {
                p,
                x,
                y,
                kernel,
                route,
                ..
            } => {
                put("p", p.to_string());
                put("x", x.to_string());
                put("y", y.to_string());
                put("kernel", kernel.to_string());
                put("route", format!("{route:?}").to_lowercase());
            }
            Instance::Known { name } => put("name", name.clone()),
            Instance::Residue { p, q, x, y, cutoff } => {
                put("p", p.to_string());
                put("q", q.to_string());
                put("x", x.to_string());
                put("y", y.to_string());
                put("cutoff", cutoff.to_string());
            }
        }
        m
    }

    /// Symbolic sides. The residue check has none and returns `Unsupported`.
    pub fn sides(&self) -> Result<Sides, IdentityError> {
        match self {
            Instance::Linear { p, q, x, y } => linear_parity_sides(*p, *q, *x, *y),
            Instance::LinearCorollary { p, q } => linear_parity_corollary(*p, *q),
            Instance::Quadratic {
                p1,
                p2,
                q,
                x,
                x1,
                x2,
            } => quadratic_parity_sides(*p1, *p2, *q, *x, *x1, *x2),
            Instance::Triple {
                exps,
                twists,
                route,
            } => triple_t_parity_sides(*exps, *twists, *route),
            Instance::Cubic { q, x, xs } => cubic_ones_parity_sides(*q, *x, *xs),
            Instance::Mtv {
                variant,
                exps,
                twists,
            } => mtv_relations_sides(*variant, exps, twists),
            Instance::General {
                variant,
                p,
                x,
                y,
                kernel,
                route,
            } => general_sides(*variant, *p, *x, *y, &kernel.to_partial_fraction()?, *route),
            Instance::Known { name } => {
                let spec: SeriesSpec = known_series(name)?
                    .parse()
                    .map_err(|e| IdentityError::Precondition(format!("{e}")))?;
                Ok(Sides::new(
                    Expr::atom(Atom::Series(spec)),
                    known_expr(name)?,
                ))
            }
            Instance::Residue { .. } => Err(IdentityError::Unsupported(
                "the residue check is a single total".into(),
            )),
        }
    }
}

/// Builds, evaluates and judges one instance. `slack` is added to the error
/// budget; divergent instances come back skipped.
pub fn run_instance(inst: &Instance, ev: &Evaluator, slack: f64) -> IdentityReport {
    let id = inst.id().as_str();
    let params = inst.params();
    if let Instance::Residue { p, q, x, y, cutoff } = inst {
        if excluded(*p, *y) || excluded(*q, x.mul(*y)) {
            return IdentityReport::skipped(id, params, "divergent term t̃_1(1)".into());
        }
        return match residue_sum_zero_with(*p, *q, *x, *y, *cutoff, ev) {
            Ok(total) => IdentityReport::checked(id, params, total, CVal::exact(0.0, 0.0), slack),
            Err(e) => IdentityReport::failed(id, params, e.to_string()),
        };
    }
    let sides = match inst.sides() {
        Ok(s) => s,
        Err(IdentityError::DivergentInstance(t)) => {
            return IdentityReport::skipped(id, params, format!("divergent term {t}"))
        }
        Err(e) => return IdentityReport::failed(id, params, e.to_string()),
    };
    match sides.evaluate(ev) {
        Ok((l, r)) => IdentityReport::checked(id, params, l, r, slack),
        Err(e) => IdentityReport::failed(id, params, e.to_string()),
    }
}
