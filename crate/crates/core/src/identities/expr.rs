//! Symbolic linear combinations of products of series values.
//!
//! Coefficients are exact rationals times an exact root of unity, with an
//! optional floating scalar for kernel-derived data. Terms are kept in a
//! canonical order and merged, so two expressions that differ only by
//! rearrangement compare equal.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_complex::Complex64 as C;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::cyclo::Root;
use crate::numkernel::spec::pretty_root;
use crate::numkernel::{
    self, euler_product_sum, nested_sum, CVal, Comp, Cx, EvalOptions, Family, NumError, SeriesSpec,
    Weight,
};
use crate::quasishuffle::stuffle_expand;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Series(SeriesSpec),
    /// Constant-term value of a logarithmically divergent series.
    Regularized(SeriesSpec),
    /// `(-1)^m t̃_{m+1}(x) - x t̃_{m+1}(x⁻¹)`.
    Pair {
        m: u32,
        x: Root,
    },
    /// `(-1)^m Li_{m+1}(x) - Li_{m+1}(x⁻¹)`.
    LiPair {
        m: u32,
        x: Root,
    },
    /// `Σ_{0<n₁<…<n_r} Π w_j(n_j)`.
    Nested(Vec<Weight>),
    /// `Σ_n Π_j (Σ_{m≤n} f_j(m)) g(n)`.
    EulerProduct {
        factors: Vec<Weight>,
        outer: Weight,
    },
    /// `Φ(s;x)`.
    BigPhi {
        s: Cx,
        x: Root,
    },
    /// `φ^{(m)}(s;x)`.
    PhiDeriv {
        m: u32,
        s: Cx,
        x: Root,
    },
}

impl Atom {
    /// Whether the atom names a divergent series.
    pub fn is_divergent(&self) -> bool {
        match self {
            Atom::Series(s) => !s.is_admissible(),
            Atom::PhiDeriv { m: 0, x, .. } => x.is_one(),
            _ => false,
        }
    }

    pub fn pretty(&self) -> String {
        match self {
            Atom::Series(s) => s.pretty(),
            Atom::Regularized(s) => format!("reg {}", s.pretty()),
            Atom::Pair { m, x } => format!("P_{m}({})", pretty_root(*x)),
            Atom::LiPair { m, x } => format!("LP_{m}({})", pretty_root(*x)),
            Atom::Nested(ws) => format!("nested[{}]", ws.len()),
            Atom::EulerProduct { factors, .. } => format!("euler[{}]", factors.len()),
            Atom::BigPhi { s, x } => format!("Phi({};{})", fmt_c(s.get()), pretty_root(*x)),
            Atom::PhiDeriv { m, s, x } => {
                format!("phi^({m})({};{})", fmt_c(s.get()), pretty_root(*x))
            }
        }
    }

    fn conj(&self) -> Atom {
        match self {
            Atom::Series(s) => Atom::Series(s.conj()),
            Atom::Regularized(s) => Atom::Regularized(s.conj()),
            Atom::Pair { m, x } => Atom::Pair { m: *m, x: x.inv() },
            Atom::LiPair { m, x } => Atom::LiPair { m: *m, x: x.inv() },
            Atom::Nested(ws) => Atom::Nested(ws.iter().map(Weight::conj).collect()),
            Atom::EulerProduct { factors, outer } => Atom::EulerProduct {
                factors: factors.iter().map(Weight::conj).collect(),
                outer: outer.conj(),
            },
            Atom::BigPhi { s, x } => Atom::BigPhi {
                s: Cx::new(s.get().conj()),
                x: x.inv(),
            },
            Atom::PhiDeriv { m, s, x } => Atom::PhiDeriv {
                m: *m,
                s: Cx::new(s.get().conj()),
                x: x.inv(),
            },
        }
    }
}

fn fmt_c(z: C) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational64,
    /// Exact phase, normalised to an angle in `[0, π)`.
    pub phase: Root,
    pub scalar: Cx,
    pub atoms: Vec<Atom>,
}

impl Term {
    fn normalize(mut self) -> Term {
        self.atoms.sort();
        if self.phase.turns() >= 0.5 {
            self.phase = self.phase.mul(Root::MINUS_ONE);
            self.coeff = -self.coeff;
        }
        self
    }

    fn key(&self) -> (&[Atom], Root, Cx) {
        (&self.atoms, self.phase, self.scalar)
    }

    fn is_zero(&self) -> bool {
        self.coeff.is_zero() || self.scalar.get() == C::new(0.0, 0.0)
    }

    /// The exact numeric prefactor `coeff · phase · scalar`.
    pub fn prefactor(&self) -> C {
        let c = *self.coeff.numer() as f64 / *self.coeff.denom() as f64;
        self.phase.complex() * self.scalar.get() * c
    }
}

/// Canonical sum of [`Term`]s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Expr {
    terms: Vec<Term>,
}

fn one_cx() -> Cx {
    Cx::real(1.0)
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::default()
    }

    pub fn constant(c: Rational64) -> Expr {
        Expr::from_terms(vec![Term {
            coeff: c,
            phase: Root::ONE,
            scalar: one_cx(),
            atoms: vec![],
        }])
    }

    pub fn int(n: i64) -> Expr {
        Expr::constant(Rational64::from_integer(n))
    }

    pub fn root(x: Root) -> Expr {
        Expr::from_terms(vec![Term {
            coeff: Rational64::one(),
            phase: x,
            scalar: one_cx(),
            atoms: vec![],
        }])
    }

    pub fn scalar(z: C) -> Expr {
        Expr::from_terms(vec![Term {
            coeff: Rational64::one(),
            phase: Root::ONE,
            scalar: Cx::new(z),
            atoms: vec![],
        }])
    }

    pub fn atom(a: Atom) -> Expr {
        Expr::from_terms(vec![Term {
            coeff: Rational64::one(),
            phase: Root::ONE,
            scalar: one_cx(),
            atoms: vec![a],
        }])
    }

    pub fn from_terms(terms: Vec<Term>) -> Expr {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(Term::normalize)
            .filter(|t| !t.is_zero())
            .collect();
        terms.sort_by(|a, b| a.key().cmp(&b.key()));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.key() == t.key() => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.is_zero());
        Expr { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: Rational64) -> Expr {
        self.clone() * Expr::constant(c)
    }

    /// First divergent atom that survives cancellation.
    pub fn divergent_atom(&self) -> Option<&Atom> {
        self.terms
            .iter()
            .flat_map(|t| t.atoms.iter())
            .find(|a| a.is_divergent())
    }

    /// Distinct atoms, in canonical order.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut v: Vec<Atom> = self
            .terms
            .iter()
            .flat_map(|t| t.atoms.iter().cloned())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Occurrences of atoms satisfying `pred`, counted over terms.
    pub fn count_atoms(&self, pred: impl Fn(&Atom) -> bool) -> usize {
        self.terms
            .iter()
            .flat_map(|t| t.atoms.iter())
            .filter(|a| pred(a))
            .count()
    }

    /// Complex conjugate expression (all twists inverted).
    pub fn conj(&self) -> Expr {
        Expr::from_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    phase: t.phase.inv(),
                    scalar: Cx::new(t.scalar.get().conj()),
                    atoms: t.atoms.iter().map(Atom::conj).collect(),
                })
                .collect(),
        )
    }

    /// Rewrites each bracket atom in terms of its two depth-one values.
    pub fn expand_pairs(&self) -> Expr {
        self.map_atoms(|a| match a {
            Atom::Pair { m, x } => Some(ti(m + 1, *x) * sign(*m as i64) - ti(m + 1, x.inv()) * *x),
            Atom::LiPair { m, x } => Some(li(m + 1, *x) * sign(*m as i64) - li(m + 1, x.inv())),
            _ => None,
        })
    }

    /// Substitutes atoms for which `f` returns a replacement.
    pub fn map_atoms(&self, f: impl Fn(&Atom) -> Option<Expr>) -> Expr {
        let mut out = Expr::zero();
        for t in &self.terms {
            let mut prod = Expr::from_terms(vec![Term {
                atoms: vec![],
                ..t.clone()
            }]);
            for a in &t.atoms {
                prod = prod * f(a).unwrap_or_else(|| Expr::atom(a.clone()));
            }
            out = out + prod;
        }
        out
    }

    /// Replaces every T-sum atom by its stuffle expansion.
    pub fn expand_t_sums(&self) -> Expr {
        self.map_atoms(|a| match a {
            Atom::Series(s) if s.family == Family::TSum => {
                let (q, x) = s.outer.unwrap();
                let fs = stuffle_expand(&s.inner, q, x);
                Some(
                    fs.terms
                        .iter()
                        .map(|t| {
                            let parts: Vec<(u32, Root)> = t
                                .exponents
                                .iter()
                                .copied()
                                .zip(t.twists.iter().copied())
                                .collect();
                            mtv(&parts) * t.coeff
                        })
                        .sum(),
                )
            }
            _ => None,
        })
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, o: Expr) -> Expr {
        let mut terms = self.terms;
        terms.extend(o.terms);
        Expr::from_terms(terms)
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, o: Expr) -> Expr {
        self + (-o)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr {
            terms: self
                .terms
                .into_iter()
                .map(|t| Term {
                    coeff: -t.coeff,
                    ..t
                })
                .collect(),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, o: Expr) -> Expr {
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for a in &self.terms {
            for b in &o.terms {
                let mut atoms = a.atoms.clone();
                atoms.extend(b.atoms.iter().cloned());
                terms.push(Term {
                    coeff: a.coeff * b.coeff,
                    phase: a.phase.mul(b.phase),
                    scalar: Cx::new(a.scalar.get() * b.scalar.get()),
                    atoms,
                });
            }
        }
        Expr::from_terms(terms)
    }
}

impl Mul<i64> for Expr {
    type Output = Expr;
    fn mul(self, k: i64) -> Expr {
        self * Expr::int(k)
    }
}

impl Mul<Root> for Expr {
    type Output = Expr;
    fn mul(self, x: Root) -> Expr {
        self * Expr::root(x)
    }
}

impl std::iter::Sum for Expr {
    fn sum<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        let terms = iter.flat_map(|e| e.terms).collect();
        Expr::from_terms(terms)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            let c = t.coeff.abs();
            if !c.is_one() || (t.atoms.is_empty() && t.phase.is_one() && t.scalar == one_cx()) {
                parts.push(c.to_string());
            }
            if !t.phase.is_one() {
                parts.push(pretty_root(t.phase));
            }
            if t.scalar != one_cx() {
                parts.push(format!("({})", fmt_c(t.scalar.get())));
            }
            parts.extend(t.atoms.iter().map(Atom::pretty));
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

// Builders.

pub fn ti(p: u32, x: Root) -> Expr {
    Expr::atom(Atom::Series(SeriesSpec::t_polylog(p, x)))
}

pub fn li(p: u32, x: Root) -> Expr {
    Expr::atom(Atom::Series(SeriesSpec::polylog(p, x)))
}

fn comp(parts: &[(u32, Root)]) -> Comp {
    Comp::new(parts.to_vec())
}

/// `T_{p…;q}(x…;x)`; the empty T-sum is `t̃_q(x)`.
pub fn tsum(inner: &[(u32, Root)], q: u32, x: Root) -> Expr {
    if inner.is_empty() {
        return ti(q, x);
    }
    Expr::atom(Atom::Series(SeriesSpec::t_sum(comp(inner), q, x)))
}

/// `S_{p…;q}(x…;x)`; the empty S-sum is `Li_q(x)`.
pub fn ssum(inner: &[(u32, Root)], q: u32, x: Root) -> Expr {
    if inner.is_empty() {
        return li(q, x);
    }
    Expr::atom(Atom::Series(SeriesSpec::s_sum(comp(inner), q, x)))
}

pub fn stsum(inner: &[(u32, Root)], q: u32, x: Root) -> Expr {
    Expr::atom(Atom::Series(SeriesSpec::st_sum(comp(inner), q, x)))
}

/// Multiple t-value; depth one is `t̃_k(x)`.
pub fn mtv(parts: &[(u32, Root)]) -> Expr {
    if let [(k, x)] = parts {
        return ti(*k, *x);
    }
    Expr::atom(Atom::Series(SeriesSpec::mtv(comp(parts))))
}

pub fn mzv(parts: &[(u32, Root)]) -> Expr {
    if let [(k, x)] = parts {
        return li(*k, *x);
    }
    Expr::atom(Atom::Series(SeriesSpec::mzv(comp(parts))))
}

pub fn big_mtv(parts: &[(u32, Root)]) -> Expr {
    Expr::atom(Atom::Series(SeriesSpec::big_mtv(comp(parts))))
}

/// The bracket `(-1)^m t̃_{m+1}(x) - x t̃_{m+1}(x⁻¹)`; exactly zero at `m = 0, x = 1`.
pub fn pair(m: u32, x: Root) -> Expr {
    if m == 0 && x.is_one() {
        return Expr::zero();
    }
    Expr::atom(Atom::Pair { m, x })
}

/// `(-1)^m Li_{m+1}(x) - Li_{m+1}(x⁻¹)`; exactly zero at `m = 0, x = 1`.
pub fn li_pair(m: u32, x: Root) -> Expr {
    if m == 0 && x.is_one() {
        return Expr::zero();
    }
    Expr::atom(Atom::LiPair { m, x })
}

/// `(-1)^n`.
pub fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Exact binomial coefficient; zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

// Evaluation.

/// Evaluates atoms once and reuses them across expressions and threads.
pub struct Evaluator {
    opts: EvalOptions,
    cache: Mutex<HashMap<Atom, Result<CVal, NumError>>>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new(EvalOptions::default())
    }
}

impl Evaluator {
    pub fn new(opts: EvalOptions) -> Evaluator {
        Evaluator {
            opts,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn options(&self) -> &EvalOptions {
        &self.opts
    }

    pub fn atom(&self, a: &Atom) -> Result<CVal, NumError> {
        if let Some(v) = self.cache.lock().unwrap().get(a) {
            return v.clone();
        }
        let v = self.compute(a);
        self.cache.lock().unwrap().insert(a.clone(), v.clone());
        v
    }

    fn compute(&self, a: &Atom) -> Result<CVal, NumError> {
        let opts = &self.opts;
        match a {
            Atom::Series(s) => numkernel::evaluate(s, opts).map(|e| e.value),
            Atom::Regularized(s) => {
                let reg = EvalOptions {
                    regularize: true,
                    ..opts.clone()
                };
                numkernel::evaluate(s, &reg).map(|e| e.value)
            }
            Atom::Pair { m, x } => {
                let a = self.atom(&Atom::Series(SeriesSpec::t_polylog(m + 1, *x)))?;
                let b = self.atom(&Atom::Series(SeriesSpec::t_polylog(m + 1, x.inv())))?;
                Ok(a.scale(C::new(sign(*m as i64) as f64, 0.0)) - b.scale(x.complex()))
            }
            Atom::LiPair { m, x } => {
                let a = self.atom(&Atom::Series(SeriesSpec::polylog(m + 1, *x)))?;
                let b = self.atom(&Atom::Series(SeriesSpec::polylog(m + 1, x.inv())))?;
                Ok(a.scale(C::new(sign(*m as i64) as f64, 0.0)) - b)
            }
            Atom::Nested(ws) => nested_sum(ws, opts, "nested kernel sum").map(|e| e.value),
            Atom::EulerProduct { factors, outer } => {
                euler_product_sum(factors, outer, opts, "kernel Euler sum").map(|e| e.value)
            }
            Atom::BigPhi { s, x } => numkernel::Phi_big_with(s.get(), *x, opts),
            Atom::PhiDeriv { m, s, x } => numkernel::phi_deriv_with(*m, s.get(), *x, opts),
        }
    }

    pub fn expr(&self, e: &Expr) -> Result<CVal, NumError> {
        let mut total = CVal::ZERO;
        for t in &e.terms {
            let mut v = CVal::ONE;
            for a in &t.atoms {
                v = v * self.atom(a)?;
            }
            total = total + v.scale(t.prefactor());
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merging_and_cancellation() {
        let x = Root::I;
        let e = ti(2, x) * Expr::int(3) - ti(2, x) * Expr::int(3);
        assert!(e.is_zero());
        let e = ti(2, x) * Root::MINUS_ONE + ti(2, x);
        assert!(e.is_zero());
        assert!(pair(0, Root::ONE).is_zero());
        let d = ti(1, Root::ONE) * li(2, x) - li(2, x) * ti(1, Root::ONE);
        assert!(d.divergent_atom().is_none());
        assert!((ti(1, Root::ONE) * Expr::int(2)).divergent_atom().is_some());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(30, 15), 155117520);
    }
}
