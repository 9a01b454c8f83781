//! Rational kernels in partial-fraction form.
//!
//! A [`PartialFraction`] is `P(s) + Σ_a Σ_j c_{a,j}/(s-a)^j`. Kernels fed to
//! the general theorems must have `P = 0`; the polynomial part exists only
//! so that [`strip_special_pole`] can return `(s-a)^q r(s)` exactly.

use num_complex::Complex64 as C;

const SAME: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Pole {
    pub at: C,
    /// `coeffs[j-1]` multiplies `1/(s-at)^j`.
    pub coeffs: Vec<C>,
}

impl Pole {
    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct PartialFraction {
    pub poles: Vec<Pole>,
    /// `poly[i]` multiplies `s^i`.
    pub poly: Vec<C>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RatFracError {
    #[error("evaluation at the pole {0}")]
    PoleAt(C),
    #[error("expected a pole of order {expected} at {at}, found order {actual}")]
    OrderMismatch { at: C, expected: u32, actual: u32 },
    #[error("pole at {0} is not allowed for this kernel class")]
    ForbiddenPole(C),
    #[error("kernel has a polynomial part and does not decay")]
    NotDecaying,
    #[error("invalid partial fraction: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelVariant {
    /// Special point `-1/2`; no poles at integers or at `-(n+1/2)`, `n ≥ 1`.
    R1,
    /// Special point `0`; no poles at nonzero integers or at `-(n+1/2)`, `n ≥ 0`.
    R2,
}

impl KernelVariant {
    pub fn special_point(self) -> C {
        match self {
            KernelVariant::R1 => C::new(-0.5, 0.0),
            KernelVariant::R2 => C::new(0.0, 0.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelClass {
    pub variant: KernelVariant,
    pub special_order: u32,
}

fn same(a: C, b: C) -> bool {
    (a - b).norm() <= SAME * (1.0 + a.norm())
}

fn binom(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Adds `Σ_k e[k] (s-b)^k` to a polynomial in `s`.
fn add_shifted_poly(poly: &mut Vec<C>, e: &[C], b: C) {
    if poly.len() < e.len() {
        poly.resize(e.len(), C::new(0.0, 0.0));
    }
    for (k, &ek) in e.iter().enumerate() {
        for t in 0..=k {
            poly[t] += ek * binom(k as u32, t as u32) * (-b).powi((k - t) as i32);
        }
    }
}

impl PartialFraction {
    /// Builds a partial fraction, merging repeated locations and dropping
    /// trailing zero coefficients.
    pub fn new(poles: Vec<Pole>) -> PartialFraction {
        let mut pf = PartialFraction::default();
        for p in poles {
            pf.add_pole(p.at, &p.coeffs);
        }
        pf
    }

    /// `c/(s-a)^order`.
    pub fn power(at: C, order: u32, c: C) -> PartialFraction {
        let mut coeffs = vec![C::new(0.0, 0.0); order as usize];
        coeffs[order as usize - 1] = c;
        PartialFraction::new(vec![Pole { at, coeffs }])
    }

    fn add_pole(&mut self, at: C, coeffs: &[C]) {
        let idx = match self.poles.iter().position(|p| same(p.at, at)) {
            Some(i) => i,
            None => {
                self.poles.push(Pole { at, coeffs: vec![] });
                self.poles.len() - 1
            }
        };
        let p = &mut self.poles[idx];
        if p.coeffs.len() < coeffs.len() {
            p.coeffs.resize(coeffs.len(), C::new(0.0, 0.0));
        }
        for (a, b) in p.coeffs.iter_mut().zip(coeffs) {
            *a += b;
        }
        while p.coeffs.last().is_some_and(|c| *c == C::new(0.0, 0.0)) {
            p.coeffs.pop();
        }
        if p.coeffs.is_empty() {
            self.poles.remove(idx);
        }
    }

    pub fn plus(&self, other: &PartialFraction) -> PartialFraction {
        let mut out = self.clone();
        for p in &other.poles {
            out.add_pole(p.at, &p.coeffs);
        }
        if out.poly.len() < other.poly.len() {
            out.poly.resize(other.poly.len(), C::new(0.0, 0.0));
        }
        for (a, b) in out.poly.iter_mut().zip(&other.poly) {
            *a += b;
        }
        out
    }

    pub fn scaled(&self, c: C) -> PartialFraction {
        PartialFraction {
            poles: self
                .poles
                .iter()
                .map(|p| Pole {
                    at: p.at,
                    coeffs: p.coeffs.iter().map(|v| v * c).collect(),
                })
                .collect(),
            poly: self.poly.iter().map(|v| v * c).collect(),
        }
    }

    pub fn has_polynomial_part(&self) -> bool {
        self.poly.iter().any(|c| c.norm() > 0.0)
    }

    /// Order of the pole at `a` (0 if none).
    pub fn order_at(&self, a: C) -> u32 {
        self.poles
            .iter()
            .find(|p| same(p.at, a))
            .map_or(0, |p| p.order())
    }

    pub fn eval(&self, s: C) -> Result<C, RatFracError> {
        let mut total = self
            .poly
            .iter()
            .rev()
            .fold(C::new(0.0, 0.0), |acc, &c| acc * s + c);
        for p in &self.poles {
            let w = s - p.at;
            if w.norm() == 0.0 {
                return Err(RatFracError::PoleAt(p.at));
            }
            let inv = w.inv();
            let mut pw = inv;
            for &c in &p.coeffs {
                total += c * pw;
                pw *= inv;
            }
        }
        Ok(total)
    }

    /// `m`-th derivative in closed form.
    pub fn derivative(&self, m: u32) -> PartialFraction {
        let poles = self
            .poles
            .iter()
            .map(|p| {
                let mut coeffs = vec![C::new(0.0, 0.0); p.coeffs.len() + m as usize];
                for (i, &c) in p.coeffs.iter().enumerate() {
                    let j = i as u32 + 1;
                    let rising: f64 = (0..m).map(|t| (j + t) as f64).product();
                    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                    coeffs[i + m as usize] = c * sign * rising;
                }
                Pole { at: p.at, coeffs }
            })
            .collect();
        let mut poly = self.poly.clone();
        for _ in 0..m {
            poly = poly
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect();
        }
        PartialFraction { poles, poly }
    }

    /// Decomposes `N(s)/Π (s-a)^m` by the cover-up/derivative method.
    /// `numerator[i]` multiplies `s^i`.
    pub fn from_rational(
        numerator: &[C],
        roots: &[(C, u32)],
    ) -> Result<PartialFraction, RatFracError> {
        for (i, (a, _)) in roots.iter().enumerate() {
            if roots[..i].iter().any(|(b, _)| same(*a, *b)) {
                return Err(RatFracError::Invalid("repeated denominator root".into()));
            }
        }
        let mut den = vec![C::new(1.0, 0.0)];
        for &(a, m) in roots {
            for _ in 0..m {
                let mut next = vec![C::new(0.0, 0.0); den.len() + 1];
                for (i, &c) in den.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * a;
                }
                den = next;
            }
        }
        // Polynomial long division for the improper case.
        let mut rem: Vec<C> = numerator.to_vec();
        let dd = den.len() - 1;
        let mut poly = vec![C::new(0.0, 0.0); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let lead = rem.pop().unwrap();
            let shift = rem.len() - dd;
            poly[shift] = lead;
            for (i, &c) in den.iter().take(dd).enumerate() {
                rem[shift + i] -= lead * c;
            }
        }
        let mut pf = PartialFraction {
            poles: vec![],
            poly,
        };
        for (idx, &(a, m)) in roots.iter().enumerate() {
            let m = m as usize;
            // Taylor coefficients of the remainder numerator at a.
            let mut g = vec![C::new(0.0, 0.0); m];
            for (k, gk) in g.iter_mut().enumerate() {
                for (i, &c) in rem.iter().enumerate().skip(k) {
                    *gk += c * binom(i as u32, k as u32) * a.powi((i - k) as i32);
                }
            }
            for (jdx, &(b, mb)) in roots.iter().enumerate() {
                if jdx == idx {
                    continue;
                }
                let d = a - b;
                let series: Vec<C> = (0..m)
                    .map(|l| {
                        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                        d.powi(-(mb as i32) - l as i32) * sign * binom(mb + l as u32 - 1, l as u32)
                    })
                    .collect();
                let mut next = vec![C::new(0.0, 0.0); m];
                for i in 0..m {
                    for j in 0..m - i {
                        next[i + j] += g[i] * series[j];
                    }
                }
                g = next;
            }
            let coeffs: Vec<C> = (1..=m).map(|order| g[m - order]).collect();
            pf.add_pole(a, &coeffs);
        }
        Ok(pf)
    }
}

pub fn pf_eval(r: &PartialFraction, s: C) -> Result<C, RatFracError> {
    r.eval(s)
}

pub fn pf_derivative(r: &PartialFraction, m: u32) -> PartialFraction {
    r.derivative(m)
}

/// `(s-at)^q r(s)`, regular at `at`, as polynomial plus partial fractions.
pub fn strip_special_pole(
    r: &PartialFraction,
    at: C,
    q: u32,
) -> Result<PartialFraction, RatFracError> {
    let actual = r.order_at(at);
    if actual != q {
        return Err(RatFracError::OrderMismatch {
            at,
            expected: q,
            actual,
        });
    }
    let mut out = PartialFraction::default();
    // Polynomial part times (s-at)^q.
    let mut factor = vec![C::new(1.0, 0.0)];
    for _ in 0..q {
        let mut next = vec![C::new(0.0, 0.0); factor.len() + 1];
        for (i, &c) in factor.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * at;
        }
        factor = next;
    }
    let mut poly = vec![C::new(0.0, 0.0); (r.poly.len() + factor.len()).saturating_sub(1)];
    for (i, &a) in r.poly.iter().enumerate() {
        for (j, &b) in factor.iter().enumerate() {
            poly[i + j] += a * b;
        }
    }
    for p in &r.poles {
        if same(p.at, at) {
            let e: Vec<C> = (0..q as usize)
                .map(|k| p.coeffs[q as usize - 1 - k])
                .collect();
            add_shifted_poly(&mut poly, &e, at);
            continue;
        }
        let d = p.at - at;
        let mut pole_part = vec![C::new(0.0, 0.0); p.coeffs.len()];
        let mut shifted = vec![C::new(0.0, 0.0); q as usize + 1];
        for (i0, &c) in p.coeffs.iter().enumerate() {
            let i = i0 + 1;
            for l in 0..=q as usize {
                let v = c * binom(q, l as u32) * d.powi((q as usize - l) as i32);
                if l < i {
                    pole_part[i - l - 1] += v;
                } else {
                    shifted[l - i] += v;
                }
            }
        }
        out.add_pole(p.at, &pole_part);
        add_shifted_poly(&mut poly, &shifted, p.at);
    }
    out.poly = poly;
    Ok(out)
}

fn is_integer(a: C) -> bool {
    a.im.abs() <= SAME && (a.re - a.re.round()).abs() <= SAME * (1.0 + a.re.abs())
}

fn half_integer_index(a: C) -> Option<i64> {
    let shifted = a + 0.5;
    is_integer(shifted).then(|| -(shifted.re.round() as i64))
}

/// Checks the pole restrictions of `variant` and returns the order at the
/// special point.
pub fn validate_kernel(
    r: &PartialFraction,
    variant: KernelVariant,
) -> Result<KernelClass, RatFracError> {
    if r.has_polynomial_part() {
        return Err(RatFracError::NotDecaying);
    }
    for p in &r.poles {
        let n_half = half_integer_index(p.at);
        let forbidden = match variant {
            KernelVariant::R1 => is_integer(p.at) || n_half.is_some_and(|n| n >= 1),
            KernelVariant::R2 => {
                (is_integer(p.at) && p.at.norm() > SAME) || n_half.is_some_and(|n| n >= 0)
            }
        };
        if forbidden {
            return Err(RatFracError::ForbiddenPole(p.at));
        }
    }
    Ok(KernelClass {
        variant,
        special_order: r.order_at(variant.special_point()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn evaluation() {
        let r = PartialFraction::power(c(-0.5, 0.0), 2, c(1.0, 0.0));
        assert!((r.eval(c(1.0, 0.0)).unwrap() - c(4.0 / 9.0, 0.0)).norm() < 1e-15);
        let r = PartialFraction::power(c(2.0, 0.0), 1, c(1.0, 0.0));
        assert_eq!(r.eval(c(2.0, 0.0)), Err(RatFracError::PoleAt(c(2.0, 0.0))));
        let r =
            PartialFraction::from_rational(&[c(1.0, 0.0)], &[(c(0.0, 1.0), 1), (c(0.0, -1.0), 1)])
                .unwrap();
        assert!((r.poles[0].coeffs[0] - c(0.0, -0.5)).norm() < 1e-15);
        assert!((r.eval(c(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn derivatives() {
        let r = PartialFraction::power(c(-0.5, 0.0), 1, c(1.0, 0.0));
        let d2 = r.derivative(2).eval(c(1.0, 0.0)).unwrap();
        assert!((d2 - c(16.0 / 27.0, 0.0)).norm() < 1e-15);
        assert_eq!(r.derivative(0), r);
    }

    #[test]
    fn stripping() {
        let r = PartialFraction::power(c(-0.5, 0.0), 3, c(1.0, 0.0));
        let s = strip_special_pole(&r, c(-0.5, 0.0), 3).unwrap();
        assert!(s.poles.is_empty());
        assert!((s.eval(c(0.3, 0.2)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);

        let r =
            PartialFraction::from_rational(&[c(1.0, 0.0)], &[(c(0.0, 0.0), 2), (c(3.0, 0.0), 1)])
                .unwrap();
        let s = strip_special_pole(&r, c(0.0, 0.0), 2).unwrap();
        assert_eq!(s.poles.len(), 1);
        assert!((s.poles[0].at - c(3.0, 0.0)).norm() < 1e-15);
        assert!((s.poles[0].coeffs[0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(s.poly.iter().all(|v| v.norm() < 1e-14));
        assert!(matches!(
            strip_special_pole(&r, c(0.0, 0.0), 1),
            Err(RatFracError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn kernel_classes() {
        let bad = PartialFraction::power(c(-1.5, 0.0), 1, c(1.0, 0.0));
        assert_eq!(
            validate_kernel(&bad, KernelVariant::R1),
            Err(RatFracError::ForbiddenPole(c(-1.5, 0.0)))
        );
        let r = PartialFraction::power(c(-0.5, 0.0), 3, c(1.0, 0.0));
        assert_eq!(
            validate_kernel(&r, KernelVariant::R1)
                .unwrap()
                .special_order,
            3
        );
        assert!(validate_kernel(&r, KernelVariant::R2).is_err());
        let r = PartialFraction::power(c(0.0, 0.0), 2, c(1.0, 0.0));
        assert_eq!(
            validate_kernel(&r, KernelVariant::R2)
                .unwrap()
                .special_order,
            2
        );
        assert!(validate_kernel(&r, KernelVariant::R1).is_err());
        let mut k = r.clone();
        k.poly = vec![c(1.0, 0.0)];
        assert_eq!(
            validate_kernel(&k, KernelVariant::R2),
            Err(RatFracError::NotDecaying)
        );
    }
}
