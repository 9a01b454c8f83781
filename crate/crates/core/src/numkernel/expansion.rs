//! Asymptotic expansions of twisted sequences and their exact tails.
//!
//! A sequence `a(n)` whose twist has period `L` is stored, for each residue
//! class `ρ = n mod L`, as
//!
//! ```text
//! a(n) ~ Σ_d Σ_k c[ρ][d][k] (ln n)^d n^{-k},   k ≤ order
//! ```
//!
//! Tails `Σ_{m>n} a(m)` are computed class by class with Euler–Maclaurin at
//! step `L` and re-expanded around `n`, so nested tails compose without
//! numerical summation.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64 as C;

use super::weight::Weight;

type Series = Vec<C>;

#[derive(Clone, Debug)]
pub(crate) struct Expansion {
    period: usize,
    order: usize,
    classes: Vec<Vec<Series>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum TailMode {
    /// Fails unless the tail converges.
    Strict,
    /// Logarithmic divergence is kept as powers of `ln n`; the result is the
    /// tail in the constant-term regularisation.
    Regularized,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Divergent;

const ZERO: C = C { re: 0.0, im: 0.0 };

fn zero_series(order: usize) -> Series {
    vec![ZERO; order + 1]
}

fn series_mul_acc(out: &mut Series, a: &Series, b: &Series) {
    let k = out.len() - 1;
    for (i, &ai) in a.iter().enumerate() {
        if ai == ZERO {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(k + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
}

fn is_zero(s: &Series) -> bool {
    s.iter().all(|c| *c == ZERO)
}

/// `u^k (1 + δu)^{-k}`.
fn inv_pow_series(delta: C, k: u32, order: usize) -> Series {
    let mut s = zero_series(order);
    let mut c = C::new(1.0, 0.0);
    for i in 0..=order {
        let idx = i + k as usize;
        if idx > order {
            break;
        }
        s[idx] = c;
        c *= -delta * ((k as usize + i) as f64) / ((i + 1) as f64);
    }
    s
}

/// `B_{2i}/(2i)!`.
fn bernoulli_ratio(i: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0..64)
            .map(|i| {
                if i == 0 {
                    return 1.0;
                }
                let s = 2 * i as i32;
                let zeta = match i {
                    1 => PI * PI / 6.0,
                    2 => PI.powi(4) / 90.0,
                    _ => {
                        let head: f64 = (1..=2000).rev().map(|k| (k as f64).powi(-s)).sum();
                        head + 2000f64.powi(1 - s) / (s - 1) as f64
                    }
                };
                let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
                sign * 2.0 * zeta * (2.0 * PI).powi(-s)
            })
            .collect()
    });
    table[i]
}

impl Expansion {
    pub(crate) fn constant(period: usize, order: usize, c: C) -> Expansion {
        let mut s = zero_series(order);
        s[0] = c;
        Expansion {
            period,
            order,
            classes: vec![vec![s]; period],
        }
    }

    pub(crate) fn from_weight(w: &Weight, period: usize, order: usize) -> Expansion {
        let mut classes = Vec::with_capacity(period);
        for rho in 0..period {
            let mut total = zero_series(order);
            for t in &w.terms {
                let mut s = zero_series(order);
                s[0] = t.coeff.get() * t.twist.pow(rho as i64).complex();
                for f in &t.factors {
                    let mut next = zero_series(order);
                    series_mul_acc(
                        &mut next,
                        &s,
                        &inv_pow_series(f.shift.get(), f.power, order),
                    );
                    s = next;
                }
                for (a, b) in total.iter_mut().zip(&s) {
                    *a += b;
                }
            }
            classes.push(vec![total]);
        }
        Expansion {
            period,
            order,
            classes,
        }
    }

    fn degree(&self) -> usize {
        self.classes.iter().map(|c| c.len()).max().unwrap_or(1) - 1
    }

    pub(crate) fn mul(&self, other: &Expansion) -> Expansion {
        debug_assert_eq!(self.period, other.period);
        let classes = self
            .classes
            .iter()
            .zip(&other.classes)
            .map(|(a, b)| {
                let mut out = vec![zero_series(self.order); a.len() + b.len() - 1];
                for (d1, sa) in a.iter().enumerate() {
                    if is_zero(sa) {
                        continue;
                    }
                    for (d2, sb) in b.iter().enumerate() {
                        series_mul_acc(&mut out[d1 + d2], sa, sb);
                    }
                }
                out
            })
            .collect();
        Expansion {
            period: self.period,
            order: self.order,
            classes,
        }
    }

    fn combine(&self, other: &Expansion, sign: f64) -> Expansion {
        let classes = self
            .classes
            .iter()
            .zip(&other.classes)
            .map(|(a, b)| {
                let mut out = vec![zero_series(self.order); a.len().max(b.len())];
                for (d, s) in a.iter().enumerate() {
                    for (o, v) in out[d].iter_mut().zip(s) {
                        *o += v;
                    }
                }
                for (d, s) in b.iter().enumerate() {
                    for (o, v) in out[d].iter_mut().zip(s) {
                        *o += v * sign;
                    }
                }
                out
            })
            .collect();
        Expansion {
            period: self.period,
            order: self.order,
            classes,
        }
    }

    pub(crate) fn sub(&self, other: &Expansion) -> Expansion {
        self.combine(other, -1.0)
    }

    pub(crate) fn eval(&self, n: u64) -> C {
        let cls = &self.classes[(n % self.period as u64) as usize];
        let u = 1.0 / n as f64;
        let lam = (n as f64).ln();
        let mut total = ZERO;
        for s in cls.iter().rev() {
            let mut v = ZERO;
            for c in s.iter().rev() {
                v = v * u + c;
            }
            total = total * lam + v;
        }
        total
    }

    fn derivative(&self, h: &[Series]) -> Vec<Series> {
        let mut out = vec![zero_series(self.order); h.len()];
        for (d, s) in h.iter().enumerate() {
            for (k, &c) in s.iter().enumerate().take(self.order) {
                if c == ZERO {
                    continue;
                }
                if k > 0 {
                    out[d][k + 1] -= c * k as f64;
                }
                if d > 0 {
                    out[d - 1][k + 1] += c * d as f64;
                }
            }
        }
        out
    }

    /// `τ(n) = Σ_{m>n} a(m)` as an expansion in `n`.
    pub(crate) fn tail_sum(&self, mode: TailMode) -> Result<Expansion, Divergent> {
        let l = self.period;
        let k_max = self.order;
        let deg = self.degree();
        let scale = self
            .classes
            .iter()
            .flat_map(|c| c.iter())
            .flat_map(|s| s.iter().take(3))
            .map(|c| c.norm())
            .fold(1.0, f64::max);
        for d in 0..=deg {
            let mut mean = ZERO;
            let mut size = 0.0;
            for cls in &self.classes {
                if let Some(s) = cls.get(d) {
                    if s[0].norm() > 1e-12 * scale {
                        return Err(Divergent);
                    }
                    mean += s[1];
                    size += s[1].norm();
                }
            }
            // Round-off in the per-class coefficients must not read as a harmonic tail.
            let floor = (1e-9 * size).max(1e-12 * scale);
            if mode == TailMode::Strict && mean.norm() > floor {
                return Err(Divergent);
            }
        }

        let lf = l as f64;
        let mut sums = Vec::with_capacity(l);
        for h in &self.classes {
            let mut e = vec![zero_series(k_max); deg + 2];
            for (d, s) in h.iter().enumerate() {
                for (k, &c) in s.iter().enumerate().skip(1) {
                    if c == ZERO {
                        continue;
                    }
                    let c = c / lf;
                    if k == 1 {
                        e[d + 1][0] -= c / (d + 1) as f64;
                    } else {
                        let sp = (k - 1) as f64;
                        let mut fall = 1.0;
                        let mut pw = sp;
                        for i in 0..=d {
                            e[d - i][k - 1] += c * fall / pw;
                            fall *= (d - i) as f64;
                            pw *= sp;
                        }
                    }
                }
                for (o, v) in e[d].iter_mut().zip(s) {
                    *o += v * 0.5;
                }
            }
            let mut g = self.derivative(h);
            let mut i = 1;
            while g.iter().any(|s| !is_zero(s)) {
                let f = bernoulli_ratio(i) * lf.powi(2 * i as i32 - 1);
                for (d, s) in g.iter().enumerate() {
                    for (o, v) in e[d].iter_mut().zip(s) {
                        *o -= v * f;
                    }
                }
                g = self.derivative(&self.derivative(&g));
                i += 1;
            }
            sums.push(e);
        }

        let mut classes = vec![vec![zero_series(k_max); deg + 2]; l];
        for j in 1..=l {
            let shifter = Shifter::new(j as f64, k_max, deg + 1);
            for (rho0, out) in classes.iter_mut().enumerate() {
                shifter.apply(&sums[(rho0 + j) % l], out);
            }
        }
        Ok(Expansion {
            period: l,
            order: k_max,
            classes,
        })
    }
}

/// Substitution `z = n + j` in `(ln z)^d z^{-k}`, re-expanded in `ln n`, `1/n`.
struct Shifter {
    order: usize,
    /// `binom[k][i] = C(k+i-1, i)(-j)^i`.
    binom: Vec<Vec<f64>>,
    /// Powers of `ln(1 + j/n)` in `u = 1/n`.
    log_pows: Vec<Series>,
}

impl Shifter {
    fn new(j: f64, order: usize, max_deg: usize) -> Shifter {
        let binom = (0..=order)
            .map(|k| {
                let mut row = vec![0.0; order + 1];
                let mut c = 1.0;
                for (i, r) in row.iter_mut().enumerate().take(order + 1 - k) {
                    *r = c;
                    c *= -j * (k + i) as f64 / (i + 1) as f64;
                }
                row
            })
            .collect();
        let mut ell = zero_series(order);
        let mut p = 1.0;
        for (i, e) in ell.iter_mut().enumerate().skip(1) {
            p *= j;
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            *e = C::new(sign * p / i as f64, 0.0);
        }
        let mut log_pows = vec![{
            let mut one = zero_series(order);
            one[0] = C::new(1.0, 0.0);
            one
        }];
        for _ in 0..max_deg {
            let mut next = zero_series(order);
            series_mul_acc(&mut next, log_pows.last().unwrap(), &ell);
            log_pows.push(next);
        }
        Shifter {
            order,
            binom,
            log_pows,
        }
    }

    fn apply(&self, f: &[Series], out: &mut [Series]) {
        for (d, s) in f.iter().enumerate() {
            if is_zero(s) {
                continue;
            }
            let mut shifted = zero_series(self.order);
            for (k, &c) in s.iter().enumerate() {
                if c == ZERO {
                    continue;
                }
                if k == 0 {
                    shifted[0] += c;
                    continue;
                }
                for (i, b) in self.binom[k].iter().enumerate().take(self.order + 1 - k) {
                    shifted[k + i] += c * b;
                }
            }
            let mut binom = 1.0;
            for e in (0..=d).rev() {
                let scaled: Series = shifted.iter().map(|v| v * binom).collect();
                series_mul_acc(&mut out[e], &self.log_pows[d - e], &scaled);
                binom = binom * e as f64 / (d - e + 1) as f64;
            }
        }
    }
}
