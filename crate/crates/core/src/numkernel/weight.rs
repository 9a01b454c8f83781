//! Summands of the form `Σ c·xⁿ·Π (n+δ)^{-k}`.

use num_complex::Complex64;
use ordered_float::OrderedFloat;

use crate::cyclo::{common_level, Root};

/// Hashable, totally ordered complex number used inside symbolic keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Cx(pub OrderedFloat<f64>, pub OrderedFloat<f64>);

impl Cx {
    pub fn new(z: Complex64) -> Cx {
        // Normalise -0.0 so that equal values share one key.
        Cx(OrderedFloat(z.re + 0.0), OrderedFloat(z.im + 0.0))
    }

    pub fn real(x: f64) -> Cx {
        Cx::new(Complex64::new(x, 0.0))
    }

    pub fn get(self) -> Complex64 {
        Complex64::new(self.0 .0, self.1 .0)
    }
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx::new(z)
    }
}

/// `(n + shift)^{-power}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub shift: Cx,
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightTerm {
    pub coeff: Cx,
    pub twist: Root,
    pub factors: Vec<Factor>,
}

/// A finite sum of [`WeightTerm`]s viewed as a function of the index `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    pub terms: Vec<WeightTerm>,
}

impl Weight {
    /// `c·xⁿ/(n+δ)^k`.
    pub fn monomial(coeff: Complex64, twist: Root, shift: Complex64, power: u32) -> Weight {
        let factors = if power == 0 {
            vec![]
        } else {
            vec![Factor {
                shift: Cx::new(shift),
                power,
            }]
        };
        Weight {
            terms: vec![WeightTerm {
                coeff: Cx::new(coeff),
                twist,
                factors,
            }],
        }
    }

    pub fn plus(mut self, other: Weight) -> Weight {
        self.terms.extend(other.terms);
        self
    }

    /// Pointwise product.
    pub fn times(&self, other: &Weight) -> Weight {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().copied());
                terms.push(WeightTerm {
                    coeff: Cx::new(a.coeff.get() * b.coeff.get()),
                    twist: a.twist.mul(b.twist),
                    factors,
                });
            }
        }
        Weight { terms }
    }

    pub fn scaled(&self, c: Complex64) -> Weight {
        Weight {
            terms: self
                .terms
                .iter()
                .map(|t| WeightTerm {
                    coeff: Cx::new(t.coeff.get() * c),
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn level(&self) -> u64 {
        common_level(self.terms.iter().map(|t| t.twist))
    }

    pub fn max_shift(&self) -> f64 {
        self.terms
            .iter()
            .flat_map(|t| t.factors.iter())
            .map(|f| f.shift.get().norm())
            .fold(0.0, f64::max)
    }

    pub fn conj(&self) -> Weight {
        Weight {
            terms: self
                .terms
                .iter()
                .map(|t| WeightTerm {
                    coeff: Cx::new(t.coeff.get().conj()),
                    twist: t.twist.inv(),
                    factors: t
                        .factors
                        .iter()
                        .map(|f| Factor {
                            shift: Cx::new(f.shift.get().conj()),
                            power: f.power,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub(crate) fn compile(&self, period: u64) -> Compiled {
        Compiled {
            period,
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let table = (0..period)
                        .map(|r| t.twist.pow(r as i64).complex() * t.coeff.get())
                        .collect();
                    let factors = t
                        .factors
                        .iter()
                        .map(|f| (f.shift.get(), f.power as i32))
                        .collect();
                    (table, factors)
                })
                .collect(),
        }
    }
}

/// A [`Weight`] with its twist powers tabulated over one period.
pub(crate) struct Compiled {
    period: u64,
    terms: Vec<(Vec<Complex64>, Vec<(Complex64, i32)>)>,
}

impl Compiled {
    /// Value at index `n`; `None` when some factor vanishes.
    pub(crate) fn at(&self, n: u64) -> Option<Complex64> {
        let cls = (n % self.period) as usize;
        let nf = n as f64;
        let mut total = Complex64::new(0.0, 0.0);
        for (table, factors) in &self.terms {
            let mut v = table[cls];
            for &(d, k) in factors {
                if d.im == 0.0 {
                    let b = nf + d.re;
                    if b == 0.0 {
                        return None;
                    }
                    v /= b.powi(k);
                } else {
                    v /= Complex64::new(nf + d.re, d.im).powi(k);
                }
            }
            total += v;
        }
        Some(total)
    }
}
