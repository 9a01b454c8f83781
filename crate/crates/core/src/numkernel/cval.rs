use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Complex value with a bound on its absolute error.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CVal {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

impl CVal {
    pub const ZERO: CVal = CVal {
        re: 0.0,
        im: 0.0,
        err: 0.0,
    };
    pub const ONE: CVal = CVal {
        re: 1.0,
        im: 0.0,
        err: 0.0,
    };

    pub fn exact(re: f64, im: f64) -> CVal {
        CVal { re, im, err: 0.0 }
    }

    pub fn with_err(re: f64, im: f64, err: f64) -> CVal {
        debug_assert!(err >= 0.0);
        CVal { re, im, err }
    }

    pub fn from_complex(z: Complex64, err: f64) -> CVal {
        CVal {
            re: z.re,
            im: z.im,
            err,
        }
    }

    pub fn value(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn abs(self) -> f64 {
        self.value().norm()
    }

    pub fn conj(self) -> CVal {
        CVal {
            re: self.re,
            im: -self.im,
            err: self.err,
        }
    }

    /// Multiplies by a complex number known exactly.
    pub fn scale(self, c: Complex64) -> CVal {
        let v = self.value() * c;
        CVal::from_complex(v, self.err * c.norm() + f64::EPSILON * v.norm())
    }

    /// `|self − other| ≤ self.err + other.err + slack`.
    pub fn agrees(self, other: CVal, slack: f64) -> bool {
        (self.value() - other.value()).norm() <= self.err + other.err + slack
    }
}

impl From<Complex64> for CVal {
    fn from(z: Complex64) -> Self {
        CVal::from_complex(z, 0.0)
    }
}

impl From<f64> for CVal {
    fn from(x: f64) -> Self {
        CVal::exact(x, 0.0)
    }
}

impl Add for CVal {
    type Output = CVal;
    fn add(self, o: CVal) -> CVal {
        CVal::from_complex(self.value() + o.value(), self.err + o.err)
    }
}

impl Sub for CVal {
    type Output = CVal;
    fn sub(self, o: CVal) -> CVal {
        CVal::from_complex(self.value() - o.value(), self.err + o.err)
    }
}

impl Neg for CVal {
    type Output = CVal;
    fn neg(self) -> CVal {
        CVal {
            re: -self.re,
            im: -self.im,
            err: self.err,
        }
    }
}

impl Mul for CVal {
    type Output = CVal;
    fn mul(self, o: CVal) -> CVal {
        let v = self.value() * o.value();
        let err =
            self.abs() * o.err + o.abs() * self.err + self.err * o.err + f64::EPSILON * v.norm();
        CVal::from_complex(v, err)
    }
}

impl std::iter::Sum for CVal {
    fn sum<I: Iterator<Item = CVal>>(iter: I) -> CVal {
        iter.fold(CVal::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for CVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(
            f,
            "{:.15} {} {:.15}i ± {:.1e}",
            self.re,
            sign,
            self.im.abs(),
            self.err
        )
    }
}
