//! Exact roots of unity.
//!
//! A [`Root`] stores the angle of `e^{2πik/N}` as a reduced fraction `k/N` of
//! the full turn, so products and inverses of twists stay exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::numkernel::CVal;

/// `e^{2πi·num/den}` with `0 ≤ num < den` and `gcd(num, den) = 1`.
/// The identity is `(0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    num: u32,
    den: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid root of unity {text:?}: {reason}")]
pub struct RootParseError {
    pub text: String,
    pub reason: &'static str,
}

impl Root {
    pub const ONE: Root = Root { num: 0, den: 1 };
    pub const MINUS_ONE: Root = Root { num: 1, den: 2 };
    pub const I: Root = Root { num: 1, den: 4 };
    pub const MINUS_I: Root = Root { num: 3, den: 4 };

    /// Builds `e^{2πik/N}`; `k` may be any integer and is reduced mod `N`.
    ///
    /// Panics if `den` is zero or exceeds `2^31`.
    pub fn new(num: i64, den: u64) -> Root {
        assert!(den > 0 && den <= 1 << 31, "root denominator out of range");
        let d = den as i64;
        let k = num.rem_euclid(d);
        let g = k.gcd(&d);
        Root {
            num: (k / g) as u32,
            den: (d / g) as u32,
        }
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    /// Order of the root as an element of the circle group.
    pub fn order(self) -> u32 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn mul(self, other: Root) -> Root {
        let (a, b) = (self.den as u64, other.den as u64);
        let l = a.lcm(&b);
        let k = self.num as u64 * (l / a) + other.num as u64 * (l / b);
        Root::new((k % l) as i64, l)
    }

    pub fn inv(self) -> Root {
        Root::new(-(self.num as i64), self.den as u64)
    }

    /// Principal square root: halves the angle taken in `[0, 2π)`.
    pub fn sqrt(self) -> Root {
        Root::new(self.num as i64, 2 * self.den as u64)
    }

    pub fn pow(self, e: i64) -> Root {
        let d = self.den as i64;
        let k = (self.num as i64 * e.rem_euclid(d)).rem_euclid(d);
        Root::new(k, d as u64)
    }

    pub fn conj(self) -> Root {
        self.inv()
    }

    pub fn to_complex(self) -> CVal {
        let (re, im, exact) = self.cos_sin();
        let err = if exact { 0.0 } else { 4.0 * f64::EPSILON };
        CVal::with_err(re, im, err)
    }

    /// `(cos, sin, exact)`; quarter turns are returned exactly.
    pub(crate) fn cos_sin(self) -> (f64, f64, bool) {
        let (k, n) = (self.num as u64, self.den as u64);
        if (4 * k) % n == 0 {
            return match 4 * k / n {
                0 => (1.0, 0.0, true),
                1 => (0.0, 1.0, true),
                2 => (-1.0, 0.0, true),
                _ => (0.0, -1.0, true),
            };
        }
        // Reduce to an angle in [-π, π] before calling the libm routines.
        let k = k as f64;
        let n = n as f64;
        let turn = if 2.0 * k > n { k - n } else { k };
        let theta = 2.0 * std::f64::consts::PI * (turn / n);
        let (s, c) = theta.sin_cos();
        (c, s, false)
    }

    pub(crate) fn complex(self) -> num_complex::Complex64 {
        let (c, s, _) = self.cos_sin();
        num_complex::Complex64::new(c, s)
    }

    /// Angle as a fraction of the full turn.
    pub fn turns(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

pub fn root_mul(a: Root, b: Root) -> Root {
    a.mul(b)
}

pub fn root_inv(a: Root) -> Root {
    a.inv()
}

pub fn root_sqrt(a: Root) -> Root {
    a.sqrt()
}

pub fn root_to_complex(a: Root) -> CVal {
    a.to_complex()
}

/// Least common multiple of the orders of `roots`, or 1 for none.
pub fn common_level<I: IntoIterator<Item = Root>>(roots: I) -> u64 {
    roots
        .into_iter()
        .fold(1u64, |acc, r| acc.lcm(&(r.den as u64)))
}

impl Default for Root {
    fn default() -> Self {
        Root::ONE
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.num as u64 * other.den as u64;
        let b = other.num as u64 * self.den as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Root {
    type Err = RootParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| RootParseError {
            text: s.to_string(),
            reason,
        };
        let (k, n) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| err("expected k/N"))?;
        let k: i64 = k
            .trim()
            .parse()
            .map_err(|_| err("numerator is not an integer"))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| err("denominator is not a positive integer"))?;
        if n == 0 || n > 1 << 31 {
            return Err(err("denominator must lie in 1..=2^31"));
        }
        Ok(Root::new(k, n))
    }
}

impl serde::Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
