//! Series specifications and their text grammar.
//!
//! ```text
//! spec   := family '[' exps [';' q] ']' '(' roots [';' root] ')'
//! family := T | S | St | t | Z | MT | Li | ti
//! exps   := <empty> | int {',' int}
//! roots  := <empty> | root {',' root}
//! root   := k '/' N
//! ```
//!
//! | family | meaning                              | outer part |
//! |--------|--------------------------------------|------------|
//! | `T`    | Euler T-sum                          | yes        |
//! | `S`    | cyclotomic Euler sum                 | yes        |
//! | `St`   | S-tilde sum (t-factors over `n^q`)   | yes        |
//! | `t`    | multiple t-value                     | no         |
//! | `Z`    | multiple polylogarithm value         | no         |
//! | `MT`   | multiple T-value                     | no         |
//! | `Li`   | polylogarithm, depth 1               | no         |
//! | `ti`   | t-polylogarithm, depth 1             | no         |
//!
//! `T[2;3](1/2;0/1)` is `T_{2;3}(-1;1)`, `T[;3](;1/2)` the empty T-sum
//! `t~_3(-1)`, and `t[2,2,2](0/1,0/1,0/1)` is `t(2,2,2)`.

use std::fmt;
use std::str::FromStr;

use crate::cyclo::Root;

/// Ordered `(exponent, twist)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Comp {
    pub parts: Vec<(u32, Root)>,
}

impl Comp {
    pub fn new(parts: Vec<(u32, Root)>) -> Comp {
        assert!(
            parts.iter().all(|&(p, _)| p >= 1),
            "exponents must be positive"
        );
        Comp { parts }
    }

    pub fn from_slices(exps: &[u32], twists: &[Root]) -> Comp {
        assert_eq!(exps.len(), twists.len());
        Comp::new(exps.iter().copied().zip(twists.iter().copied()).collect())
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.0).collect()
    }

    pub fn twists(&self) -> Vec<Root> {
        self.parts.iter().map(|p| p.1).collect()
    }

    /// Positions holding the pair `(1, 1)`.
    pub fn guard_flags(&self) -> Vec<bool> {
        self.parts
            .iter()
            .map(|&(p, x)| p == 1 && x.is_one())
            .collect()
    }

    pub fn conj(&self) -> Comp {
        Comp {
            parts: self.parts.iter().map(|&(p, x)| (p, x.inv())).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    TSum,
    SSum,
    STildeSum,
    MtV,
    Mzv,
    Mtv,
    Polylog,
    TPolylog,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::TSum => "T",
            Family::SSum => "S",
            Family::STildeSum => "St",
            Family::MtV => "t",
            Family::Mzv => "Z",
            Family::Mtv => "MT",
            Family::Polylog => "Li",
            Family::TPolylog => "ti",
        }
    }

    pub fn is_euler(self) -> bool {
        matches!(self, Family::TSum | Family::SSum | Family::STildeSum)
    }

    fn from_tag(tag: &str) -> Option<Family> {
        Some(match tag {
            "T" => Family::TSum,
            "S" => Family::SSum,
            "St" => Family::STildeSum,
            "t" => Family::MtV,
            "Z" => Family::Mzv,
            "MT" => Family::Mtv,
            "Li" => Family::Polylog,
            "ti" => Family::TPolylog,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesSpec {
    pub family: Family,
    pub inner: Comp,
    /// `(q, x)` for the Euler-sum families.
    pub outer: Option<(u32, Root)>,
}

impl SeriesSpec {
    pub fn t_sum(inner: Comp, q: u32, x: Root) -> SeriesSpec {
        SeriesSpec {
            family: Family::TSum,
            inner,
            outer: Some((q, x)),
        }
    }

    pub fn s_sum(inner: Comp, q: u32, x: Root) -> SeriesSpec {
        SeriesSpec {
            family: Family::SSum,
            inner,
            outer: Some((q, x)),
        }
    }

    pub fn st_sum(inner: Comp, q: u32, x: Root) -> SeriesSpec {
        SeriesSpec {
            family: Family::STildeSum,
            inner,
            outer: Some((q, x)),
        }
    }

    pub fn mtv(inner: Comp) -> SeriesSpec {
        SeriesSpec {
            family: Family::MtV,
            inner,
            outer: None,
        }
    }

    pub fn mzv(inner: Comp) -> SeriesSpec {
        SeriesSpec {
            family: Family::Mzv,
            inner,
            outer: None,
        }
    }

    pub fn big_mtv(inner: Comp) -> SeriesSpec {
        SeriesSpec {
            family: Family::Mtv,
            inner,
            outer: None,
        }
    }

    pub fn polylog(p: u32, x: Root) -> SeriesSpec {
        SeriesSpec {
            family: Family::Polylog,
            inner: Comp::new(vec![(p, x)]),
            outer: None,
        }
    }

    pub fn t_polylog(p: u32, x: Root) -> SeriesSpec {
        SeriesSpec {
            family: Family::TPolylog,
            inner: Comp::new(vec![(p, x)]),
            outer: None,
        }
    }

    pub fn weight(&self) -> u32 {
        self.inner.weight() + self.outer.map_or(0, |o| o.0)
    }

    /// Checks the convergence condition of the family.
    pub fn is_admissible(&self) -> bool {
        match self.outer {
            Some((q, x)) => !(q == 1 && x.is_one()),
            None => self
                .inner
                .parts
                .last()
                .map_or(true, |&(k, x)| !(k == 1 && x.is_one())),
        }
    }

    /// The same spec with every twist inverted.
    pub fn conj(&self) -> SeriesSpec {
        SeriesSpec {
            family: self.family,
            inner: self.inner.conj(),
            outer: self.outer.map(|(q, x)| (q, x.inv())),
        }
    }

    /// Subscript rendering such as `T_{2;3}(-1;1)` or `t~_{1,2}(i,1)`.
    pub fn pretty(&self) -> String {
        let name = match self.family {
            Family::TSum => "T",
            Family::SSum => "S",
            Family::STildeSum => "S~",
            Family::MtV | Family::TPolylog => "t~",
            Family::Mzv | Family::Polylog => "Li",
            Family::Mtv => "T~",
        };
        let exps = join(self.inner.parts.iter().map(|p| p.0.to_string()));
        let args = join(self.inner.parts.iter().map(|p| pretty_root(p.1)));
        match self.outer {
            Some((q, x)) => format!("{name}_{{{exps};{q}}}({args};{})", pretty_root(x)),
            None => format!("{name}_{{{exps}}}({args})"),
        }
    }
}

fn join<I: Iterator<Item = String>>(it: I) -> String {
    it.collect::<Vec<_>>().join(",")
}

/// `1`, `-1`, `i`, `-i`, or `e(k/N)` for other roots.
pub fn pretty_root(x: Root) -> String {
    match (x.num(), x.den()) {
        (0, 1) => "1".into(),
        (1, 2) => "-1".into(),
        (1, 4) => "i".into(),
        (3, 4) => "-i".into(),
        (k, n) => format!("e({k}/{n})"),
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = join(self.inner.parts.iter().map(|p| p.0.to_string()));
        let args = join(self.inner.parts.iter().map(|p| p.1.to_string()));
        match self.outer {
            Some((q, x)) => write!(f, "{}[{exps};{q}]({args};{x})", self.family.tag()),
            None => write!(f, "{}[{exps}]({args})", self.family.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.fail(format!("expected '{c}'"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        match digits.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(ParseError {
                position: at,
                message: "expected a positive integer exponent".into(),
            }),
        }
    }

    fn root(&mut self) -> Result<Root, ParseError> {
        self.skip_ws();
        let at = self.pos;
        let text = self.take_while(|c| c.is_ascii_digit() || c == '/' || c == '-');
        text.parse::<Root>().map_err(|e| ParseError {
            position: at,
            message: e.reason.to_string(),
        })
    }

    /// Comma-separated list terminated by one of `stops` (not consumed).
    fn list<T>(
        &mut self,
        stops: &[char],
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if self.peek().is_some_and(|c| stops.contains(&c)) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if stops.contains(&c) => return Ok(out),
                _ => return self.fail("expected ',' or end of list"),
            }
        }
    }
}

impl FromStr for SeriesSpec {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor { text, pos: 0 };
        let tag = c.take_while(|ch| ch.is_ascii_alphabetic());
        let family = match Family::from_tag(tag) {
            Some(f) => f,
            None => {
                return Err(ParseError {
                    position: 0,
                    message: format!("unknown family {tag:?}"),
                })
            }
        };
        c.expect('[')?;
        let exps = c.list(&[';', ']'], |c| c.exponent())?;
        let q = if family.is_euler() {
            c.expect(';')?;
            Some(c.exponent()?)
        } else {
            None
        };
        c.expect(']')?;
        c.expect('(')?;
        let roots = c.list(&[';', ')'], |c| c.root())?;
        let x = if family.is_euler() {
            c.expect(';')?;
            Some(c.root()?)
        } else {
            None
        };
        c.expect(')')?;
        if c.peek().is_some() {
            return c.fail("trailing input");
        }
        if exps.len() != roots.len() {
            return Err(ParseError {
                position: 0,
                message: "exponent and twist counts differ".into(),
            });
        }
        let single = matches!(family, Family::Polylog | Family::TPolylog);
        if single && exps.len() != 1 {
            return Err(ParseError {
                position: 0,
                message: "Li and ti take exactly one exponent".into(),
            });
        }
        if !family.is_euler() && exps.is_empty() {
            return Err(ParseError {
                position: 0,
                message: "multiple values need depth at least 1".into(),
            });
        }
        Ok(SeriesSpec {
            family,
            inner: Comp::from_slices(&exps, &roots),
            outer: q.zip(x),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        for text in [
            "T[2;3](1/2;0/1)",
            "t[2,2,2](0/1,0/1,0/1)",
            "T[;3](;1/2)",
            "St[1,2;1](1/4,3/4;1/2)",
            "Li[2](0/1)",
            "MT[1,2](0/1,1/2)",
        ] {
            let s: SeriesSpec = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        let s: SeriesSpec = " T [ 2 ; 3 ] ( 2/4 ; 0/1 ) ".parse().unwrap();
        assert_eq!(s.to_string(), "T[2;3](1/2;0/1)");
    }

    #[test]
    fn reports_positions() {
        let e = "T[2;3](1/2,0/1)".parse::<SeriesSpec>().unwrap_err();
        assert_eq!(e.position, 14);
        let e = "Q[2](0/1)".parse::<SeriesSpec>().unwrap_err();
        assert_eq!(e.position, 0);
        let e = "t[0](0/1)".parse::<SeriesSpec>().unwrap_err();
        assert_eq!(e.position, 2);
    }

    #[test]
    fn pretty_form() {
        let s: SeriesSpec = "T[2;3](1/2;0/1)".parse().unwrap();
        assert_eq!(s.pretty(), "T_{2;3}(-1;1)");
    }
}
