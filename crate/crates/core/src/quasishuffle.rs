//! Stuffle expansion of Euler T-sums into multiple t-values.
//!
//! In `Σ_n Π_j t_n(p_j;x_j) xⁿ/(n-1/2)^q` every tuple of inner indices
//! `m_j ≤ n` falls into exactly one pattern: some indices coincide with `n`
//! and the others form a strictly increasing chain of blocks below `n`.
//! Each pattern is one multiple t-value.

use std::fmt;

use crate::cyclo::Root;
use crate::numkernel::spec::pretty_root;
use crate::numkernel::{multiple_value_with, CVal, Comp, EvalOptions, NumError, SeriesSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MtVTerm {
    pub coeff: i64,
    pub exponents: Vec<u32>,
    pub twists: Vec<Root>,
}

impl MtVTerm {
    pub fn spec(&self) -> SeriesSpec {
        SeriesSpec::mtv(Comp::from_slices(&self.exponents, &self.twists))
    }

    fn key(&self) -> (usize, &[u32], &[Root]) {
        (self.exponents.len(), &self.exponents, &self.twists)
    }
}

/// Integer combination of multiple t-values, sorted by
/// (depth, exponents, twists) with equal terms merged.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum {
    pub terms: Vec<MtVTerm>,
}

impl FormalSum {
    pub fn from_terms(mut terms: Vec<MtVTerm>) -> FormalSum {
        terms.sort_by(|a, b| a.key().cmp(&b.key()));
        let mut merged: Vec<MtVTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.key() == t.key() => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        FormalSum { terms: merged }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// One `coeff<TAB>spec` record per term.
    pub fn records(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|t| format!("{}\t{}", t.coeff, t.spec()))
            .collect()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let sign = match (i, t.coeff < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let mag = t.coeff.unsigned_abs();
            let coeff = if mag == 1 {
                String::new()
            } else {
                format!("{mag} ")
            };
            let exps: Vec<_> = t.exponents.iter().map(|e| e.to_string()).collect();
            let args: Vec<_> = t.twists.iter().map(|&x| pretty_root(x)).collect();
            write!(
                f,
                "{sign}{coeff}t~_{{{}}}({})",
                exps.join(","),
                args.join(",")
            )?;
        }
        Ok(())
    }
}

/// Ordered set partitions of the bits of `set`, lowest block first.
fn ordered_partitions(set: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if set == 0 {
        out.push(prefix.clone());
        return;
    }
    let mut block = set;
    while block != 0 {
        prefix.push(block);
        ordered_partitions(set & !block, prefix, out);
        prefix.pop();
        block = (block - 1) & set;
    }
}

/// All stuffle terms with coefficient +1, before merging.
pub fn stuffle_terms(inner: &Comp, q: u32, x: Root) -> Vec<MtVTerm> {
    let k = inner.len();
    assert!(k < 16, "stuffle expansion limited to 15 inner factors");
    let full = (1u32 << k) - 1;
    let collect = |mask: u32| {
        (0..k)
            .filter(|j| mask & (1 << j) != 0)
            .fold((0u32, Root::ONE), |(p, r), j| {
                let (pj, xj) = inner.parts[j];
                (p + pj, r.mul(xj))
            })
    };
    let mut terms = Vec::new();
    for rest in 0..=full {
        let merged = full & !rest;
        let mut chains = Vec::new();
        ordered_partitions(rest, &mut Vec::new(), &mut chains);
        for chain in chains {
            let mut exponents = Vec::with_capacity(chain.len() + 1);
            let mut twists = Vec::with_capacity(chain.len() + 1);
            for block in chain {
                let (p, r) = collect(block);
                exponents.push(p);
                twists.push(r);
            }
            let (p, r) = collect(merged);
            exponents.push(q + p);
            twists.push(x.mul(r));
            terms.push(MtVTerm {
                coeff: 1,
                exponents,
                twists,
            });
        }
    }
    terms
}

/// `T_{p₁…p_k;q}(x₁…x_k;x)` as a formal sum of multiple t-values.
pub fn stuffle_expand(inner: &Comp, q: u32, x: Root) -> FormalSum {
    FormalSum::from_terms(stuffle_terms(inner, q, x))
}

/// Number of unmerged stuffle terms for `k` inner factors.
pub fn term_count(k: usize) -> u64 {
    // Fubini numbers count ordered set partitions.
    let mut binom = vec![vec![1u64; 1]; k + 1];
    for n in 1..=k {
        let mut row = vec![1u64; n + 1];
        for i in 1..n {
            row[i] = binom[n - 1][i - 1] + binom[n - 1][i];
        }
        binom[n] = row;
    }
    let mut fubini = vec![1u64; k + 1];
    for n in 1..=k {
        fubini[n] = (1..=n).map(|i| binom[n][i] * fubini[n - i]).sum();
    }
    (0..=k).map(|i| binom[k][i] * fubini[k - i]).sum()
}

/// `Σ coeff · t̃(term)`.
pub fn eval_formal(sum: &FormalSum, tolerance: f64) -> Result<CVal, NumError> {
    let opts = EvalOptions::with_tolerance(tolerance);
    sum.terms.iter().try_fold(CVal::ZERO, |acc, t| {
        let spec = t.spec();
        if !spec.is_admissible() {
            return Err(NumError::DivergentSeries(spec.to_string()));
        }
        let v = multiple_value_with(&spec, &opts)?;
        Ok(acc + v.scale((t.coeff as f64).into()))
    })
}
