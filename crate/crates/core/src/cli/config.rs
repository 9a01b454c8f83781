//! Suite configuration: which identity families to run over which grids.
//!
//! ```toml
//! tolerance = 1e-10
//! truncation_cap = 4000000
//! format = "json"
//!
//! [[identities]]
//! id = "linear"
//! p = [1, 2, 3]
//! q = [1, 2, 3]
//! twists = ["0/1", "1/2", "1/4", "3/4"]
//! max_weight = 7
//! ```
//!
//! A twist field left out (`x`, `y`, `x1`, ...) falls back to `twists`,
//! which itself defaults to the fourth roots of unity.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::cyclo::Root;
use crate::identities::known::known_ids;
use crate::identities::{IdentityId, Instance, KernelRoute, KernelSpec, MtvVariant, TripleRoute};
use crate::ratfrac::KernelVariant;

use super::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub identities: Vec<IdentityGrid>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_cap")]
    pub truncation_cap: u64,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

fn default_tolerance() -> f64 {
    1e-10
}

fn default_cap() -> u64 {
    4_000_000
}

/// One family and its parameter grid. Unused fields are ignored by
/// families that do not take them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityGrid {
    pub id: IdentityId,
    #[serde(default)]
    pub p: Vec<u32>,
    #[serde(default)]
    pub q: Vec<u32>,
    #[serde(default)]
    pub p1: Vec<u32>,
    #[serde(default)]
    pub p2: Vec<u32>,
    /// Exponent tuples for `triple` and `mtv`.
    #[serde(default)]
    pub exps: Vec<Vec<u32>>,
    #[serde(default)]
    pub twists: Vec<Root>,
    #[serde(default)]
    pub x: Vec<Root>,
    #[serde(default)]
    pub y: Vec<Root>,
    #[serde(default)]
    pub x1: Vec<Root>,
    #[serde(default)]
    pub x2: Vec<Root>,
    #[serde(default)]
    pub max_weight: Option<u32>,
    #[serde(default)]
    pub names: Vec<String>,
    #[serde(default)]
    pub kernels: Vec<KernelSpec>,
    #[serde(default)]
    pub generic_route: bool,
    #[serde(default)]
    pub cutoff: Vec<u64>,
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<SuiteConfig, CliError> {
        let cfg: SuiteConfig =
            toml::from_str(text).map_err(|e| CliError::Config(e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tolerance > 0.0) {
            return Err(CliError::Config(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.truncation_cap < 1000 {
            return Err(CliError::Config(format!(
                "truncation_cap must be at least 1000, got {}",
                self.truncation_cap
            )));
        }
        for g in &self.identities {
            g.validate()?;
        }
        Ok(())
    }

    /// Every instance in config order, each grid in lexicographic order.
    pub fn instances(&self) -> Vec<Instance> {
        self.identities.iter().flat_map(|g| g.instances()).collect()
    }
}

fn fourth_roots() -> Vec<Root> {
    vec![Root::ONE, Root::MINUS_ONE, Root::I, Root::MINUS_I]
}

impl IdentityGrid {
    fn validate(&self) -> Result<(), CliError> {
        let bad = |what: &str| Err(CliError::Config(format!("{}: {what}", self.id)));
        match self.id {
            IdentityId::Triple if self.exps.iter().any(|e| e.len() != 3) => {
                bad("triple exponents need three entries")
            }
            IdentityId::Mtv if self.exps.iter().any(|e| e.len() != 2 && e.len() != 3) => {
                bad("mtv exponents need two or three entries")
            }
            IdentityId::GeneralR1 | IdentityId::GeneralR2 => {
                if self.kernels.is_empty() {
                    return bad("at least one kernel is required");
                }
                for k in &self.kernels {
                    k.to_partial_fraction()
                        .map_err(|e| CliError::Config(format!("{}: {e}", self.id)))?;
                }
                Ok(())
            }
            IdentityId::Known => {
                let known = known_ids();
                match self.names.iter().find(|n| !known.contains(n)) {
                    Some(n) => Err(CliError::Config(format!("unknown closed form {n:?}"))),
                    None => Ok(()),
                }
            }
            _ => Ok(()),
        }
    }

    fn roots(&self, field: &[Root]) -> Vec<Root> {
        if !field.is_empty() {
            field.to_vec()
        } else if !self.twists.is_empty() {
            self.twists.clone()
        } else {
            fourth_roots()
        }
    }

    fn exps_or(&self, field: &[u32], default: &[u32]) -> Vec<u32> {
        if field.is_empty() {
            default.to_vec()
        } else {
            field.to_vec()
        }
    }

    fn within(&self, weight: u32) -> bool {
        self.max_weight.is_none_or(|w| weight <= w)
    }

    fn tuples(&self, len: usize) -> Vec<Vec<Root>> {
        let base = self.roots(&[]);
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|t| {
                    base.iter().map(move |&r| {
                        let mut t = t.clone();
                        t.push(r);
                        t
                    })
                })
                .collect();
        }
        out
    }

    pub fn instances(&self) -> Vec<Instance> {
        let one_to_three = [1, 2, 3];
        let mut out = Vec::new();
        match self.id {
            IdentityId::Linear => {
                for p in self.exps_or(&self.p, &one_to_three) {
                    for q in self.exps_or(&self.q, &one_to_three) {
                        if !self.within(p + q) {
                            continue;
                        }
                        for x in self.roots(&self.x) {
                            for y in self.roots(&self.y) {
                                out.push(Instance::Linear { p, q, x, y });
                            }
                        }
                    }
                }
            }
            IdentityId::LinearCorollary => {
                // Only pairs meeting the hypotheses are generated.
                for p in self.exps_or(&self.p, &[2, 3, 4, 5]) {
                    for q in self.exps_or(&self.q, &[2, 3, 4, 5]) {
                        if p >= 2 && q >= 2 && (p + q) % 2 == 1 && self.within(p + q) {
                            out.push(Instance::LinearCorollary { p, q });
                        }
                    }
                }
            }
            IdentityId::Quadratic => {
                for p1 in self.exps_or(&self.p1, &one_to_three) {
                    for p2 in self.exps_or(&self.p2, &one_to_three) {
                        for q in self.exps_or(&self.q, &one_to_three) {
                            if !self.within(p1 + p2 + q) {
                                continue;
                            }
                            for x in self.roots(&self.x) {
                                for x1 in self.roots(&self.x1) {
                                    for x2 in self.roots(&self.x2) {
                                        out.push(Instance::Quadratic {
                                            p1,
                                            p2,
                                            q,
                                            x,
                                            x1,
                                            x2,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            IdentityId::Triple => {
                let exps = if self.exps.is_empty() {
                    vec![vec![1, 2, 1], vec![2, 2, 2]]
                } else {
                    self.exps.clone()
                };
                let route = if self.generic_route {
                    TripleRoute::Generic
                } else {
                    TripleRoute::Auto
                };
                for e in exps {
                    for t in self.tuples(3) {
                        out.push(Instance::Triple {
                            exps: (e[0], e[1], e[2]),
                            twists: (t[0], t[1], t[2]),
                            route,
                        });
                    }
                }
            }
            IdentityId::Cubic => {
                for q in self.exps_or(&self.q, &[2, 3]) {
                    for x in self.roots(&self.x) {
                        for t in self.tuples(3) {
                            out.push(Instance::Cubic {
                                q,
                                x,
                                xs: [t[0], t[1], t[2]],
                            });
                        }
                    }
                }
            }
            IdentityId::Mtv => {
                let exps = if self.exps.is_empty() {
                    let mut v = Vec::new();
                    for a in one_to_three {
                        for b in one_to_three {
                            v.push(vec![a, b]);
                        }
                    }
                    v
                } else {
                    self.exps.clone()
                };
                for e in exps {
                    if !self.within(e.iter().sum()) {
                        continue;
                    }
                    let variant = if e.len() == 2 {
                        MtvVariant::Depth2
                    } else {
                        MtvVariant::Depth3
                    };
                    for t in self.tuples(e.len()) {
                        out.push(Instance::Mtv {
                            variant,
                            exps: e.clone(),
                            twists: t,
                        });
                    }
                }
            }
            IdentityId::GeneralR1 | IdentityId::GeneralR2 => {
                let variant = if self.id == IdentityId::GeneralR1 {
                    KernelVariant::R1
                } else {
                    KernelVariant::R2
                };
                let route = if self.generic_route {
                    KernelRoute::Generic
                } else {
                    KernelRoute::Auto
                };
                for kernel in &self.kernels {
                    for p in self.exps_or(&self.p, &[1, 2]) {
                        for x in self.roots(&self.x) {
                            for y in self.roots(&self.y) {
                                out.push(Instance::General {
                                    variant,
                                    p,
                                    x,
                                    y,
                                    kernel: kernel.clone(),
                                    route,
                                });
                            }
                        }
                    }
                }
            }
            IdentityId::Known => {
                let names = if self.names.is_empty() {
                    known_ids()
                } else {
                    self.names.clone()
                };
                out.extend(names.into_iter().map(|name| Instance::Known { name }));
            }
            IdentityId::Residue => {
                let cutoffs = if self.cutoff.is_empty() {
                    vec![100_000]
                } else {
                    self.cutoff.clone()
                };
                for p in self.exps_or(&self.p, &one_to_three) {
                    for q in self.exps_or(&self.q, &one_to_three) {
                        if !self.within(p + q) {
                            continue;
                        }
                        for x in self.roots(&self.x) {
                            for y in self.roots(&self.y) {
                                for &cutoff in &cutoffs {
                                    out.push(Instance::Residue { p, q, x, y, cutoff });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
