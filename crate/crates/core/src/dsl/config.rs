//! JSON configuration and command-line overrides.
//!
//! ```json
//! {"ring": {"kind": "jroot", "q": 2, "modulus": 5},
//!  "group": {"kind": "adiag_cyclic", "k": 3},
//!  "powers": {"ell_m": 1, "ell_n": 1, "ell_g": 1}}
//! ```
//!
//! A derived group is `{"kind": "derived", "base": "cyclic:3", "arity": 3}`.
//! Missing fields default to `jZ` with `adiag(C3)` and unit powers.

use std::path::Path;

use serde::Deserialize;

use super::{Context, DslError};
use crate::groupring::GroupRing;
use crate::ngroup::{AdiagCyclic, DerivedCyclic};
use crate::pring::PolyadicRing;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub ring: Option<RingConfig>,
    pub group: Option<GroupConfig>,
    pub powers: Option<PowersConfig>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingConfig {
    pub kind: String,
    pub q: Option<u32>,
    pub modulus: Option<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    pub kind: String,
    pub k: Option<u32>,
    pub base: Option<String>,
    pub arity: Option<usize>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowersConfig {
    pub ell_m: Option<u64>,
    pub ell_n: Option<u64>,
    pub ell_g: Option<u64>,
}

/// Values given on the command line; each one replaces the file value.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub ring: Option<String>,
    pub q: Option<u32>,
    pub modulus: Option<u64>,
    pub group: Option<String>,
    pub k: Option<u32>,
    pub base: Option<String>,
    pub arity: Option<usize>,
    pub ell_m: Option<u64>,
    pub ell_n: Option<u64>,
    pub ell_g: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Adiag { k: u32 },
    Derived { order: u32, arity: usize },
}

/// Fully resolved context description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContextSpec {
    pub q: u32,
    pub modulus: Option<u64>,
    pub group: GroupSpec,
    pub ell_m: u64,
    pub ell_n: u64,
    pub ell_g: u64,
}

impl Default for ContextSpec {
    fn default() -> Self {
        ContextSpec { q: 2, modulus: None, group: GroupSpec::Adiag { k: 3 }, ell_m: 1, ell_n: 1, ell_g: 1 }
    }
}

fn config_err(msg: impl Into<String>) -> DslError {
    DslError::Config(msg.into())
}

fn parse_base(base: &str) -> Result<u32, DslError> {
    base.strip_prefix("cyclic:")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| config_err(format!("group base must look like cyclic:<order>, got {base:?}")))
}

impl ContextSpec {
    /// Merges a parsed file with overrides.
    pub fn resolve(file: &ConfigFile, o: &Overrides) -> Result<Self, DslError> {
        let d = ContextSpec::default();
        let ring_kind = o.ring.clone().or_else(|| file.ring.as_ref().map(|r| r.kind.clone()));
        let q = match ring_kind.as_deref() {
            None | Some("jroot") => o.q.or(file.ring.as_ref().and_then(|r| r.q)).unwrap_or(d.q),
            Some("integers") => 1,
            Some(other) => return Err(config_err(format!("unknown ring kind {other:?} (expected jroot or integers)"))),
        };
        let modulus = o.modulus.or(file.ring.as_ref().and_then(|r| r.modulus));

        let file_group = file.group.as_ref();
        let group_kind = o.group.clone().or_else(|| file_group.map(|g| g.kind.clone()));
        let group = match group_kind.as_deref() {
            None | Some("adiag") | Some("adiag_cyclic") => {
                GroupSpec::Adiag { k: o.k.or(file_group.and_then(|g| g.k)).unwrap_or(3) }
            }
            Some("derived") => {
                let base = o
                    .base
                    .clone()
                    .or_else(|| file_group.and_then(|g| g.base.clone()))
                    .ok_or_else(|| config_err("a derived group needs a base such as cyclic:3"))?;
                let arity = o.arity.or(file_group.and_then(|g| g.arity)).unwrap_or(3);
                GroupSpec::Derived { order: parse_base(&base)?, arity }
            }
            Some(other) => {
                return Err(config_err(format!("unknown group kind {other:?} (expected adiag_cyclic or derived)")))
            }
        };

        let p = file.powers.clone().unwrap_or_default();
        Ok(ContextSpec {
            q,
            modulus,
            group,
            ell_m: o.ell_m.or(p.ell_m).unwrap_or(1),
            ell_n: o.ell_n.or(p.ell_n).unwrap_or(1),
            ell_g: o.ell_g.or(p.ell_g).unwrap_or(1),
        })
    }

    /// Builds the ring, group and validated profile.
    pub fn build(&self) -> Result<Context, DslError> {
        let mut ring = PolyadicRing::jroot(self.q)?;
        if let Some(n) = self.modulus {
            ring = ring.with_modulus(n)?;
        }
        let (m, n, g) = (self.ell_m, self.ell_n, self.ell_g);
        Ok(match self.group {
            GroupSpec::Adiag { k } => Context::Adiag(GroupRing::new(ring, AdiagCyclic::new(k)?, m, n, g)?),
            GroupSpec::Derived { order, arity } => {
                Context::Derived(GroupRing::new(ring, DerivedCyclic::new(order, arity)?, m, n, g)?)
            }
        })
    }
}

/// Parses configuration text.
pub fn parse_config(text: &str) -> Result<ConfigFile, DslError> {
    serde_json::from_str(text).map_err(|e| config_err(format!("invalid configuration: {e}")))
}

/// Reads the optional file at `path`, applies overrides and builds the
/// context.
pub fn load_config(path: Option<&Path>, overrides: &Overrides) -> Result<(ContextSpec, Context), DslError> {
    let file = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| config_err(format!("cannot read {}: {e}", p.display())))?;
            parse_config(&text)?
        }
        None => ConfigFile::default(),
    };
    let spec = ContextSpec::resolve(&file, overrides)?;
    let ctx = spec.build()?;
    Ok((spec, ctx))
}
