use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use super::CheckId;
use crate::error::{Error, Result};

/// Suite configuration, read from `key = value` lines.
///
/// ```text
/// # comment
/// checks = all            # or a comma-separated list of check ids
/// d = 2,3
/// tree_n_max = 12
/// bipartite_n_max = 8
/// n_max.tree-extremal = 13
/// shards = 4
/// timings = false
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub checks: Vec<CheckId>,
    pub d_values: Vec<usize>,
    pub tree_n_max: usize,
    pub bipartite_n_max: usize,
    pub overrides: BTreeMap<CheckId, usize>,
    pub shards: usize,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            checks: CheckId::ALL.to_vec(),
            d_values: vec![2, 3],
            tree_n_max: 12,
            bipartite_n_max: 8,
            overrides: BTreeMap::new(),
            shards: 1,
            timings: false,
        }
    }
}

/// The parts of a configuration that determine report content. Shard count
/// and timing switches are left out so reports compare equal across them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigSnapshot {
    pub checks: Vec<CheckId>,
    pub d_values: Vec<usize>,
    pub tree_n_max: usize,
    pub bipartite_n_max: usize,
    pub overrides: BTreeMap<CheckId, usize>,
}

fn config_error(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Config(format!("line {line}: {msg}"))
}

fn number<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| {
        config_error(
            line,
            format!("{key} expects a non-negative integer, got {value:?}"),
        )
    })
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<SuiteConfig> {
        let mut cfg = SuiteConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| {
                config_error(line, format!("expected key = value, got {content:?}"))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "checks" => {
                    cfg.checks = if value == "all" {
                        CheckId::ALL.to_vec()
                    } else {
                        let mut ids = value
                            .split(',')
                            .map(str::trim)
                            .filter(|s| !s.is_empty())
                            .map(|s| s.parse().map_err(|e: Error| config_error(line, e)))
                            .collect::<Result<Vec<CheckId>>>()?;
                        ids.sort();
                        ids.dedup();
                        ids
                    };
                }
                "d" => {
                    let mut ds = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| number::<usize>(line, key, s))
                        .collect::<Result<Vec<_>>>()?;
                    if ds.contains(&0) {
                        return Err(config_error(line, "d values must be at least 1"));
                    }
                    ds.sort_unstable();
                    ds.dedup();
                    cfg.d_values = ds;
                }
                "tree_n_max" => cfg.tree_n_max = number(line, key, value)?,
                "bipartite_n_max" => cfg.bipartite_n_max = number(line, key, value)?,
                "shards" => {
                    cfg.shards = number(line, key, value)?;
                    if cfg.shards == 0 {
                        return Err(config_error(line, "shards must be at least 1"));
                    }
                }
                "timings" => {
                    cfg.timings = match value {
                        "true" | "yes" | "1" => true,
                        "false" | "no" | "0" => false,
                        other => {
                            return Err(config_error(
                                line,
                                format!("timings expects true or false, got {other:?}"),
                            ))
                        }
                    }
                }
                other => match other.strip_prefix("n_max.") {
                    Some(id) => {
                        let id: CheckId = id.parse().map_err(|e: Error| config_error(line, e))?;
                        cfg.overrides.insert(id, number(line, key, value)?);
                    }
                    None => return Err(config_error(line, format!("unknown key {other:?}"))),
                },
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let tree_cap = crate::enumeration::TREE_ORDER_CAP;
        let bip_cap = crate::enumeration::BIPARTITE_ORDER_CAP;
        if self.tree_n_max > tree_cap {
            return Err(Error::Config(format!(
                "tree_n_max {} exceeds the cap {tree_cap}",
                self.tree_n_max
            )));
        }
        if self.bipartite_n_max > bip_cap {
            return Err(Error::Config(format!(
                "bipartite_n_max {} exceeds the cap {bip_cap}",
                self.bipartite_n_max
            )));
        }
        for (&id, &n) in &self.overrides {
            let cap = if id.uses_bipartite_space() {
                bip_cap
            } else {
                tree_cap
            };
            if n > cap {
                return Err(Error::Config(format!(
                    "n_max.{id} = {n} exceeds the cap {cap}"
                )));
            }
        }
        if self.shards == 0 {
            return Err(Error::Config("shards must be at least 1".into()));
        }
        Ok(())
    }

    /// The order cap that applies to `id`.
    pub fn n_max(&self, id: CheckId) -> usize {
        self.overrides
            .get(&id)
            .copied()
            .unwrap_or(if id.uses_bipartite_space() {
                self.bipartite_n_max
            } else {
                self.tree_n_max
            })
    }

    pub fn snapshot(&self) -> ConfigSnapshot {
        ConfigSnapshot {
            checks: self.checks.clone(),
            d_values: self.d_values.clone(),
            tree_n_max: self.tree_n_max,
            bipartite_n_max: self.bipartite_n_max,
            overrides: self.overrides.clone(),
        }
    }
}
