//! Exhaustive verification of the bounds and characterisations over every
//! small tree and connected bipartite graph, with JSON reports.

mod checks;
mod config;
mod scan;

pub use checks::{
    check_bipartite_bound, check_bipartite_conjecture, check_corona_extremal,
    check_domination_bounds, check_leaf_deficit_bound, check_leaf_surplus_bound,
    check_non_leaf_domination, check_partition, check_pendant_structure, check_tree_extremal,
    check_zeta1_characterization,
};
pub use config::{ConfigSnapshot, SuiteConfig};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CanonicalCode, VertexSet};
use crate::solver::Regime;

pub const REPORT_SCHEMA: &str = "distdom-report/1";
pub const SUMMARY_HEADER: &str = "check\td\tn_max\tscanned\tviolations\tseconds";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    BipartiteBound,
    Conjecture,
    CoronaExtremal,
    DominationBounds,
    LeafDeficitBound,
    LeafSurplusBound,
    NonLeafDomination,
    Partition,
    PendantStructure,
    TreeExtremal,
    Zeta1Characterization,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::BipartiteBound,
        CheckId::Conjecture,
        CheckId::CoronaExtremal,
        CheckId::DominationBounds,
        CheckId::LeafDeficitBound,
        CheckId::LeafSurplusBound,
        CheckId::NonLeafDomination,
        CheckId::Partition,
        CheckId::PendantStructure,
        CheckId::TreeExtremal,
        CheckId::Zeta1Characterization,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::BipartiteBound => "bipartite-bound",
            CheckId::Conjecture => "conjecture",
            CheckId::CoronaExtremal => "corona-extremal",
            CheckId::DominationBounds => "domination-bounds",
            CheckId::LeafDeficitBound => "leaf-deficit-bound",
            CheckId::LeafSurplusBound => "leaf-surplus-bound",
            CheckId::NonLeafDomination => "non-leaf-domination",
            CheckId::Partition => "partition",
            CheckId::PendantStructure => "pendant-structure",
            CheckId::TreeExtremal => "tree-extremal",
            CheckId::Zeta1Characterization => "zeta1-characterization",
        }
    }

    /// Checks quantified over connected bipartite graphs rather than trees.
    pub fn uses_bipartite_space(self) -> bool {
        matches!(
            self,
            CheckId::BipartiteBound | CheckId::Conjecture | CheckId::Partition
        )
    }

    /// Smallest radius the statement covers; `None` for statements about a
    /// fixed radius of 1, which run once regardless of the configured radii.
    pub fn min_d(self) -> Option<usize> {
        match self {
            CheckId::BipartiteBound | CheckId::CoronaExtremal | CheckId::Partition => Some(1),
            CheckId::NonLeafDomination | CheckId::Zeta1Characterization => None,
            _ => Some(2),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown check id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Violation,
    ConjectureCounterexample,
}

/// One failed instance, replayable from its canonical code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: CanonicalCode,
    pub n: usize,
    pub property: String,
    pub expected: String,
    pub observed: String,
    pub witness: VertexSet,
}

/// A set of bound-attaining codes against a structurally characterised set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub name: String,
    pub equality: Vec<CanonicalCode>,
    pub characterized: Vec<CanonicalCode>,
    pub only_in_equality: Vec<CanonicalCode>,
    pub only_in_characterized: Vec<CanonicalCode>,
    pub confirmed: bool,
}

/// An instance outside the statement's hypotheses that must fail it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeControl {
    pub name: String,
    pub code: CanonicalCode,
    pub expected: String,
    pub observed: String,
    pub confirmed: bool,
}

/// Tightness tally for one regime of the leaf-sensitive tree bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchTally {
    pub regime: Regime,
    pub label: &'static str,
    pub scanned: usize,
    /// Instances where the bound is attained exactly.
    pub exact: usize,
    /// Instances where the value equals the floor of the bound.
    pub floor_tight: usize,
    pub example: Option<CanonicalCode>,
    pub witnessed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub d: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub space: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub check: CheckId,
    pub status: Status,
    pub params: Params,
    /// Size of the enumerated stream for the declared space.
    pub scanned: usize,
    /// Instances meeting the statement's hypotheses.
    pub eligible: usize,
    pub violations: Vec<Violation>,
    pub comparisons: Vec<Comparison>,
    pub controls: Vec<NegativeControl>,
    pub branches: Vec<BranchTally>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigSnapshot>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn summary_row(&self) -> String {
        let seconds = self
            .seconds
            .map_or_else(|| "-".to_string(), |s| format!("{s:.3}"));
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.check,
            self.params.d,
            self.params.n_max,
            self.scanned,
            self.violations.len(),
            seconds
        )
    }

    /// File stem for the JSON document: `<check>-d<d>`.
    pub fn file_stem(&self) -> String {
        format!("{}-d{}", self.check, self.params.d)
    }
}

/// Execution switches that never change report content.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub shards: usize,
    pub timings: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            shards: 1,
            timings: false,
        }
    }
}

/// Runs one check at one radius.
pub fn run_check(id: CheckId, d: usize, n_max: usize, opts: ScanOptions) -> Result<Report> {
    let start = Instant::now();
    let mut report = match id {
        CheckId::BipartiteBound => check_bipartite_bound(d, n_max, opts)?,
        CheckId::Conjecture => check_bipartite_conjecture(d, n_max, opts)?,
        CheckId::CoronaExtremal => check_corona_extremal(d, n_max, opts)?,
        CheckId::DominationBounds => check_domination_bounds(d, n_max, opts)?,
        CheckId::LeafDeficitBound => check_leaf_deficit_bound(d, n_max, opts)?,
        CheckId::LeafSurplusBound => check_leaf_surplus_bound(d, n_max, opts)?,
        CheckId::NonLeafDomination => check_non_leaf_domination(n_max, opts)?,
        CheckId::Partition => check_partition(d, n_max, opts)?,
        CheckId::PendantStructure => check_pendant_structure(d, n_max, opts)?,
        CheckId::TreeExtremal => check_tree_extremal(d, n_max, opts)?,
        CheckId::Zeta1Characterization => check_zeta1_characterization(n_max, opts)?,
    };
    if opts.timings {
        report.seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

/// Every configured check at every applicable radius, sorted by check id
/// then radius. Radii below a check's minimum are skipped.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<Report>> {
    config.validate()?;
    let opts = ScanOptions {
        shards: config.shards,
        timings: config.timings,
    };
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    let mut reports = Vec::new();
    for id in checks {
        let radii: Vec<usize> = match id.min_d() {
            None => vec![1],
            Some(min) => config
                .d_values
                .iter()
                .copied()
                .filter(|&d| d >= min)
                .collect(),
        };
        for d in radii {
            let mut report = run_check(id, d, config.n_max(id), opts)?;
            report.config = Some(config.snapshot());
            reports.push(report);
        }
    }
    Ok(reports)
}

/// Process exit status for a set of reports: 2 when any statement is
/// violated, otherwise 3 when the conjecture scan found a counterexample,
/// otherwise 0.
pub fn exit_status(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Violation) {
        2
    } else if reports
        .iter()
        .any(|r| r.status == Status::ConjectureCounterexample)
    {
        3
    } else {
        0
    }
}

pub fn summary_tsv(reports: &[Report]) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.summary_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_sort() {
        for id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        let mut sorted = CheckId::ALL.to_vec();
        sorted.sort_by_key(|id| id.as_str());
        assert_eq!(sorted, CheckId::ALL.to_vec());
        assert!(matches!("bogus".parse::<CheckId>(), Err(Error::Config(_))));
    }

    #[test]
    fn empty_suite() {
        let cfg = SuiteConfig::parse("checks =").unwrap();
        let reports = run_suite(&cfg).unwrap();
        assert!(reports.is_empty());
        assert_eq!(exit_status(&reports), 0);
        assert_eq!(summary_tsv(&reports), format!("{SUMMARY_HEADER}\n"));
    }
}
