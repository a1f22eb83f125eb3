//! Exact d-distance p-packing domination.
//!
//! A set `S` is a *d-distance dominating set* when every vertex outside `S`
//! lies within distance `d` of a member, and a *p-packing* when members are
//! pairwise at distance at least `p + 1`. `γ_d^p` is the smallest set with
//! both properties, or infinite when none exists.

mod bounds;
mod partition;
mod search;

pub use bounds::{bound_sheet, BoundSheet, Regime};
pub use partition::{level_partition, verify_partition, LevelPartition};

use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{all_pairs, DistanceTable, Graph, VertexSet};

/// Distance radius `d ≥ 1` and packing separation `p ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DominationQuery {
    pub d: usize,
    pub p: usize,
}

impl DominationQuery {
    pub fn new(d: usize, p: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ParameterOutOfRange("d must be at least 1".into()));
        }
        Ok(DominationQuery { d, p })
    }

    /// `γ_d`, plain distance domination.
    pub fn domination(d: usize) -> Result<Self> {
        Self::new(d, 0)
    }

    /// `γ_d^1`, distance independent domination.
    pub fn independent(d: usize) -> Result<Self> {
        Self::new(d, 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gamma {
    Finite(usize),
    Infinite,
}

impl Gamma {
    pub fn finite(self) -> Option<usize> {
        match self {
            Gamma::Finite(k) => Some(k),
            Gamma::Infinite => None,
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gamma::Finite(k) => write!(f, "{k}"),
            Gamma::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Gamma {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Gamma::Finite(k) => s.serialize_u64(*k as u64),
            Gamma::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Optimum value with the lexicographically least optimal set (empty when
/// the value is infinite).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaWitness {
    pub value: Gamma,
    pub witness: VertexSet,
}

impl GammaWitness {
    fn infinite() -> Self {
        GammaWitness {
            value: Gamma::Infinite,
            witness: Vec::new(),
        }
    }

    fn found(witness: VertexSet) -> Self {
        GammaWitness {
            value: Gamma::Finite(witness.len()),
            witness,
        }
    }
}

fn check_members(g: &Graph, s: &[usize]) {
    assert!(s.iter().all(|&v| v < g.order()), "vertex set out of range");
}

pub fn is_d_dominating(g: &Graph, s: &[usize], d: usize) -> bool {
    check_members(g, s);
    dominates(&all_pairs(g), s, d)
}

pub fn is_p_packing(g: &Graph, s: &[usize], p: usize) -> bool {
    check_members(g, s);
    packs(&all_pairs(g), s, p)
}

pub(crate) fn dominates(table: &DistanceTable, s: &[usize], d: usize) -> bool {
    (0..table.order()).all(|u| s.contains(&u) || s.iter().any(|&w| table.within(u, w, d)))
}

pub(crate) fn packs(table: &DistanceTable, s: &[usize], p: usize) -> bool {
    s.iter()
        .tuple_combinations()
        .all(|(&a, &b)| a != b && !table.within(a, b, p))
}

/// Exact `γ_d^p` via pruned branching; rejects disconnected graphs.
pub fn gamma(g: &Graph, q: DominationQuery) -> Result<GammaWitness> {
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    Ok(search::Searcher::new(g, q).solve())
}

/// Reference solver: subsets by size, then lexicographically, each tested
/// directly against both predicates.
pub fn gamma_bruteforce(g: &Graph, q: DominationQuery) -> Result<GammaWitness> {
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let table = all_pairs(g);
    let n = g.order();
    for k in 1..=n {
        if let Some(set) = (0..n)
            .combinations(k)
            .find(|s| packs(&table, s, q.p) && dominates(&table, s, q.d))
        {
            return Ok(GammaWitness::found(set));
        }
    }
    Ok(GammaWitness::infinite())
}
