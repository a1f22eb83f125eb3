//! Isomorphism-free generation of trees and connected bipartite graphs.

mod bipartite;
mod trees;

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hasher;
use std::str::FromStr;

use fnv::FnvHasher;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{tree_canonical_form, CanonicalCode, Graph};

pub const TREE_ORDER_CAP: usize = 18;
pub const BIPARTITE_ORDER_CAP: usize = 9;

/// A canonical code with its decoded representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGraph {
    pub code: CanonicalCode,
    pub graph: Graph,
}

impl CanonicalGraph {
    pub fn from_code(code: CanonicalCode) -> Self {
        let graph = code.decode();
        CanonicalGraph { code, graph }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    Trees,
    ConnectedBipartite,
}

impl SpaceKind {
    pub fn cap(self) -> usize {
        match self {
            SpaceKind::Trees => TREE_ORDER_CAP,
            SpaceKind::ConnectedBipartite => BIPARTITE_ORDER_CAP,
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::Trees => "trees",
            SpaceKind::ConnectedBipartite => "connected-bipartite",
        })
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" | "tree" => Ok(SpaceKind::Trees),
            "connected-bipartite" | "bipartite" => Ok(SpaceKind::ConnectedBipartite),
            other => Err(Error::ParameterOutOfRange(format!(
                "unknown space kind {other:?}"
            ))),
        }
    }
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange(
            "order must be at least 1".into(),
        ));
    }
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    Ok(())
}

/// Every unlabelled tree on `n` vertices once, in canonical-code order.
pub fn all_trees(n: usize) -> Result<Vec<CanonicalGraph>> {
    check_order(n, TREE_ORDER_CAP)?;
    let codes: BTreeSet<CanonicalCode> = if n <= 2 {
        let g = Graph::from_valid_edges(n, (1..n).map(|v| (0, v)));
        BTreeSet::from([tree_canonical_form(&g)?])
    } else {
        trees::LevelSequences::new(n)
            .map(|layout| tree_canonical_form(&trees::layout_to_graph(&layout)).expect("tree"))
            .collect()
    };
    Ok(codes.into_iter().map(CanonicalGraph::from_code).collect())
}

/// Every unlabelled connected bipartite graph on `n` vertices once, in
/// canonical-code order.
pub fn all_connected_bipartite(n: usize) -> Result<Vec<CanonicalGraph>> {
    check_order(n, BIPARTITE_ORDER_CAP)?;
    let codes = if n == 1 {
        BTreeSet::from([crate::graph::graph_canonical_form(&Graph::empty(1)?)?])
    } else {
        bipartite::connected_bipartite_codes(n)
    };
    Ok(codes.into_iter().map(CanonicalGraph::from_code).collect())
}

/// One order of one graph class, optionally filtered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationSpace {
    pub kind: SpaceKind,
    pub order: usize,
    /// Keep only graphs with exactly this many leaves.
    pub leaves: Option<usize>,
    /// Keep only graphs whose diameter lies in this inclusive range.
    pub diameter: Option<(usize, usize)>,
}

impl EnumerationSpace {
    pub fn new(kind: SpaceKind, order: usize) -> Result<Self> {
        check_order(order, kind.cap())?;
        Ok(EnumerationSpace {
            kind,
            order,
            leaves: None,
            diameter: None,
        })
    }

    pub fn with_leaves(mut self, leaves: usize) -> Self {
        self.leaves = Some(leaves);
        self
    }

    pub fn with_diameter(mut self, min: usize, max: usize) -> Self {
        self.diameter = Some((min, max));
        self
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let leaves_ok = self.leaves.is_none_or(|l| g.leaves().len() == l);
        let diameter_ok = self.diameter.is_none_or(|(lo, hi)| {
            g.diameter()
                .finite()
                .is_some_and(|s| (lo..=hi).contains(&s))
        });
        leaves_ok && diameter_ok
    }

    /// The filtered stream in canonical-code order.
    pub fn enumerate(&self) -> Result<Vec<CanonicalGraph>> {
        let all = match self.kind {
            SpaceKind::Trees => all_trees(self.order)?,
            SpaceKind::ConnectedBipartite => all_connected_bipartite(self.order)?,
        };
        Ok(all.into_iter().filter(|c| self.accepts(&c.graph)).collect())
    }

    /// Splits the stream into `shards` disjoint parts by a stable hash of
    /// each canonical code.
    pub fn shard(&self, shards: usize) -> Result<Vec<Vec<CanonicalGraph>>> {
        if shards == 0 {
            return Err(Error::ParameterOutOfRange(
                "shard count must be at least 1".into(),
            ));
        }
        let mut parts = vec![Vec::new(); shards];
        for item in self.enumerate()? {
            parts[shard_of(&item.code, shards)].push(item);
        }
        Ok(parts)
    }
}

/// Shard index of a code: FNV-1a of its bytes modulo `shards`.
pub fn shard_of(code: &CanonicalCode, shards: usize) -> usize {
    let mut h = FnvHasher::default();
    h.write(code.as_str().as_bytes());
    (h.finish() % shards as u64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path, star};
    use crate::graph::graph_canonical_form;

    #[test]
    fn small_tree_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| all_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn order_four_trees() {
        let got: BTreeSet<CanonicalCode> =
            all_trees(4).unwrap().into_iter().map(|c| c.code).collect();
        let want = BTreeSet::from([
            tree_canonical_form(&path(4).unwrap()).unwrap(),
            tree_canonical_form(&star(3).unwrap()).unwrap(),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn order_four_bipartite() {
        let got: BTreeSet<CanonicalCode> = all_connected_bipartite(4)
            .unwrap()
            .into_iter()
            .map(|c| c.code)
            .collect();
        let want: BTreeSet<CanonicalCode> = [path(4), star(3), cycle(4)]
            .into_iter()
            .map(|g| graph_canonical_form(&g.unwrap()).unwrap())
            .collect();
        assert_eq!(got, want);
        assert_eq!(all_connected_bipartite(1).unwrap().len(), 1);
        assert_eq!(all_connected_bipartite(3).unwrap()[0].graph.size(), 2);
    }

    #[test]
    fn caps() {
        assert_eq!(
            all_trees(19),
            Err(Error::OrderTooLarge { order: 19, cap: 18 })
        );
        assert_eq!(
            all_connected_bipartite(10),
            Err(Error::OrderTooLarge { order: 10, cap: 9 })
        );
        assert!(all_trees(0).is_err());
    }

    #[test]
    fn shards_partition_the_stream() {
        let space = EnumerationSpace::new(SpaceKind::Trees, 7).unwrap();
        assert_eq!(space.shard(1).unwrap()[0].len(), 11);
        let parts = space.shard(3).unwrap();
        assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 11);
        assert_eq!(parts, space.shard(3).unwrap());
    }

    #[test]
    fn filters() {
        let space = EnumerationSpace::new(SpaceKind::Trees, 6)
            .unwrap()
            .with_leaves(2);
        assert_eq!(space.enumerate().unwrap().len(), 1);
        let space = EnumerationSpace::new(SpaceKind::Trees, 6)
            .unwrap()
            .with_diameter(2, 3);
        assert_eq!(space.enumerate().unwrap().len(), 3);
    }
}
