use serde::Serialize;

use super::{dominates, packs};
use crate::error::{Error, Result};
use crate::graph::{all_pairs, bfs_distances, diametrical_path, Distance, Graph, VertexSet};

/// `d + 1` disjoint independent d-distance dominating sets covering `V(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelPartition {
    pub parts: Vec<VertexSet>,
}

impl LevelPartition {
    pub fn smallest_part(&self) -> usize {
        self.parts.iter().map(Vec::len).min().unwrap_or(0)
    }
}

/// Partitions a connected bipartite graph of order at least `d + 1` into
/// `d + 1` independent d-distance dominating sets.
///
/// When the diameter exceeds `d`, the graph is layered by distance from the
/// first endpoint of [`diametrical_path`] and part `i` collects the layers
/// congruent to `i` modulo `d + 1`. Otherwise any non-empty set dominates,
/// and the two colour classes are cut into consecutive index slices: the
/// first side into `min(|X|, d)` slices and the second into the rest, the
/// first slice of each side taking the surplus.
pub fn level_partition(g: &Graph, d: usize) -> Result<LevelPartition> {
    if d == 0 {
        return Err(Error::ParameterOutOfRange("d must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let (x, y) = g.bipartition().ok_or(Error::NotBipartite)?;
    if g.order() < d + 1 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            required: d + 1,
        });
    }
    let table = all_pairs(g);
    let parts = if table.diameter() > Distance::Finite(d) {
        let root = diametrical_path(g)?.0[0];
        let mut parts = vec![Vec::new(); d + 1];
        for (v, dist) in bfs_distances(g, root).into_iter().enumerate() {
            let level = dist.finite().expect("connected");
            parts[level % (d + 1)].push(v);
        }
        parts
    } else {
        let kx = x.len().min(d);
        let ky = d + 1 - kx;
        let mut parts = slices(&x, kx);
        parts.extend(slices(&y, ky));
        parts
    };
    let partition = LevelPartition { parts };
    debug_assert!(verify_partition(g, &partition, d));
    Ok(partition)
}

/// Cuts `side` into `count` consecutive non-empty slices, the first one
/// absorbing the surplus.
fn slices(side: &[usize], count: usize) -> Vec<VertexSet> {
    if count == 0 {
        return Vec::new();
    }
    let first = side.len() - (count - 1);
    let mut out = vec![side[..first].to_vec()];
    out.extend(side[first..].iter().map(|&v| vec![v]));
    out
}

/// Checks all five partition properties: `d + 1` parts, non-empty, pairwise
/// disjoint, covering, and each part independent and d-distance dominating.
pub fn verify_partition(g: &Graph, partition: &LevelPartition, d: usize) -> bool {
    let parts = &partition.parts;
    if parts.len() != d + 1 || parts.iter().any(Vec::is_empty) {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in parts.iter().flatten() {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if seen.contains(&false) {
        return false;
    }
    let table = all_pairs(g);
    parts
        .iter()
        .all(|part| packs(&table, part, 1) && dominates(&table, part, d))
}
