use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

/// Hop count between two vertices, or `Infinite` when no path exists.
///
/// `Finite` values order before `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(k) => Some(k),
            Distance::Infinite => None,
        }
    }

    pub fn is_within(self, radius: usize) -> bool {
        matches!(self, Distance::Finite(k) if k <= radius)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(k) => write!(f, "{k}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(k) => s.serialize_u64(*k as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

const UNREACHED: u32 = u32::MAX;

fn bfs_raw(g: &Graph, source: usize, out: &mut [u32]) {
    out.fill(UNREACHED);
    out[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = out[u] + 1;
        for &w in g.neighbors(u) {
            if out[w] == UNREACHED {
                out[w] = next;
                queue.push_back(w);
            }
        }
    }
}

/// Shortest-path hop counts from `source` to every vertex.
///
/// Panics if `source` is not a vertex of `g`.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Distance> {
    assert!(source < g.order(), "source {source} out of range");
    let mut raw = vec![0; g.order()];
    bfs_raw(g, source, &mut raw);
    raw.into_iter().map(to_distance).collect()
}

fn to_distance(raw: u32) -> Distance {
    if raw == UNREACHED {
        Distance::Infinite
    } else {
        Distance::Finite(raw as usize)
    }
}

/// All-pairs hop counts, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    raw: Vec<u32>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        to_distance(self.raw[u * self.n + v])
    }

    /// `d(u, v) ≤ radius`, false for disconnected pairs.
    pub fn within(&self, u: usize, v: usize, radius: usize) -> bool {
        let r = self.raw[u * self.n + v];
        r != UNREACHED && r as usize <= radius
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = Distance> + '_ {
        self.raw[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&r| to_distance(r))
    }

    /// Largest entry; `Infinite` for disconnected graphs.
    pub fn diameter(&self) -> Distance {
        self.raw
            .iter()
            .map(|&r| to_distance(r))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Eccentricity of `u`.
    pub fn eccentricity(&self, u: usize) -> Distance {
        self.row(u).max().unwrap_or(Distance::Finite(0))
    }
}

pub fn all_pairs(g: &Graph) -> DistanceTable {
    let n = g.order();
    let mut raw = vec![0; n * n];
    for (u, row) in raw.chunks_mut(n).enumerate() {
        bfs_raw(g, u, row);
    }
    DistanceTable { n, raw }
}

/// A simple path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path(pub Vec<usize>);

impl Path {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.order()];
        for &v in &self.0 {
            if v >= g.order() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// A shortest path from `from` to `to`, walking back along BFS parents;
/// ties go to the smallest-index predecessor.
pub(crate) fn shortest_path(
    g: &Graph,
    dist: &DistanceTable,
    from: usize,
    to: usize,
) -> Option<Path> {
    let mut remaining = dist.get(from, to).finite()?;
    let mut path = vec![to];
    let mut cur = to;
    while remaining > 0 {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist.get(from, w) == Distance::Finite(remaining - 1))?;
        path.push(cur);
        remaining -= 1;
    }
    path.reverse();
    Some(Path(path))
}

/// A shortest path whose length equals the diameter. The endpoints are the
/// lexicographically least pair realising the diameter.
pub fn diametrical_path(g: &Graph) -> Result<Path> {
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let table = all_pairs(g);
    let diam = table.diameter();
    let n = g.order();
    let (u, v) = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .find(|&(u, v)| table.get(u, v) == diam)
        .expect("connected graph realises its diameter");
    Ok(shortest_path(g, &table, u, v).expect("connected"))
}
