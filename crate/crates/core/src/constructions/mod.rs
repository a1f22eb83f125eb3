//! Deterministic builders for the named graphs and extremal families.
//!
//! Builders that extend a graph keep the input vertices at their indices
//! and append new vertices in a fixed, documented order.

mod families;

pub use families::{
    bipartite_coronas, bipartite_coronas_with, domination_deficit_family, leaf_deficit_family,
    order_histogram, pendant_extensions, tree_coronas, zeta1_members, FamilyMember,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Label for the families the toolkit builds and recognises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    /// Coronas `H ∘ P_d` of connected bipartite graphs.
    BipartiteCorona,
    /// Coronas `T ∘ P_d` of trees on at least two vertices.
    TreeCorona,
    /// Recursive leaf-augmented trees, the `d = 1` equality family.
    Zeta1,
    /// Trees whose non-leaf core is in the matching base family (`F_d`).
    LeafDeficit,
    /// The plain-domination variant of [`FamilyTag::LeafDeficit`] (`F'_d`).
    DominationDeficit,
    /// The clique-with-pendant-paths graphs that break the bipartite bound.
    Counterexample,
    Primitive,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::BipartiteCorona => "B",
            FamilyTag::TreeCorona => "T",
            FamilyTag::Zeta1 => "zeta1",
            FamilyTag::LeafDeficit => "F",
            FamilyTag::DominationDeficit => "Fprime",
            FamilyTag::Counterexample => "counterexample",
            FamilyTag::Primitive => "primitive",
        };
        f.write_str(s)
    }
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(out_of_range("path needs at least 1 vertex"));
    }
    Ok(Graph::from_valid_edges(n, (1..n).map(|v| (v - 1, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("cycle needs at least 3 vertices"));
    }
    Ok(Graph::from_valid_edges(n, (0..n).map(|v| (v, (v + 1) % n))))
}

/// `K_{1,t}` with centre 0 and leaves `1..=t`.
pub fn star(t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(out_of_range("star needs at least 1 leaf"));
    }
    Ok(Graph::from_valid_edges(t + 1, (1..=t).map(|v| (0, v))))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(out_of_range("complete graph needs at least 1 vertex"));
    }
    Ok(Graph::from_valid_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// `K_{r,s}` with sides `0..r` and `r..r+s`.
pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    if r < 1 || s < 1 {
        return Err(out_of_range(
            "complete bipartite graph needs both sides non-empty",
        ));
    }
    Ok(Graph::from_valid_edges(
        r + s,
        (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))),
    ))
}

/// `D_{r,s}`: centres 0 and 1, then `r` leaves on 0 and `s` leaves on 1.
pub fn double_star(r: usize, s: usize) -> Result<Graph> {
    if r < 1 || s < 1 {
        return Err(out_of_range("double star needs r, s >= 1"));
    }
    let edges = std::iter::once((0, 1))
        .chain((0..r).map(|i| (0, 2 + i)))
        .chain((0..s).map(|i| (1, 2 + r + i)));
    Ok(Graph::from_valid_edges(r + s + 2, edges))
}

/// Certificate that a graph is `H ∘ P_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoronaDecomposition {
    /// Sorted anchor vertices, the image of `V(H)`.
    pub anchors: VertexSet,
    /// For each anchor, its attached path listed from the outer end inward.
    pub paths: BTreeMap<usize, Vec<usize>>,
}

impl CoronaDecomposition {
    /// The graph induced by the anchors, relabelled in anchor order.
    pub fn base(&self, g: &Graph) -> Graph {
        g.induced_subgraph(&self.anchors)
            .expect("corona has at least one anchor")
    }
}

/// `H ∘ P_d`. Anchor `i` keeps index `i`; its path occupies
/// `m + i·d .. m + (i+1)·d` with `m + i·d` adjacent to the anchor.
pub fn corona(h: &Graph, d: usize) -> Result<(Graph, CoronaDecomposition)> {
    if d < 1 {
        return Err(out_of_range("corona needs d >= 1"));
    }
    let m = h.order();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let mut paths = BTreeMap::new();
    for anchor in 0..m {
        let first = m + anchor * d;
        edges.push((anchor, first));
        edges.extend((first..first + d - 1).map(|u| (u, u + 1)));
        paths.insert(anchor, (first..first + d).rev().collect());
    }
    let g = Graph::from_valid_edges(m * (d + 1), edges);
    Ok((
        g,
        CoronaDecomposition {
            anchors: (0..m).collect(),
            paths,
        },
    ))
}

/// Replaces every edge by a path with `d` internal vertices. Original
/// vertices keep their indices; the internal vertices of the `k`-th edge
/// `(u, v)` (in [`Graph::edges`] order) are `n + k·d ..`, running from `u`.
pub fn d_subdivision(t: &Graph, d: usize) -> Graph {
    let n = t.order();
    let mut edges = Vec::new();
    for (k, (u, v)) in t.edges().enumerate() {
        let mut prev = u;
        for i in 0..d {
            let w = n + k * d + i;
            edges.push((prev, w));
            prev = w;
        }
        edges.push((prev, v));
    }
    Graph::from_valid_edges(n + d * t.size(), edges)
}

/// `K_n` with `k` pendant copies of `P_d` on every clique vertex.
pub fn counterexample_gnkd(n: usize, k: usize, d: usize) -> Result<Graph> {
    if d < 1 || n < d + 2 || k < 2 {
        return Err(out_of_range(format!(
            "need d >= 1, n >= d+2, k >= 2 (got n={n}, k={k}, d={d})"
        )));
    }
    let mut g = complete(n)?;
    for v in 0..n {
        for _ in 0..k {
            g = g.attach_path(v, d)?;
        }
    }
    Ok(g)
}

/// `(d−1)`-subdivisions of `K_{1,t1}` and `K_{1,t2}` with their centres
/// joined. Centres are 0 and 1.
pub fn joined_subdivided_stars(t1: usize, t2: usize, d: usize) -> Result<Graph> {
    if t1 < 2 || t2 < 2 || d < 2 {
        return Err(out_of_range(format!(
            "need t1, t2 >= 2 and d >= 2 (got {t1}, {t2}, {d})"
        )));
    }
    let mut g = path(2)?;
    for (centre, legs) in [(0, t1), (1, t2)] {
        for _ in 0..legs {
            g = g.attach_path(centre, d)?;
        }
    }
    Ok(g)
}

/// The spider obtained by attaching `legs.len()` paths to a single centre.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(1)?;
    for &len in legs {
        g = g.attach_path(0, len)?;
    }
    Ok(g)
}
