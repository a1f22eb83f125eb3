//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Every builder that grows a graph
//! returns a new value with the added vertices appended after the existing
//! ones, so vertex indices of the input stay valid in the output.

mod canon;
mod distance;
mod format;

pub use canon::{
    canonical_code, graph_canonical_form, graph_canonical_form_capped, tree_canonical_form,
    CanonicalCode, DEFAULT_CANON_CAP,
};
pub use distance::{all_pairs, bfs_distances, diametrical_path, Distance, DistanceTable, Path};
pub use format::{detect_format, parse_graph, parse_graphs, serialize_graph, GraphFormat};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Sorted list of distinct vertex indices.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list, rejecting loops,
    /// out-of-range endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("order must be at least 1".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Internal constructor for builders whose edges are known to be valid.
    pub(crate) fn from_valid_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Graph {
        Graph::from_edges(n, edges).expect("builder produced an invalid edge set")
    }

    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, [])
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Leaves adjacent to `v`.
    pub fn leaf_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| self.degree(w) == 1)
            .collect()
    }

    /// Vertices adjacent to at least one leaf.
    pub fn support_vertices(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.adj[v].iter().any(|&w| self.degree(w) == 1))
            .collect()
    }

    /// The 2-colouring `(X, Y)` with vertex 0 in `X`, or `None` when an odd
    /// cycle exists. Each side is sorted.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let x = (0..n).filter(|&v| side[v] == Some(false)).collect();
        let y = (0..n).filter(|&v| side[v] == Some(true)).collect();
        Some((x, y))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Attaches a fresh path on `k ≥ 1` vertices to `v`. The new vertices get
    /// indices `n..n+k`, with `n` adjacent to `v` and `n+k-1` the far end.
    pub fn attach_path(&self, v: usize, k: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::ParameterOutOfRange(format!(
                "vertex {v} out of range"
            )));
        }
        if k == 0 {
            return Err(Error::ParameterOutOfRange(
                "path length must be at least 1".into(),
            ));
        }
        let n = self.order();
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((v, n));
        edges.extend((n..n + k - 1).map(|u| (u, u + 1)));
        Ok(Graph::from_valid_edges(n + k, edges))
    }

    /// Adds `count` new leaves adjacent to `v`, appended as `n..n+count`.
    pub fn attach_leaves(&self, v: usize, count: usize) -> Graph {
        let n = self.order();
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend((n..n + count).map(|u| (v, u)));
        Graph::from_valid_edges(n + count, edges)
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the order
    /// given. Returns `None` when `keep` is empty.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Option<Graph> {
        if keep.is_empty() {
            return None;
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Some(Graph::from_valid_edges(keep.len(), edges))
    }

    /// `G − L(G)`: the subgraph induced by the non-leaves.
    pub fn remove_leaves(&self) -> Option<Graph> {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| self.degree(v) != 1).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        self.induced_subgraph(perm).expect("non-empty graph")
    }

    pub fn diameter(&self) -> Distance {
        all_pairs(self).diameter()
    }
}
