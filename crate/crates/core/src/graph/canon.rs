//! Canonical forms used for isomorphism-free enumeration.
//!
//! A [`CanonicalCode`] is the graph6 string of a canonically relabelled copy
//! of the graph, so every code can be decoded back into a representative.
//! Trees and general graphs use different relabelling rules; within each
//! kind, equal codes mean isomorphic graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::format::{decode_graph6, encode_graph6};
use super::Graph;
use crate::error::{Error, Result};

/// Default order cap for [`graph_canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 10;

/// Cap used by [`canonical_code`] for non-tree graphs; the refinement-pruned
/// search stays fast well past the default cap on the sparse graphs built here.
const DISPATCH_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative this code encodes.
    pub fn decode(&self) -> Graph {
        decode_graph6(&self.0, 1).expect("canonical codes are valid graph6")
    }

    pub fn from_graph6(text: impl Into<String>) -> Result<CanonicalCode> {
        let text = text.into();
        decode_graph6(&text, 1)?;
        Ok(CanonicalCode(text))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Tree code for trees, refined-search code otherwise.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    if g.is_tree() {
        tree_canonical_form(g)
    } else {
        graph_canonical_form_capped(g, DISPATCH_CAP)
    }
}

/// Centre-rooted canonical encoding of a free tree.
///
/// The tree is rooted at each centre in turn, children are ordered by their
/// subtree strings, and the root with the smaller string wins. The code is the
/// graph6 of the resulting preorder labelling.
pub fn tree_canonical_form(t: &Graph) -> Result<CanonicalCode> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let best = centers(t)
        .into_iter()
        .map(|root| rooted_encoding(t, root))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("a tree has a centre");
    Ok(CanonicalCode(encode_graph6(&t.relabel(&best.1))))
}

/// Centre vertices (one or two) found by repeated leaf stripping.
fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = t.degree_sequence();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Parenthesis string of `t` rooted at `root` together with the preorder
/// visiting sequence that follows the sorted child order.
fn rooted_encoding(t: &Graph, root: usize) -> (Vec<u8>, Vec<usize>) {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<usize> = t
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != parent[u])
            .collect();
        kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        let mut code = vec![b'('];
        for &k in &kids {
            code.extend_from_slice(&codes[k]);
        }
        code.push(b')');
        codes[u] = code;
        children[u] = kids;
    }
    let mut preorder = Vec::with_capacity(n);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        preorder.push(u);
        stack.extend(children[u].iter().rev());
    }
    (std::mem::take(&mut codes[root]), preorder)
}

/// Minimum graph6 bit string over all vertex orders, with the default cap.
pub fn graph_canonical_form(g: &Graph) -> Result<CanonicalCode> {
    graph_canonical_form_capped(g, DEFAULT_CANON_CAP)
}

/// Minimum graph6 bit string over every vertex order that lists the colour
/// classes of the stable colour refinement in increasing colour order. The
/// restriction is isomorphism-invariant, so the minimum is still canonical.
pub fn graph_canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalCode> {
    let n = g.order();
    if n > cap.min(64) {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: cap.min(64),
        });
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let colors = refine_colors(g);
    let mut slot_color: Vec<usize> = colors.clone();
    slot_color.sort_unstable();

    let mut search = MinSearch {
        masks: &masks,
        colors: &colors,
        slot_color: &slot_color,
        current: Vec::with_capacity(n),
        used: 0,
        columns: Vec::with_capacity(n),
        best: None,
        best_columns: Vec::new(),
    };
    search.descend();
    let order = search.best.expect("at least one ordering exists");
    Ok(CanonicalCode(encode_graph6(&g.relabel(&order))))
}

/// Stable colour refinement with isomorphism-invariant colour ids.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(values: &[usize]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct MinSearch<'a> {
    masks: &'a [u64],
    colors: &'a [usize],
    slot_color: &'a [usize],
    current: Vec<usize>,
    used: u64,
    columns: Vec<u64>,
    best: Option<Vec<usize>>,
    best_columns: Vec<u64>,
}

impl MinSearch<'_> {
    /// Column of `v` against the vertices already placed, row 0 in the most
    /// significant bit. Columns at one depth share a length, so integer order
    /// is graph6 bit order.
    fn column(&self, v: usize) -> u64 {
        self.current
            .iter()
            .fold(0u64, |acc, &u| (acc << 1) | ((self.masks[v] >> u) & 1))
    }

    fn descend(&mut self) {
        let p = self.current.len();
        let n = self.masks.len();
        if p == n {
            if self.best.is_none() || self.columns < self.best_columns {
                self.best = Some(self.current.clone());
                self.best_columns = self.columns.clone();
            }
            return;
        }
        let want = self.slot_color[p];
        for v in 0..n {
            if self.used & (1 << v) != 0 || self.colors[v] != want {
                continue;
            }
            let col = self.column(v);
            self.columns.push(col);
            let viable = self.best.is_none() || self.columns[..] <= self.best_columns[..=p];
            if viable {
                self.current.push(v);
                self.used |= 1 << v;
                self.descend();
                self.used &= !(1 << v);
                self.current.pop();
            }
            self.columns.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, path, star};
    use itertools::Itertools;

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
    }

    /// Oracle: minimum graph6 over every permutation.
    fn brute_min_graph6(g: &Graph) -> String {
        (0..g.order())
            .permutations(g.order())
            .map(|p| encode_graph6(&g.relabel(&p)))
            .min()
            .unwrap()
    }

    #[test]
    fn tree_codes_are_relabelling_invariant() {
        let p4 = path(4).unwrap();
        let q = permuted(&p4, &[2, 0, 3, 1]);
        assert_eq!(
            tree_canonical_form(&p4).unwrap(),
            tree_canonical_form(&q).unwrap()
        );
        assert_ne!(
            tree_canonical_form(&p4).unwrap(),
            tree_canonical_form(&star(3).unwrap()).unwrap()
        );
        assert_eq!(
            tree_canonical_form(&cycle(4).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn labelled_trees_on_four_vertices_give_two_codes() {
        // oracle: every labelled tree on 4 vertices (all 3-edge subsets of K_4 that are trees)
        let all_edges: Vec<(usize, usize)> = (0..4).tuple_combinations().collect();
        let mut codes = std::collections::BTreeSet::new();
        let mut labelled = 0;
        for subset in all_edges.iter().copied().combinations(3) {
            let g = Graph::from_edges(4, subset).unwrap();
            if g.is_tree() {
                labelled += 1;
                codes.insert(tree_canonical_form(&g).unwrap());
            }
        }
        assert_eq!(labelled, 16);
        assert_eq!(codes.len(), 2);
    }

    #[test]
    fn graph_codes_examples() {
        let c4 = cycle(4).unwrap();
        let q = permuted(&c4, &[1, 3, 0, 2]);
        assert_eq!(
            graph_canonical_form(&c4).unwrap(),
            graph_canonical_form(&q).unwrap()
        );
        assert_ne!(
            graph_canonical_form(&c4).unwrap(),
            graph_canonical_form(&path(4).unwrap()).unwrap()
        );
        assert_eq!(
            graph_canonical_form(&path(11).unwrap()),
            Err(Error::OrderTooLarge { order: 11, cap: 10 })
        );
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let all_edges: Vec<(usize, usize)> = (0..4).tuple_combinations().collect();
        let mut codes = std::collections::BTreeSet::new();
        let mut oracle = std::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let edges = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e);
            let g = Graph::from_edges(4, edges).unwrap();
            codes.insert(graph_canonical_form(&g).unwrap());
            oracle.insert(brute_min_graph6(&g));
        }
        assert_eq!(oracle.len(), 11);
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn refined_search_matches_full_permutation_minimum_classes() {
        // every graph on 5 vertices: refined codes induce the same partition as brute force
        let all_edges: Vec<(usize, usize)> = (0..5).tuple_combinations().collect();
        let mut pairs = std::collections::BTreeMap::new();
        for mask in 0u32..1024 {
            let edges = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e);
            let g = Graph::from_edges(5, edges).unwrap();
            let refined = graph_canonical_form(&g).unwrap();
            let brute = brute_min_graph6(&g);
            let prev = pairs.insert(brute.clone(), refined.clone());
            if let Some(p) = prev {
                assert_eq!(p, refined, "isomorphic graphs got different codes");
            }
        }
        assert_eq!(pairs.len(), 34);
        let distinct: std::collections::BTreeSet<_> = pairs.values().collect();
        assert_eq!(distinct.len(), 34);
    }

    #[test]
    fn codes_decode_to_isomorphic_representatives() {
        for g in [
            cycle(6).unwrap(),
            complete_bipartite(2, 3).unwrap(),
            complete(4).unwrap(),
        ] {
            let code = graph_canonical_form(&g).unwrap();
            let rep = code.decode();
            assert_eq!(graph_canonical_form(&rep).unwrap(), code);
        }
        let t = star(4).unwrap();
        let code = tree_canonical_form(&t).unwrap();
        assert_eq!(tree_canonical_form(&code.decode()).unwrap(), code);
    }
}
