//! Reference implementations shared by the integration tests. Nothing here
//! calls into the library's enumeration or canonical-form code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

pub type Edges = Vec<(usize, usize)>;

pub fn edge_list(g: &distdom::Graph) -> Edges {
    g.edges().collect()
}

/// Decodes a Prüfer sequence over `0..n` into the edges of a labelled tree.
pub fn prufer_edges(seq: &[usize], n: usize) -> Edges {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labelled tree on `n` vertices, one per Prüfer sequence.
pub fn labelled_trees(n: usize) -> impl Iterator<Item = Edges> {
    let len = n.saturating_sub(2);
    (0..len)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(move |seq| prufer_edges(&seq, n))
        .chain((len == 0).then(|| prufer_edges(&[], n)))
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn rooted_string(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_string(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism invariant for free trees: least rooted encoding over the
/// one or two centres, found by peeling leaves.
pub fn free_tree_key(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &adj[leaf] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&r| rooted_string(&adj, r, usize::MAX))
        .min()
        .unwrap()
}

/// Unlabelled trees of order `n` by Prüfer enumeration and dedup.
pub fn prufer_tree_keys(n: usize) -> BTreeSet<String> {
    labelled_trees(n).map(|e| free_tree_key(n, &e)).collect()
}

/// Least upper-triangle adjacency bit string over all vertex permutations.
pub fn brute_canon(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut matrix = vec![vec![false; n]; n];
    for &(u, v) in edges {
        matrix[u][v] = true;
        matrix[v][u] = true;
    }
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut bits = 0u64;
            for j in 1..n {
                for i in 0..j {
                    bits = (bits << 1) | matrix[perm[i]][perm[j]] as u64;
                }
            }
            bits
        })
        .min()
        .unwrap_or(0)
}

fn is_connected(n: usize, adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn is_bipartite(n: usize, adj: &[Vec<usize>]) -> bool {
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Isomorphism classes of connected bipartite graphs of order `n`, from
/// every edge subset of `K_n`. Feasible for `n ≤ 6`.
pub fn bipartite_classes_by_edge_subsets(n: usize) -> BTreeSet<u64> {
    let all: Edges = (0..n).tuple_combinations().collect();
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << all.len()) {
        let edges: Edges = (0..all.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| all[i])
            .collect();
        if edges.len() + 1 < n {
            continue;
        }
        let adj = adjacency(n, &edges);
        if is_connected(n, &adj) && is_bipartite(n, &adj) {
            classes.insert(brute_canon(n, &edges));
        }
    }
    classes
}

/// All-pairs BFS distances, `usize::MAX` when unreachable.
pub fn distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency(n, edges);
    (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Exhaustive `γ_d^p` with the lexicographically least optimal set, written
/// against raw distances only.
pub fn reference_gamma(
    n: usize,
    edges: &[(usize, usize)],
    d: usize,
    p: usize,
) -> Option<Vec<usize>> {
    let dist = distances(n, edges);
    (1..=n).find_map(|k| {
        (0..n).combinations(k).find(|s| {
            let packs = s.iter().tuple_combinations().all(|(&a, &b)| dist[a][b] > p);
            packs && (0..n).all(|u| s.iter().any(|&w| dist[u][w] <= d))
        })
    })
}
