//! Free trees from rooted level sequences.
//!
//! A rooted tree is stored as the depths of its vertices in preorder. The
//! successor step yields rooted trees in reverse lexicographic order, and a
//! validity test keeps exactly one sequence per free tree: the one rooted at
//! a centre with the tallest subtree first. Invalid runs are skipped in one
//! jump, so the amortised cost per tree is constant.

use crate::graph::Graph;

/// Level sequences of all free trees on `n ≥ 3` vertices.
pub(super) struct LevelSequences {
    next: Option<Vec<usize>>,
}

impl LevelSequences {
    pub(super) fn new(n: usize) -> Self {
        assert!(n >= 3);
        // the path, rooted at its centre
        let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        LevelSequences { next: Some(layout) }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let mut layout = self.next.take()?;
        loop {
            match validate(&layout) {
                Ok(()) => break,
                Err(jump) => layout = jump?,
            }
        }
        self.next = next_rooted(&layout, None);
        Some(layout)
    }
}

fn next_rooted(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut out = prev.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits at the second child of the root: the first subtree (depths
/// shifted up) and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &depth)| depth == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|x| x - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

/// `Ok` for a canonical free-tree sequence, otherwise the next candidate to
/// try (or `None` when the sequence space is exhausted).
fn validate(layout: &[usize]) -> Result<(), Option<Vec<usize>>> {
    let (left, rest) = split(layout);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh {
        valid = left.len() < rest.len() || (left.len() == rest.len() && left <= rest);
    }
    if valid {
        return Ok(());
    }
    let p = left.len();
    let Some(mut jump) = next_rooted(layout, Some(p)) else {
        return Err(None);
    };
    if layout[p] > 2 {
        let (new_left, _) = split(&jump);
        let height = new_left.iter().max().copied().unwrap_or(0);
        let len = jump.len();
        for (slot, depth) in jump[len - height - 1..].iter_mut().zip(1..) {
            *slot = depth;
        }
    }
    Err(Some(jump))
}

/// The tree with parent of vertex `i` the closest earlier vertex one level up.
pub(super) fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (v, &depth) in layout.iter().enumerate() {
        stack.truncate(depth);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::from_valid_edges(layout.len(), edges)
}
