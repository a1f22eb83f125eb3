use std::collections::BTreeSet;

use crate::graph::{graph_canonical_form, CanonicalCode, Graph};

/// Codes of all connected bipartite graphs on `n ≥ 2` vertices.
///
/// Every such graph has a bipartition `X ∪ Y` with `|X| ≤ |Y|`. Vertices of
/// `X` get non-empty neighbour masks over `Y`; permuting `X` cannot change
/// the graph, so masks are taken in non-decreasing order. Connected results
/// are deduplicated by canonical code.
pub(super) fn connected_bipartite_codes(n: usize) -> BTreeSet<CanonicalCode> {
    let mut codes = BTreeSet::new();
    for a in 1..=n / 2 {
        let b = n - a;
        let mut masks = vec![1u32; a];
        loop {
            if let Some(g) = assemble(a, b, &masks) {
                codes.insert(graph_canonical_form(&g).expect("within cap"));
            }
            if !advance(&mut masks, (1 << b) - 1) {
                break;
            }
        }
    }
    codes
}

/// Next non-decreasing mask vector, or `false` when exhausted.
fn advance(masks: &mut [u32], top: u32) -> bool {
    let Some(i) = masks.iter().rposition(|&m| m < top) else {
        return false;
    };
    let value = masks[i] + 1;
    for m in &mut masks[i..] {
        *m = value;
    }
    true
}

fn assemble(a: usize, b: usize, masks: &[u32]) -> Option<Graph> {
    let covered = masks.iter().fold(0, |acc, m| acc | m);
    if covered != (1 << b) - 1 {
        return None;
    }
    let edges = masks.iter().enumerate().flat_map(|(x, &m)| {
        (0..b)
            .filter(move |y| m >> y & 1 == 1)
            .map(move |y| (x, a + y))
    });
    let g = Graph::from_valid_edges(a + b, edges);
    g.is_connected().then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn advance_is_nondecreasing() {
        let mut masks = vec![1, 1];
        let mut seen = vec![masks.clone()];
        while advance(&mut masks, 3) {
            seen.push(masks.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 2],
                vec![2, 3],
                vec![3, 3]
            ]
        );
    }

    #[test]
    fn small_orders() {
        assert_eq!(connected_bipartite_codes(2).len(), 1);
        assert_eq!(connected_bipartite_codes(3).len(), 1);
        assert_eq!(connected_bipartite_codes(4).len(), 3);
    }
}
