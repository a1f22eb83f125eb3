use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{tree_canonical_form, CanonicalCode, Graph};

/// Membership in the recursively built family `ζ₁`.
///
/// Undoes one growth step at a time: a vertex `u` whose only non-leaf
/// neighbour is `v` and which carries `t ≥ 1` leaves is removed together
/// with those leaves and `t − 1` leaves of `v`; `v` must still carry a leaf
/// afterwards. Leaves of one vertex are interchangeable, so only the choice
/// of `u` branches. Results are memoised per call on canonical codes.
pub fn in_zeta1(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut memo = HashMap::new();
    Ok(peel(t, &mut memo))
}

fn peel(t: &Graph, memo: &mut HashMap<CanonicalCode, bool>) -> bool {
    let n = t.order();
    if n == 2 {
        return true;
    }
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let code = tree_canonical_form(t).expect("tree");
    if let Some(&known) = memo.get(&code) {
        return known;
    }
    let result = (0..n).any(|u| match reduce(t, u) {
        Some(smaller) => peel(&smaller, memo),
        None => false,
    });
    memo.insert(code, result);
    result
}

/// The tree left after undoing a growth step rooted at `u`, if `u` qualifies.
fn reduce(t: &Graph, u: usize) -> Option<Graph> {
    let is_leaf = |x: usize| t.degree(x) == 1;
    let (own, inner): (Vec<usize>, Vec<usize>) = t.neighbors(u).iter().partition(|&&x| is_leaf(x));
    let [v] = inner[..] else {
        return None;
    };
    if own.is_empty() {
        return None;
    }
    let spare: Vec<usize> = t
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| is_leaf(x))
        .collect();
    if spare.len() + 1 < own.len() {
        return None;
    }
    let mut removed = vec![false; t.order()];
    removed[u] = true;
    for &x in own.iter().chain(&spare[..own.len() - 1]) {
        removed[x] = true;
    }
    let keep: Vec<usize> = (0..t.order()).filter(|&x| !removed[x]).collect();
    let smaller = t.induced_subgraph(&keep)?;
    let v_new = keep.iter().position(|&x| x == v)?;
    smaller
        .neighbors(v_new)
        .iter()
        .any(|&x| smaller.degree(x) == 1)
        .then_some(smaller)
}
