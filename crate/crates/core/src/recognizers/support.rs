use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders of the pendant paths attached at each vertex of a tree.
///
/// A path on `k` vertices is attached at `v` when, for some neighbour `w` of
/// `v`, the component of `T − v` containing `w` is a path with `w` as an
/// endpoint. Every neighbour contributes at most one entry, so entries for
/// one vertex come from disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportProfile {
    attached: Vec<Vec<usize>>,
}

impl SupportProfile {
    /// Sorted orders of the paths attached at `v`.
    pub fn attached(&self, v: usize) -> &[usize] {
        &self.attached[v]
    }

    /// `|L(v)|`: the leaves adjacent to `v`.
    pub fn leaf_count(&self, v: usize) -> usize {
        self.attached[v].iter().filter(|&&k| k == 1).count()
    }

    /// `v` carries an attached copy of `P_k`.
    pub fn is_path_support(&self, v: usize, k: usize) -> bool {
        self.attached[v].contains(&k)
    }

    /// `v` carries two distinct attached paths of orders `i` and `j`.
    pub fn is_pair_support(&self, v: usize, i: usize, j: usize) -> bool {
        let list = &self.attached[v];
        list.iter()
            .enumerate()
            .any(|(a, &x)| x == i && list.iter().enumerate().any(|(b, &y)| a != b && y == j))
    }

    /// Some vertex is a `P_k`-support vertex.
    pub fn any_path_support(&self, k: usize) -> bool {
        (0..self.attached.len()).any(|v| self.is_path_support(v, k))
    }

    pub fn order(&self) -> usize {
        self.attached.len()
    }
}

pub fn support_profile(t: &Graph) -> Result<SupportProfile> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let attached = (0..t.order())
        .map(|v| {
            let mut list: Vec<usize> = t
                .neighbors(v)
                .iter()
                .filter_map(|&w| pendant_length(t, v, w))
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    Ok(SupportProfile { attached })
}

/// Order of the component of `T − v` through `w`, if that component is a
/// path starting at `w`.
fn pendant_length(t: &Graph, v: usize, w: usize) -> Option<usize> {
    let (mut prev, mut cur, mut len) = (v, w, 1);
    loop {
        match t.degree(cur) {
            1 => return Some(len),
            2 => {
                let next = t
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            _ => return None,
        }
    }
}
