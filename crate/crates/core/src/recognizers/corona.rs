use std::collections::BTreeMap;

use crate::constructions::CoronaDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decomposes `g` as `H ∘ P_d`, returning the certificate when one exists.
///
/// With a single anchor the graph must be the path `P_{d+1}` and the anchor
/// is its smaller-numbered end. With two or more anchors every anchor has
/// degree at least 2 in `g`, so each leaf starts a forced walk of `d`
/// vertices whose inner vertices have degree 2, ending next to its anchor.
/// The walk fixes the decomposition, which is then checked in full.
pub fn is_corona(g: &Graph, d: usize) -> Result<Option<CoronaDecomposition>> {
    if d == 0 {
        return Err(Error::ParameterOutOfRange("d must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let n = g.order();
    if !n.is_multiple_of(d + 1) {
        return Ok(None);
    }
    let m = n / (d + 1);
    let candidate = if m == 1 {
        path_certificate(g)
    } else {
        walk_certificate(g, d, m)
    };
    Ok(candidate.filter(|c| verify_corona_decomposition(g, c, d)))
}

fn path_certificate(g: &Graph) -> Option<CoronaDecomposition> {
    if !g.is_tree() || (0..g.order()).any(|v| g.degree(v) > 2) {
        return None;
    }
    let ends = g.leaves();
    let (anchor, far) = (ends[0], ends[1]);
    let mut chain = vec![far];
    let mut prev = far;
    let mut cur = g.neighbors(far)[0];
    while cur != anchor {
        chain.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&x| x != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    Some(CoronaDecomposition {
        anchors: vec![anchor],
        paths: BTreeMap::from([(anchor, chain)]),
    })
}

fn walk_certificate(g: &Graph, d: usize, m: usize) -> Option<CoronaDecomposition> {
    let leaves = g.leaves();
    if leaves.len() != m {
        return None;
    }
    let mut paths = BTreeMap::new();
    for &leaf in &leaves {
        let mut chain = vec![leaf];
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0];
        for _ in 1..d {
            if g.degree(cur) != 2 {
                return None;
            }
            chain.push(cur);
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&x| x != prev)
                .unwrap();
            prev = cur;
            cur = next;
        }
        if paths.insert(cur, chain).is_some() {
            return None;
        }
    }
    Some(CoronaDecomposition {
        anchors: paths.keys().copied().collect(),
        paths,
    })
}

/// Checks every structural property of a corona certificate against `g`.
pub fn verify_corona_decomposition(g: &Graph, c: &CoronaDecomposition, d: usize) -> bool {
    let n = g.order();
    if c.anchors.is_empty() || !c.anchors.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    if c.paths.len() != c.anchors.len() || !c.paths.keys().eq(c.anchors.iter()) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in c.anchors.iter().chain(c.paths.values().flatten()) {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if seen.contains(&false) {
        return false;
    }
    c.paths.iter().all(|(&anchor, chain)| {
        if chain.len() != d {
            return false;
        }
        // outer end first, then towards the anchor
        let mut line = chain.clone();
        line.push(anchor);
        line.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && chain
                .iter()
                .enumerate()
                .all(|(i, &v)| g.degree(v) == if i == 0 { 1 } else { 2 })
    })
}

/// `T_d`: coronas `T* ∘ P_d` of trees `T*` with at least two vertices.
pub fn is_tree_corona(t: &Graph, d: usize) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(is_corona(t, d)?.is_some_and(|c| c.anchors.len() >= 2))
}

/// `B_d`: coronas `H ∘ P_d` of connected bipartite `H`.
pub fn is_bipartite_corona(g: &Graph, d: usize) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    Ok(is_corona(g, d)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, corona, cycle, path, star};
    use crate::graph::tree_canonical_form;
    use itertools::Itertools;

    #[test]
    fn path_six_has_middle_anchors() {
        let c = is_corona(&path(6).unwrap(), 2).unwrap().unwrap();
        assert_eq!(c.anchors, vec![2, 3]);
        assert_eq!(c.paths[&2], vec![0, 1]);
        assert_eq!(c.paths[&3], vec![5, 4]);
    }

    #[test]
    fn short_path_single_anchor() {
        let p3 = path(3).unwrap();
        let c = is_corona(&p3, 2).unwrap().unwrap();
        assert_eq!(c.anchors, vec![0]);
        assert_eq!(c.paths[&0], vec![2, 1]);
        assert!(is_bipartite_corona(&p3, 2).unwrap());
        assert!(!is_tree_corona(&p3, 2).unwrap());
        assert!(is_tree_corona(&path(6).unwrap(), 2).unwrap());
    }

    #[test]
    fn star_is_not_a_corona() {
        assert_eq!(is_corona(&star(3).unwrap(), 1).unwrap(), None);
        assert_eq!(is_corona(&path(9).unwrap(), 2).unwrap(), None);
    }

    #[test]
    fn cycle_corona_round_trip() {
        let (g, cert) = corona(&cycle(6).unwrap(), 2).unwrap();
        assert!(is_bipartite_corona(&g, 2).unwrap());
        assert_eq!(is_corona(&g, 2).unwrap(), Some(cert));
        let (k3, _) = corona(&complete(3).unwrap(), 1).unwrap();
        assert!(is_corona(&k3, 1).unwrap().is_some());
        assert_eq!(is_bipartite_corona(&k3, 1), Err(Error::NotBipartite));
    }

    #[test]
    fn tampered_certificate_fails() {
        let (g, mut cert) = corona(&path(3).unwrap(), 2).unwrap();
        assert!(verify_corona_decomposition(&g, &cert, 2));
        // swap anchor 0 with its inner path vertex
        let inner = *cert.paths[&0].last().unwrap();
        let mut chain = cert.paths.remove(&0).unwrap();
        *chain.last_mut().unwrap() = 0;
        cert.anchors[0] = inner;
        cert.anchors.sort_unstable();
        cert.paths.insert(inner, chain);
        assert!(!verify_corona_decomposition(&g, &cert, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(
            is_corona(&Graph::empty(2).unwrap(), 1),
            Err(Error::GraphDisconnected)
        );
        assert_eq!(is_tree_corona(&cycle(4).unwrap(), 1), Err(Error::NotATree));
    }

    #[test]
    fn round_trip_small_trees() {
        for n in 1..=4 {
            for h in crate::enumeration::all_trees(n).unwrap() {
                for d in 1..=3 {
                    let (g, _) = corona(&h.graph, d).unwrap();
                    let c = is_corona(&g, d).unwrap().expect("corona recognised");
                    let base = c.base(&g);
                    assert_eq!(tree_canonical_form(&base).unwrap(), h.code);
                }
            }
        }
    }

    /// Oracle: try every way to split the vertex set into induced paths on
    /// `d + 1` vertices, each with exactly one vertex allowed outside edges
    /// at one end of the path.
    fn brute_is_corona(g: &Graph, d: usize) -> bool {
        fn assign(g: &Graph, d: usize, free: &mut Vec<bool>) -> bool {
            let Some(first) = free.iter().position(|&f| f) else {
                return true;
            };
            let rest: Vec<usize> = (0..g.order()).filter(|&v| free[v] && v != first).collect();
            for others in rest.into_iter().combinations(d) {
                let mut block = others.clone();
                block.push(first);
                block.sort_unstable();
                let sub = g.induced_subgraph(&block).unwrap();
                if !(sub.is_tree() && (0..=d).all(|i| sub.degree(i) <= 2)) {
                    continue;
                }
                let outward: Vec<usize> = (0..=d)
                    .filter(|&i| g.neighbors(block[i]).iter().any(|x| !block.contains(x)))
                    .collect();
                let ends: Vec<usize> = (0..=d).filter(|&i| sub.degree(i) <= 1).collect();
                let ok = match outward.as_slice() {
                    [] => true,
                    [i] => ends.contains(i),
                    _ => false,
                };
                if !ok {
                    continue;
                }
                for &v in &block {
                    free[v] = false;
                }
                if assign(g, d, free) {
                    return true;
                }
                for &v in &block {
                    free[v] = true;
                }
            }
            false
        }
        g.order().is_multiple_of(d + 1) && assign(g, d, &mut vec![true; g.order()])
    }

    #[test]
    fn agrees_with_bruteforce_partition_search() {
        for n in 1..=12 {
            for t in crate::enumeration::all_trees(n).unwrap() {
                for d in 2..=3 {
                    assert_eq!(
                        is_corona(&t.graph, d).unwrap().is_some(),
                        brute_is_corona(&t.graph, d),
                        "{} d={d}",
                        t.code
                    );
                }
            }
        }
    }
}
