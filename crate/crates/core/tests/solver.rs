mod common;

use distdom::constructions::{complete_bipartite, counterexample_gnkd, cycle, path};
use distdom::enumeration::{all_connected_bipartite, all_trees};
use distdom::solver::{
    gamma, gamma_bruteforce, is_d_dominating, is_p_packing, level_partition, verify_partition,
    DominationQuery, Gamma,
};
use distdom::{Error, Graph};
use proptest::prelude::*;

use common::{edge_list, prufer_edges, reference_gamma};

fn value(g: &Graph, d: usize, p: usize) -> Gamma {
    gamma(g, DominationQuery::new(d, p).unwrap()).unwrap().value
}

#[test]
fn matches_reference_on_small_trees() {
    for n in 1..=8 {
        for t in all_trees(n).unwrap() {
            let edges = edge_list(&t.graph);
            for d in 1..=3 {
                for p in 0..=2 {
                    let got = gamma(&t.graph, DominationQuery::new(d, p).unwrap()).unwrap();
                    match reference_gamma(n, &edges, d, p) {
                        Some(set) => {
                            assert_eq!(
                                got.value,
                                Gamma::Finite(set.len()),
                                "{} d={d} p={p}",
                                t.code
                            );
                            assert_eq!(got.witness, set, "{} d={d} p={p}", t.code);
                        }
                        None => assert_eq!(got.value, Gamma::Infinite, "{} d={d} p={p}", t.code),
                    }
                }
            }
        }
    }
}

#[test]
fn matches_bruteforce_on_small_bipartite() {
    for n in 1..=6 {
        for c in all_connected_bipartite(n).unwrap() {
            for d in 1..=2 {
                for p in 0..=1 {
                    let q = DominationQuery::new(d, p).unwrap();
                    assert_eq!(
                        gamma(&c.graph, q).unwrap(),
                        gamma_bruteforce(&c.graph, q).unwrap(),
                        "{}",
                        c.code
                    );
                }
            }
        }
    }
}

#[test]
fn point_values() {
    for d in 2..=5 {
        assert_eq!(
            value(&cycle(2 * d + 2).unwrap(), d, 1),
            Gamma::Finite(2),
            "d = {d}"
        );
    }
    for r in 2..=3 {
        assert_eq!(
            value(&complete_bipartite(r, r).unwrap(), 1, 1),
            Gamma::Finite(r)
        );
    }
    let g = counterexample_gnkd(4, 2, 2).unwrap();
    assert_eq!(g.order(), 20);
    assert_eq!(value(&g, 2, 0), Gamma::Finite(4));
    assert_eq!(value(&g, 2, 1), Gamma::Finite(7));
}

#[test]
fn infinite_when_packing_too_strict() {
    // On P_3 with d = 1 the centre alone dominates; at p = 2 no pair can
    // coexist, so the centre is still optimal. P_5 at d = 1, p = 3 needs
    // two vertices at distance ≥ 4 covering everything: impossible.
    assert_eq!(value(&path(3).unwrap(), 1, 2), Gamma::Finite(1));
    assert_eq!(value(&path(5).unwrap(), 1, 3), Gamma::Infinite);
}

#[test]
fn rejects_bad_input() {
    let two = Graph::empty(2).unwrap();
    assert!(matches!(
        gamma(&two, DominationQuery::new(1, 0).unwrap()),
        Err(Error::GraphDisconnected)
    ));
    assert!(matches!(
        DominationQuery::new(0, 1),
        Err(Error::ParameterOutOfRange(_))
    ));
    assert!(matches!(
        level_partition(&cycle(5).unwrap(), 1),
        Err(Error::NotBipartite)
    ));
}

fn tree_from(seq: &[usize], n: usize) -> Graph {
    Graph::from_edges(n, prufer_edges(seq, n)).unwrap()
}

fn arb_tree() -> impl Strategy<Value = Graph> {
    (3usize..=16)
        .prop_flat_map(|n| prop::collection::vec(0..n, n - 2).prop_map(move |s| tree_from(&s, n)))
}

/// A random tree plus extra edges between opposite sides, so still bipartite.
fn arb_bipartite() -> impl Strategy<Value = Graph> {
    (
        arb_tree(),
        prop::collection::vec((0usize..16, 0usize..16), 0..6),
    )
        .prop_map(|(t, extra)| {
            let (left, right) = t.bipartition().unwrap();
            let mut edges: Vec<(usize, usize)> = t.edges().collect();
            for (a, b) in extra {
                let (u, v) = (left[a % left.len()], right[b % right.len()]);
                let e = (u.min(v), u.max(v));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(t.order(), edges).unwrap()
        })
}

fn relabel(g: &Graph, shift: usize) -> Graph {
    let n = g.order();
    Graph::from_edges(
        n,
        g.edges().map(|(u, v)| ((u + shift) % n, (v + shift) % n)),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witness_is_feasible(g in arb_bipartite(), d in 1usize..=3, p in 0usize..=2) {
        let w = gamma(&g, DominationQuery::new(d, p).unwrap()).unwrap();
        if let Gamma::Finite(k) = w.value {
            prop_assert_eq!(w.witness.len(), k);
            prop_assert!(is_d_dominating(&g, &w.witness, d));
            prop_assert!(is_p_packing(&g, &w.witness, p));
        } else {
            prop_assert!(w.witness.is_empty());
        }
    }

    #[test]
    fn monotone_in_radius_and_packing(t in arb_tree(), d in 1usize..=3) {
        let plain = value(&t, d, 0);
        let independent = value(&t, d, 1);
        prop_assert!(plain <= independent);
        prop_assert!(value(&t, d + 1, 0) <= plain);
        prop_assert!(value(&t, d + 1, 1) <= independent);
    }

    #[test]
    fn invariant_under_relabelling(g in arb_bipartite(), shift in 1usize..16, d in 1usize..=2, p in 0usize..=1) {
        prop_assert_eq!(value(&g, d, p), value(&relabel(&g, shift), d, p));
    }

    #[test]
    fn partition_verifies_and_bounds(g in arb_bipartite(), d in 1usize..=3) {
        prop_assume!(g.order() > d);
        let part = level_partition(&g, d).unwrap();
        prop_assert_eq!(part.parts.len(), d + 1);
        prop_assert_eq!(part.parts.iter().map(Vec::len).sum::<usize>(), g.order());
        prop_assert!(verify_partition(&g, &part, d));
        let best = value(&g, d, 1).finite().unwrap();
        prop_assert!(best <= part.smallest_part());
        prop_assert!(best * (d + 1) <= g.order());
    }
}
