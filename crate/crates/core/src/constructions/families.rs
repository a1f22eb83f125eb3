use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::{corona, out_of_range, FamilyTag};
use crate::enumeration::{all_connected_bipartite, all_trees, CanonicalGraph, BIPARTITE_ORDER_CAP};
use crate::error::Result;
use crate::graph::{graph_canonical_form_capped, tree_canonical_form, CanonicalCode, Graph};

/// Order cap for canonical codes of corona members, which can exceed the
/// default search cap.
const CORONA_CANON_CAP: usize = 40;

/// One member of a generated family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub tag: FamilyTag,
    pub code: CanonicalCode,
    pub graph: Graph,
}

fn collect(tag: FamilyTag, codes: BTreeSet<CanonicalCode>) -> Vec<FamilyMember> {
    codes
        .into_iter()
        .map(|code| FamilyMember {
            tag,
            graph: code.decode(),
            code,
        })
        .collect()
}

fn tree_code(t: &Graph) -> CanonicalCode {
    tree_canonical_form(t).expect("tree")
}

/// Closure of the `ζ₁` growth rule from `K_2`: join the centre of a new
/// `K_{1,t}` to a support vertex `v` and add `t − 1` leaves at `v`.
pub fn zeta1_members(max_order: usize) -> Result<Vec<FamilyMember>> {
    if max_order < 2 {
        return Err(out_of_range("zeta1 members need max_order >= 2"));
    }
    let seed = tree_code(&Graph::from_valid_edges(2, [(0, 1)]));
    let mut all = BTreeSet::from([seed.clone()]);
    let mut frontier = vec![seed];
    while let Some(code) = frontier.pop() {
        let base = code.decode();
        for v in base.support_vertices() {
            for t in (1..).take_while(|t| base.order() + 2 * t <= max_order) {
                let centre = base.order();
                let grown = base
                    .attach_leaves(v, 1)
                    .attach_leaves(centre, t)
                    .attach_leaves(v, t - 1);
                let grown_code = tree_code(&grown);
                if all.insert(grown_code.clone()) {
                    frontier.push(grown_code);
                }
            }
        }
    }
    Ok(collect(FamilyTag::Zeta1, all))
}

/// `T_d` members up to `max_order`: coronas of trees on at least 2 vertices.
pub fn tree_coronas(max_order: usize, d: usize) -> Result<Vec<FamilyMember>> {
    if d == 0 {
        return Err(out_of_range("d must be at least 1"));
    }
    let mut codes = BTreeSet::new();
    for m in 2..=(max_order / (d + 1)).min(crate::enumeration::TREE_ORDER_CAP) {
        for h in all_trees(m)? {
            codes.insert(tree_code(&corona(&h.graph, d)?.0));
        }
    }
    Ok(collect(FamilyTag::TreeCorona, codes))
}

/// `B_d` members up to `max_order` over connected bipartite bases.
pub fn bipartite_coronas(max_order: usize, d: usize) -> Result<Vec<FamilyMember>> {
    bipartite_coronas_with(max_order, d, false)
}

/// `B_d` members up to `max_order`. With `allow_disconnected` the base may
/// be any bipartite graph, and disconnected bases give disconnected members.
/// Codes come from the general graph canonical form, trees included.
pub fn bipartite_coronas_with(
    max_order: usize,
    d: usize,
    allow_disconnected: bool,
) -> Result<Vec<FamilyMember>> {
    if d == 0 {
        return Err(out_of_range("d must be at least 1"));
    }
    let top = (max_order / (d + 1)).min(BIPARTITE_ORDER_CAP);
    let connected: Vec<Vec<CanonicalGraph>> = (1..=top)
        .map(all_connected_bipartite)
        .collect::<Result<_>>()?;
    let mut codes = BTreeSet::new();
    for m in 1..=top {
        let bases: Vec<Graph> = if allow_disconnected {
            disjoint_unions(&connected, m)
        } else {
            connected[m - 1].iter().map(|c| c.graph.clone()).collect()
        };
        for h in bases {
            codes.insert(graph_canonical_form_capped(
                &corona(&h, d)?.0,
                CORONA_CANON_CAP,
            )?);
        }
    }
    Ok(collect(FamilyTag::BipartiteCorona, codes))
}

/// All disjoint unions of connected pieces with total order `m`, one per
/// multiset of pieces.
fn disjoint_unions(connected: &[Vec<CanonicalGraph>], m: usize) -> Vec<Graph> {
    let pieces: Vec<&Graph> = connected.iter().flatten().map(|c| &c.graph).collect();
    let mut out = Vec::new();
    for k in 1..=m {
        for combo in (0..pieces.len()).combinations_with_replacement(k) {
            if combo.iter().map(|&i| pieces[i].order()).sum::<usize>() != m {
                continue;
            }
            let mut edges = Vec::new();
            let mut offset = 0;
            for &i in &combo {
                edges.extend(pieces[i].edges().map(|(u, v)| (u + offset, v + offset)));
                offset += pieces[i].order();
            }
            out.push(Graph::from_valid_edges(m, edges));
        }
    }
    out
}

/// Every tree obtained from `core` by hanging at least one leaf on each of
/// its leaves and any number on its other vertices, up to `max_order`
/// vertices in total. For a one-vertex core, that vertex counts as a leaf.
pub fn pendant_extensions(core: &Graph, max_order: usize) -> Vec<Graph> {
    let n = core.order();
    if max_order < n {
        return Vec::new();
    }
    let minimum: Vec<usize> = (0..n).map(|v| usize::from(core.degree(v) <= 1)).collect();
    let spare = max_order - n;
    let mut out = Vec::new();
    let mut counts = minimum.clone();
    extend_counts(core, &minimum, &mut counts, 0, spare, &mut out);
    out
}

fn extend_counts(
    core: &Graph,
    minimum: &[usize],
    counts: &mut Vec<usize>,
    at: usize,
    spare: usize,
    out: &mut Vec<Graph>,
) {
    if at == counts.len() {
        if counts.iter().sum::<usize>() <= spare {
            let g = counts
                .iter()
                .enumerate()
                .fold(core.clone(), |g, (v, &c)| g.attach_leaves(v, c));
            out.push(g);
        }
        return;
    }
    let used: usize = counts[..at].iter().sum::<usize>() + minimum[at + 1..].iter().sum::<usize>();
    let mut c = minimum[at];
    while used + c <= spare {
        counts[at] = c;
        extend_counts(core, minimum, counts, at + 1, spare, out);
        c += 1;
    }
    counts[at] = minimum[at];
}

fn extensions_of(cores: &[Graph], max_order: usize) -> BTreeSet<CanonicalCode> {
    cores
        .iter()
        .flat_map(|core| pendant_extensions(core, max_order))
        .map(|t| tree_code(&t))
        .collect()
}

fn deficit_cores(max_order: usize, d: usize) -> Result<Vec<Graph>> {
    let mut cores: Vec<Graph> = all_trees(d)?.into_iter().map(|c| c.graph).collect();
    cores.extend(tree_coronas(max_order, d - 1)?.into_iter().map(|m| m.graph));
    Ok(cores)
}

/// `F_d` members up to `max_order`, grown from their cores.
pub fn leaf_deficit_family(max_order: usize, d: usize) -> Result<Vec<FamilyMember>> {
    if d < 2 {
        return Err(out_of_range("the leaf-deficit family needs d >= 2"));
    }
    let cores: Vec<Graph> = if d == 2 {
        zeta1_members(max_order.max(2))?
            .into_iter()
            .map(|m| m.graph)
            .collect()
    } else {
        deficit_cores(max_order, d)?
    };
    Ok(collect(
        FamilyTag::LeafDeficit,
        extensions_of(&cores, max_order),
    ))
}

/// `F'_d` members up to `max_order`: cores `K_2` or `T_1` members when
/// `d = 2`, the same cores as `F_d` otherwise.
pub fn domination_deficit_family(max_order: usize, d: usize) -> Result<Vec<FamilyMember>> {
    if d < 2 {
        return Err(out_of_range("the domination-deficit family needs d >= 2"));
    }
    let cores: Vec<Graph> = if d == 2 {
        let mut cores = vec![Graph::from_valid_edges(2, [(0, 1)])];
        cores.extend(tree_coronas(max_order, 1)?.into_iter().map(|m| m.graph));
        cores
    } else {
        deficit_cores(max_order, d)?
    };
    Ok(collect(
        FamilyTag::DominationDeficit,
        extensions_of(&cores, max_order),
    ))
}

/// Counts members by order, for summaries.
pub fn order_histogram(members: &[FamilyMember]) -> BTreeMap<usize, usize> {
    members
        .iter()
        .map(|m| m.graph.order())
        .counts()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{double_star, path, star};

    fn codes(members: &[FamilyMember]) -> BTreeSet<CanonicalCode> {
        members.iter().map(|m| m.code.clone()).collect()
    }

    #[test]
    fn zeta1_small() {
        let two = zeta1_members(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].graph.order(), 2);
        let six = codes(&zeta1_members(6).unwrap());
        assert!(six.contains(&tree_code(&double_star(2, 2).unwrap())));
        assert!(six.contains(&tree_code(&path(4).unwrap())));
        assert!(!six.contains(&tree_code(&double_star(1, 2).unwrap())));
        assert!(zeta1_members(12)
            .unwrap()
            .iter()
            .all(|m| m.graph.order() % 2 == 0));
        for r in 1..=4 {
            assert!(codes(&zeta1_members(10).unwrap())
                .contains(&tree_code(&double_star(r, r).unwrap())));
        }
    }

    #[test]
    fn tree_coronas_order_twelve() {
        let members = tree_coronas(12, 2).unwrap();
        assert_eq!(members.len(), 4);
        assert_eq!(
            order_histogram(&members),
            BTreeMap::from([(6, 1), (9, 1), (12, 2)])
        );
        assert!(!codes(&members).contains(&tree_code(&path(3).unwrap())));
    }

    #[test]
    fn bipartite_coronas_order_four() {
        let members = bipartite_coronas(4, 1).unwrap();
        let want: BTreeSet<CanonicalCode> = [path(2), path(4)]
            .into_iter()
            .map(|g| graph_canonical_form_capped(&g.unwrap(), 40).unwrap())
            .collect();
        assert_eq!(codes(&members), want);
        assert!(bipartite_coronas(9, 2)
            .unwrap()
            .iter()
            .any(|m| m.graph.order() == 3));
    }

    #[test]
    fn disconnected_bases_add_members() {
        let connected = bipartite_coronas_with(8, 1, false).unwrap();
        let loose = bipartite_coronas_with(8, 1, true).unwrap();
        assert!(loose.len() > connected.len());
        assert!(loose.iter().any(|m| !m.graph.is_connected()));
    }

    #[test]
    fn pendant_extension_counts() {
        // K_2 core, up to 5 vertices: (1,1), (1,2), (2,1), (1,3)... capped by spare 3
        let ext = pendant_extensions(&path(2).unwrap(), 5);
        assert_eq!(ext.len(), 3);
        assert!(ext.iter().all(Graph::is_tree));
        assert!(pendant_extensions(&path(4).unwrap(), 3).is_empty());
    }

    #[test]
    fn leaf_deficit_examples() {
        let f2 = codes(&leaf_deficit_family(8, 2).unwrap());
        assert!(f2.contains(&tree_code(&double_star(2, 3).unwrap())));
        assert!(!f2.contains(&tree_code(&star(3).unwrap())));
        let f3 = leaf_deficit_family(10, 3).unwrap();
        let core_p3 = path(3).unwrap().attach_leaves(0, 1).attach_leaves(2, 1);
        assert!(codes(&f3).contains(&tree_code(&core_p3)));
        assert_eq!(
            codes(&domination_deficit_family(10, 3).unwrap()),
            codes(&f3)
        );
    }
}
