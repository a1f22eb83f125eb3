//! Structural membership tests that never consult a domination number.

mod corona;
mod structure;
mod support;
mod zeta;

pub use corona::{is_bipartite_corona, is_corona, is_tree_corona, verify_corona_decomposition};
pub use structure::{pendant_structure_hypotheses, pendant_structure_violations, StructureClause};
pub use support::{support_profile, SupportProfile};
pub use zeta::in_zeta1;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn leaf_core(t: &Graph, d: usize) -> Result<Option<Graph>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if d < 2 {
        return Err(Error::ParameterOutOfRange("d must be at least 2".into()));
    }
    Ok(t.remove_leaves())
}

/// `F_d`: trees whose non-leaf core lies in `ζ₁` (radius 2), or for larger
/// radii has order `d` or lies in `T_{d−1}`.
pub fn in_leaf_deficit_family(t: &Graph, d: usize) -> Result<bool> {
    let Some(core) = leaf_core(t, d)? else {
        return Ok(false);
    };
    if d == 2 {
        return in_zeta1(&core);
    }
    Ok(core.order() == d || is_tree_corona(&core, d - 1)?)
}

/// `F'_d`: for radius 2 the core is `K_2` or lies in `T_1`; otherwise `F_d`.
pub fn in_domination_deficit_family(t: &Graph, d: usize) -> Result<bool> {
    let Some(core) = leaf_core(t, d)? else {
        return Ok(false);
    };
    if d == 2 {
        return Ok(core.order() == 2 || is_tree_corona(&core, 1)?);
    }
    in_leaf_deficit_family(t, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{double_star, path, star};

    #[test]
    fn double_stars_in_both_radius_two_families() {
        for (r, s) in [(1, 1), (2, 2), (2, 3)] {
            let t = double_star(r, s).unwrap();
            assert!(in_leaf_deficit_family(&t, 2).unwrap());
            assert!(in_domination_deficit_family(&t, 2).unwrap());
        }
    }

    #[test]
    fn star_excluded() {
        let t = star(3).unwrap();
        assert!(!in_leaf_deficit_family(&t, 2).unwrap());
        assert!(!in_domination_deficit_family(&t, 2).unwrap());
    }

    #[test]
    fn core_of_order_d() {
        // core P_3, one pendant on each core leaf
        let t = path(3).unwrap().attach_leaves(0, 1).attach_leaves(2, 2);
        assert!(in_leaf_deficit_family(&t, 3).unwrap());
        assert!(in_domination_deficit_family(&t, 3).unwrap());
    }

    #[test]
    fn core_path_four() {
        // core P_4 = P_2 ∘ P_1, pendants on both core leaves
        let t = path(4).unwrap().attach_leaves(0, 1).attach_leaves(3, 1);
        assert!(in_domination_deficit_family(&t, 2).unwrap());
        assert!(in_leaf_deficit_family(&t, 2).unwrap());
    }

    #[test]
    fn parameter_checks() {
        assert!(in_leaf_deficit_family(&path(4).unwrap(), 1).is_err());
        assert_eq!(
            in_leaf_deficit_family(&crate::constructions::cycle(4).unwrap(), 2),
            Err(Error::NotATree)
        );
    }
}
