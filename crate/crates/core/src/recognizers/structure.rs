use serde::Serialize;

use super::support::{support_profile, SupportProfile};
use crate::constructions::joined_subdivided_stars;
use crate::error::{Error, Result};
use crate::graph::{diametrical_path, tree_canonical_form, Graph};

/// The structural statements about long trees without short pendant pairs.
///
/// Positions refer to the diametrical path `v_1 … v_{s+1}` chosen by
/// [`diametrical_path`], with the tree rooted at `v_{s+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureClause {
    /// `deg(v_k) = 2` for `k ∈ {2..d} ∪ {s−d+2..s}`.
    NearEndDegrees,
    /// `deg(v_{d+1}) ≥ 3` and `deg(v_{s−d+1}) ≥ 3`.
    BranchDegrees,
    /// A vertex that is the only branch vertex of its subtree heads a
    /// subdivided star with legs of `d` vertices.
    LowestBranchShape,
    /// The subtree at `v_{d+1}` is such a subdivided star.
    EndBranchShape,
    /// With `s = 2d + 1` the tree is two joined subdivided stars.
    TwoStarShape,
}

impl StructureClause {
    pub fn label(self) -> &'static str {
        match self {
            StructureClause::NearEndDegrees => "near-end-degrees",
            StructureClause::BranchDegrees => "branch-degrees",
            StructureClause::LowestBranchShape => "lowest-branch-shape",
            StructureClause::EndBranchShape => "end-branch-shape",
            StructureClause::TwoStarShape => "two-star-shape",
        }
    }
}

fn validate(t: &Graph, d: usize) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if d < 2 {
        return Err(Error::ParameterOutOfRange("d must be at least 2".into()));
    }
    Ok(())
}

fn lacks_short_pairs(profile: &SupportProfile, d: usize) -> bool {
    (0..profile.order()).all(|v| {
        !profile.is_path_support(v, d + 1)
            && !(1..d).any(|i| (1..=d).any(|j| profile.is_pair_support(v, i, j)))
    })
}

/// Diameter at least `2d + 1`, no vertex carrying a pendant `P_{d+1}`, and
/// no vertex carrying two pendant paths of orders `i < d` and `j ≤ d`.
pub fn pendant_structure_hypotheses(t: &Graph, d: usize) -> Result<bool> {
    validate(t, d)?;
    if t.diameter().finite().is_none_or(|s| s < 2 * d + 1) {
        return Ok(false);
    }
    Ok(lacks_short_pairs(&support_profile(t)?, d))
}

/// Clauses that fail on `t`, in clause order; empty when all hold.
pub fn pendant_structure_violations(t: &Graph, d: usize) -> Result<Vec<StructureClause>> {
    validate(t, d)?;
    let spine = diametrical_path(t)?.0;
    let s = spine.len() - 1;
    if s < 2 * d + 1 {
        return Err(Error::ParameterOutOfRange(format!(
            "diameter {s} is below {}",
            2 * d + 1
        )));
    }
    // v_k is spine[k - 1]
    let at = |k: usize| spine[k - 1];
    let children = rooted_children(t, at(s + 1));
    let branchy = |v: usize| t.degree(v) >= 3;
    let mut out = Vec::new();

    let near_end = (2..=d).chain(s - d + 2..=s).all(|k| t.degree(at(k)) == 2);
    if !near_end {
        out.push(StructureClause::NearEndDegrees);
    }
    if !(branchy(at(d + 1)) && branchy(at(s - d + 1))) {
        out.push(StructureClause::BranchDegrees);
    }
    let lowest_ok = (0..t.order())
        .filter(|&v| branchy(v) && only_branch_below(t, &children, v))
        .all(|v| is_subdivided_star(&children, v, d));
    if !lowest_ok {
        out.push(StructureClause::LowestBranchShape);
    }
    if !is_subdivided_star(&children, at(d + 1), d) {
        out.push(StructureClause::EndBranchShape);
    }
    if s == 2 * d + 1 {
        let t1 = t.degree(at(d + 1)).saturating_sub(1);
        let t2 = t.degree(at(d + 2)).saturating_sub(1);
        let matches = t1 >= 2
            && t2 >= 2
            && joined_subdivided_stars(t1, t2, d)
                .ok()
                .is_some_and(|g| tree_canonical_form(&g).ok() == tree_canonical_form(t).ok());
        if !matches {
            out.push(StructureClause::TwoStarShape);
        }
    }
    Ok(out)
}

fn rooted_children(t: &Graph, root: usize) -> Vec<Vec<usize>> {
    let mut children = vec![Vec::new(); t.order()];
    let mut seen = vec![false; t.order()];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                children[v].push(w);
                stack.push(w);
            }
        }
    }
    children
}

fn only_branch_below(t: &Graph, children: &[Vec<usize>], v: usize) -> bool {
    let mut stack = children[v].clone();
    while let Some(u) = stack.pop() {
        if t.degree(u) >= 3 {
            return false;
        }
        stack.extend(&children[u]);
    }
    true
}

/// The subtree at `v` is a star with at least two legs, each leg a chain of
/// exactly `d` vertices.
fn is_subdivided_star(children: &[Vec<usize>], v: usize, d: usize) -> bool {
    children[v].len() >= 2
        && children[v].iter().all(|&c| {
            let (mut cur, mut len) = (c, 1);
            while let [next] = children[cur][..] {
                cur = next;
                len += 1;
            }
            children[cur].is_empty() && len == d
        })
}
