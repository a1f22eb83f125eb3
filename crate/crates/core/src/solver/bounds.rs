use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Which piece of the leaf-sensitive tree bound applies, by comparing `n`
/// with `(d + 1)·ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `n < (d+1)ℓ`: the `(n − ℓ)/d` piece.
    FewerThan,
    /// `n = (d+1)ℓ`: the `n/(d+1)` piece.
    Equal,
    /// `n > (d+1)ℓ`: the `(n + ℓ)/(d+2)` piece.
    MoreThan,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::FewerThan => "n<(d+1)l",
            Regime::Equal => "n=(d+1)l",
            Regime::MoreThan => "n>(d+1)l",
        }
    }
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Closed-form bounds for one graph and radius, in exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSheet {
    pub n: usize,
    pub leaves: usize,
    pub d: usize,
    /// `n / (d+1)`
    #[serde(serialize_with = "ratio_str")]
    pub order_bound: Ratio<i64>,
    /// `(n − ℓ) / d`
    #[serde(serialize_with = "ratio_str")]
    pub deficit_bound: Ratio<i64>,
    /// `(n + ℓ) / (d+2)`
    #[serde(serialize_with = "ratio_str")]
    pub surplus_bound: Ratio<i64>,
    /// `(n − dℓ + 2d) / (2d+1)`, a lower bound for `γ_d` of trees.
    #[serde(serialize_with = "ratio_str")]
    pub lower_bound: Ratio<i64>,
    /// `n ≥ d + 1`
    pub order_at_least_d_plus_1: bool,
    /// `n − ℓ ≥ d`
    pub core_at_least_d: bool,
    /// `n ≥ d`
    pub order_at_least_d: bool,
    pub is_tree: bool,
    /// Set for trees with `n ≥ d + ℓ`.
    pub regime: Option<Regime>,
}

impl BoundSheet {
    /// The bound of the applicable regime, when one applies.
    pub fn piecewise_bound(&self) -> Option<Ratio<i64>> {
        self.regime.map(|r| match r {
            Regime::FewerThan => self.deficit_bound,
            Regime::Equal => self.order_bound,
            Regime::MoreThan => self.surplus_bound,
        })
    }
}

pub fn bound_sheet(g: &Graph, d: usize) -> BoundSheet {
    assert!(d >= 1, "d must be at least 1");
    let n = g.order();
    let leaves = g.leaves().len();
    let (ni, li, di) = (n as i64, leaves as i64, d as i64);
    let is_tree = g.is_tree();
    let regime = (is_tree && n >= d + leaves).then(|| match n.cmp(&((d + 1) * leaves)) {
        std::cmp::Ordering::Less => Regime::FewerThan,
        std::cmp::Ordering::Equal => Regime::Equal,
        std::cmp::Ordering::Greater => Regime::MoreThan,
    });
    BoundSheet {
        n,
        leaves,
        d,
        order_bound: Ratio::new(ni, di + 1),
        deficit_bound: Ratio::new(ni - li, di),
        surplus_bound: Ratio::new(ni + li, di + 2),
        lower_bound: Ratio::new(ni - di * li + 2 * di, 2 * di + 1),
        order_at_least_d_plus_1: n > d,
        core_at_least_d: n >= leaves + d,
        order_at_least_d: n >= d,
        is_tree,
        regime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{joined_subdivided_stars, path, star};

    #[test]
    fn path_six() {
        let s = bound_sheet(&path(6).unwrap(), 2);
        assert_eq!((s.n, s.leaves), (6, 2));
        assert_eq!(s.order_bound, Ratio::from_integer(2));
        assert_eq!(s.deficit_bound, Ratio::from_integer(2));
        assert_eq!(s.surplus_bound, Ratio::from_integer(2));
        assert_eq!(s.regime, Some(Regime::Equal));
        assert_eq!(s.piecewise_bound(), Some(Ratio::from_integer(2)));
    }

    #[test]
    fn joined_stars_regime() {
        let s = bound_sheet(&joined_subdivided_stars(2, 2, 2).unwrap(), 2);
        assert_eq!((s.n, s.leaves), (10, 4));
        assert_eq!(s.deficit_bound, Ratio::from_integer(3));
        assert_eq!(s.regime, Some(Regime::FewerThan));
    }

    #[test]
    fn star_has_no_regime() {
        let s = bound_sheet(&star(3).unwrap(), 2);
        assert_eq!((s.n, s.leaves), (4, 3));
        assert!(!s.core_at_least_d);
        assert_eq!(s.regime, None);
    }

    #[test]
    fn exact_rationals() {
        let s = bound_sheet(&path(5).unwrap(), 2);
        assert_eq!(s.order_bound, Ratio::new(5, 3));
        assert_eq!(s.lower_bound, Ratio::new(5 - 4 + 4, 5));
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["order_bound"], "5/3");
    }
}
