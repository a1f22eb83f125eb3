use fixedbitset::FixedBitSet;

use super::{DominationQuery, GammaWitness};
use crate::graph::{all_pairs, Graph};

/// Branching search for `γ_d^p`.
///
/// Every undominated vertex needs some member inside its radius-`d` ball,
/// so the search branches on the undominated vertex with the fewest usable
/// candidates, trying those candidates by decreasing fresh coverage. A
/// branch that picks `w` removes every vertex within distance `p` of `w`
/// from the pool, and siblings after `w` exclude `w`.
pub(super) struct Searcher {
    n: usize,
    balls: Vec<FixedBitSet>,
    conflicts: Vec<FixedBitSet>,
    max_ball: usize,
}

impl Searcher {
    pub(super) fn new(g: &Graph, q: DominationQuery) -> Self {
        let n = g.order();
        let table = all_pairs(g);
        let ball_of = |v: usize, r: usize| {
            let mut set = FixedBitSet::with_capacity(n);
            for u in 0..n {
                if table.within(v, u, r) {
                    set.insert(u);
                }
            }
            set
        };
        let balls: Vec<FixedBitSet> = (0..n).map(|v| ball_of(v, q.d)).collect();
        let conflicts = (0..n).map(|v| ball_of(v, q.p)).collect();
        let max_ball = balls.iter().map(|b| b.count_ones(..)).max().unwrap_or(1);
        Searcher {
            n,
            balls,
            conflicts,
            max_ball,
        }
    }

    fn full(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.n);
        all.insert_range(..);
        all
    }

    pub(super) fn solve(&self) -> GammaWitness {
        let empty = FixedBitSet::with_capacity(self.n);
        let Some(k) = (1..=self.n).find(|&k| self.extendable(&empty, &self.full(), k)) else {
            return GammaWitness::infinite();
        };
        GammaWitness::found(self.least_witness(k))
    }

    /// Builds the lexicographically least optimal set one member at a time:
    /// the next member is the smallest vertex after which a completion within
    /// the remaining budget still exists.
    fn least_witness(&self, k: usize) -> Vec<usize> {
        let mut chosen = Vec::with_capacity(k);
        let mut dominated = FixedBitSet::with_capacity(self.n);
        let mut allowed = self.full();
        while !self.is_complete(&dominated) {
            let budget = k - chosen.len() - 1;
            let next = allowed
                .ones()
                .find(|&v| {
                    let (dom, pool) = self.pick(&dominated, &allowed, v);
                    self.extendable(&dom, &Self::after(pool, v), budget)
                })
                .expect("an optimal completion exists");
            let (dom, pool) = self.pick(&dominated, &allowed, next);
            dominated = dom;
            allowed = Self::after(pool, next);
            chosen.push(next);
        }
        chosen
    }

    fn after(mut pool: FixedBitSet, v: usize) -> FixedBitSet {
        pool.remove_range(..v + 1);
        pool
    }

    fn pick(
        &self,
        dominated: &FixedBitSet,
        allowed: &FixedBitSet,
        v: usize,
    ) -> (FixedBitSet, FixedBitSet) {
        let mut dom = dominated.clone();
        dom.union_with(&self.balls[v]);
        let mut pool = allowed.clone();
        pool.difference_with(&self.conflicts[v]);
        pool.remove(v);
        (dom, pool)
    }

    fn is_complete(&self, dominated: &FixedBitSet) -> bool {
        dominated.count_ones(..) == self.n
    }

    /// Whether at most `budget` further members drawn from `allowed` can
    /// dominate everything still undominated.
    fn extendable(&self, dominated: &FixedBitSet, allowed: &FixedBitSet, budget: usize) -> bool {
        let undominated = self.n - dominated.count_ones(..);
        if undominated == 0 {
            return true;
        }
        if budget == 0 || undominated > budget * self.max_ball {
            return false;
        }
        let mut target: Option<FixedBitSet> = None;
        let mut fewest = usize::MAX;
        for u in (0..self.n).filter(|&u| !dominated.contains(u)) {
            let cands = self.balls[u].intersection(allowed).count();
            if cands < fewest {
                fewest = cands;
                let mut set = self.balls[u].clone();
                set.intersect_with(allowed);
                target = Some(set);
                if cands <= 1 {
                    break;
                }
            }
        }
        let Some(target) = target.filter(|_| fewest > 0) else {
            return false;
        };
        let mut order: Vec<(usize, usize)> = target
            .ones()
            .map(|w| (self.balls[w].difference(dominated).count(), w))
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut pool = allowed.clone();
        for (_, w) in order {
            let (dom, next_pool) = self.pick(dominated, &pool, w);
            if self.extendable(&dom, &next_pool, budget - 1) {
                return true;
            }
            pool.remove(w);
        }
        false
    }
}
