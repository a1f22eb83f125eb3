use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::enumeration::{shard_of, CanonicalGraph, EnumerationSpace, SpaceKind};
use crate::error::Result;
use crate::graph::CanonicalCode;

/// One evaluated instance.
pub(super) struct Instance<T> {
    pub code: CanonicalCode,
    pub n: usize,
    pub graph: crate::graph::Graph,
    pub value: T,
}

/// Evaluates every graph of `kind` with order in `orders`, spread over
/// `shards` parallel workers. Output is sorted by order then code.
pub(super) fn scan_space<T, F>(
    kind: SpaceKind,
    orders: RangeInclusive<usize>,
    shards: usize,
    eval: F,
) -> Result<Vec<Instance<T>>>
where
    T: Send,
    F: Fn(&CanonicalGraph) -> Result<T> + Sync,
{
    let mut work: Vec<Vec<CanonicalGraph>> = vec![Vec::new(); shards];
    for n in orders.filter(|&n| n >= 1) {
        for (slot, part) in work
            .iter_mut()
            .zip(EnumerationSpace::new(kind, n)?.shard(shards)?)
        {
            slot.extend(part);
        }
    }
    run(work, eval)
}

/// Same as [`scan_space`] over an explicit list of members.
pub(super) fn scan_list<T, F>(
    items: Vec<CanonicalGraph>,
    shards: usize,
    eval: F,
) -> Result<Vec<Instance<T>>>
where
    T: Send,
    F: Fn(&CanonicalGraph) -> Result<T> + Sync,
{
    let mut work: Vec<Vec<CanonicalGraph>> = vec![Vec::new(); shards];
    for item in items {
        let slot = shard_of(&item.code, shards);
        work[slot].push(item);
    }
    run(work, eval)
}

fn run<T, F>(work: Vec<Vec<CanonicalGraph>>, eval: F) -> Result<Vec<Instance<T>>>
where
    T: Send,
    F: Fn(&CanonicalGraph) -> Result<T> + Sync,
{
    let per_shard: Vec<Vec<Instance<T>>> = work
        .into_par_iter()
        .map(|shard| {
            shard
                .into_iter()
                .map(|item| {
                    let value = eval(&item)?;
                    Ok(Instance {
                        n: item.graph.order(),
                        code: item.code,
                        graph: item.graph,
                        value,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<Instance<T>> = per_shard.into_iter().flatten().collect();
    all.sort_by(|a, b| (a.n, &a.code).cmp(&(b.n, &b.code)));
    Ok(all)
}
