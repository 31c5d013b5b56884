//! The modified greedy algorithm and swap-item classification.
//!
//! For a known capacity, modified greedy takes the longest density-ordered
//! prefix that fits, unless the first item that does not fit is worth more
//! on its own. Items that win that comparison for some capacity are *swap
//! items*; equivalently, an item is a swap item iff it is worth more than
//! all denser items of no larger size combined.

use crate::error::{Error, Result};
use crate::fenwick::Fenwick;
use crate::model::{Instance, ItemId};
use crate::order::{cmp_dtilde, dtilde_greater, size_order, DensityRanks};
use crate::rational::Rational;
use crate::scale::{Amount, ScaledValues, ValueScale};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyKind {
    PrefixSet,
    SwapSingleton,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub kind: GreedyKind,
    /// What modified greedy returns for the capacity.
    pub packed: Vec<ItemId>,
    /// The greedy set: the longest fitting prefix in density order.
    pub greedy_set: Vec<ItemId>,
    /// The first item in density order that did not fit after the prefix,
    /// whether or not it was chosen.
    pub swap_item: Option<ItemId>,
    pub value: Rational,
}

/// Modified greedy for a known capacity. Ties between the prefix value and
/// the next item's value go to the prefix.
pub fn mgreedy(instance: &Instance, capacity: &Rational) -> Result<GreedyOutcome> {
    let (kind, packed, prefix, next) = mgreedy_indices(instance, capacity)?;
    Ok(GreedyOutcome {
        kind,
        value: instance.value_of(&packed),
        packed: instance.ids_of(&packed),
        greedy_set: instance.ids_of(&prefix),
        swap_item: next.map(|s| instance.item(s).id.clone()),
    })
}

type GreedyIndices = (GreedyKind, Vec<usize>, Vec<usize>, Option<usize>);

pub(crate) fn mgreedy_indices(instance: &Instance, capacity: &Rational) -> Result<GreedyIndices> {
    if capacity.is_negative() {
        return Err(Error::Precondition(format!("negative capacity {capacity}")));
    }
    let items = instance.items();
    let mut candidates: Vec<usize> = (0..items.len())
        .filter(|&i| &items[i].size <= capacity)
        .collect();
    candidates.sort_unstable_by(|&a, &b| cmp_dtilde(&items[b], &items[a]));

    let mut used = Rational::zero();
    let mut k = 0;
    while k < candidates.len() {
        let next = &used + &items[candidates[k]].size;
        if &next > capacity {
            break;
        }
        used = next;
        k += 1;
    }
    let prefix = candidates[..k].to_vec();
    let next = candidates.get(k).copied();
    match next {
        Some(s) if items[s].value > instance.value_of(&prefix) => {
            Ok((GreedyKind::SwapSingleton, vec![s], prefix, next))
        }
        _ => Ok((GreedyKind::PrefixSet, prefix.clone(), prefix, next)),
    }
}

/// `true` iff the item is worth more than all denser items of no larger size
/// combined. Computed directly in linear time; see [`swap_items`] for the
/// bulk version.
pub fn is_swap_item(instance: &Instance, id: &ItemId) -> Result<bool> {
    let idx = instance.index_of(id)?;
    Ok(is_swap_index(instance, idx))
}

pub(crate) fn is_swap_index(instance: &Instance, idx: usize) -> bool {
    let items = instance.items();
    let me = &items[idx];
    let rivals: Rational = items
        .iter()
        .filter(|j| j.size <= me.size && dtilde_greater(j, me))
        .map(|j| &j.value)
        .sum();
    me.value > rivals
}

/// All swap items, in instance order.
pub fn swap_items(instance: &Instance) -> Vec<ItemId> {
    let flags = swap_flags(instance, &DensityRanks::new(instance));
    (0..instance.len())
        .filter(|&i| flags[i])
        .map(|i| instance.item(i).id.clone())
        .collect()
}

/// Swap flag per item index in `O(n log n)`: items are visited by
/// decreasing density and inserted into a size-keyed prefix-sum tree; each
/// item is compared against the value already stored at sizes up to its own.
pub(crate) fn swap_flags(instance: &Instance, ranks: &DensityRanks) -> Vec<bool> {
    let items = instance.items();
    let n = items.len();
    let by_size = size_order(instance);
    let mut pos = vec![0usize; n];
    let mut upper = vec![0usize; n];
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && items[by_size[end + 1]].size == items[by_size[start]].size {
            end += 1;
        }
        for (p, &i) in by_size.iter().enumerate().take(end + 1).skip(start) {
            pos[i] = p;
            upper[i] = end;
        }
        start = end + 1;
    }

    let scale = ValueScale::new(items.iter().map(|i| &i.value));
    match &scale.values {
        ScaledValues::Small(values) => classify(values, ranks, &pos, &upper),
        ScaledValues::Big(values) => classify(values, ranks, &pos, &upper),
    }
}

fn classify<A: Amount>(values: &[A], ranks: &DensityRanks, pos: &[usize], upper: &[usize]) -> Vec<bool> {
    let mut tree = Fenwick::new(values.len());
    let mut flags = vec![false; values.len()];
    for &i in ranks.ascending.iter().rev() {
        flags[i] = values[i] > tree.prefix(upper[i]);
        tree.add(pos[i], &values[i]);
    }
    flags
}
