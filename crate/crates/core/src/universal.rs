//! Construction of a 2-robust universal policy.
//!
//! Items are processed by non-decreasing size. A swap item goes to the
//! front of the sequence built so far; any other item is inserted right
//! before the first item of lower density (`d̃`).
//!
//! [`universal_naive`] performs the insertions literally on a vector and is
//! kept as the reference for [`universal_fast`], which runs in
//! `O(n log n)`.

use std::collections::BTreeSet;

use crate::greedy::swap_flags;
use crate::model::Instance;
use crate::order::{size_order, DensityRanks};
use crate::policy::UniversalPolicy;

/// Quadratic reference construction.
pub fn universal_naive(instance: &Instance) -> UniversalPolicy {
    UniversalPolicy::from_indices(instance, &universal_naive_indices(instance))
}

pub(crate) fn universal_naive_indices(instance: &Instance) -> Vec<usize> {
    let ranks = DensityRanks::new(instance);
    let swap = swap_flags(instance, &ranks);
    let mut seq: Vec<usize> = Vec::with_capacity(instance.len());
    for x in size_order(instance) {
        if swap[x] {
            seq.insert(0, x);
        } else {
            let j = seq
                .iter()
                .position(|&p| ranks.rank[p] < ranks.rank[x])
                .unwrap_or(seq.len());
            seq.insert(j, x);
        }
    }
    seq
}

/// `O(n log n)` construction producing the same permutation as
/// [`universal_naive`].
///
/// The sequence is kept as a list of density-ordered trees. Every tree but
/// the oldest ends with exactly one swap item, its least dense member, and
/// holds the non-swap items between that swap item and the previous one.
/// A stack of "live" trees, sorted by the density of their swap items,
/// locates the tree a non-swap item belongs to by binary search; a tree
/// whose swap item is denser than a newer swap item can never receive
/// another item and is dropped from the stack.
pub fn universal_fast(instance: &Instance) -> UniversalPolicy {
    UniversalPolicy::from_indices(instance, &universal_fast_indices(instance))
}

struct Segment {
    /// Density rank of the closing swap item; `None` for the tail segment.
    key: Option<u32>,
    members: BTreeSet<u32>,
}

pub(crate) fn universal_fast_indices(instance: &Instance) -> Vec<usize> {
    let ranks = DensityRanks::new(instance);
    let swap = swap_flags(instance, &ranks);

    // segments[0] is the tail; later segments sit further to the front
    let mut segments = vec![Segment {
        key: None,
        members: BTreeSet::new(),
    }];
    // live segment ids, bottom = tail; keys strictly increase upwards
    let mut live: Vec<usize> = vec![0];

    for x in size_order(instance) {
        let rx = ranks.rank[x];
        if swap[x] {
            while let Some(&top) = live.last() {
                match segments[top].key {
                    Some(k) if k > rx => {
                        live.pop();
                    }
                    _ => break,
                }
            }
            segments.push(Segment {
                key: Some(rx),
                members: BTreeSet::from([rx]),
            });
            live.push(segments.len() - 1);
        } else {
            // frontmost live segment whose swap item is less dense than x
            let p = live.partition_point(|&s| segments[s].key.map_or(true, |k| k < rx));
            let target = live[p - 1];
            segments[target].members.insert(rx);
        }
    }

    segments
        .iter()
        .rev()
        .flat_map(|s| s.members.iter().rev())
        .map(|&r| ranks.ascending[r as usize])
        .collect()
}
