//! Construction of a φ-robust universal policy for unit-density instances.
//!
//! Items are processed from smallest to largest (`≺`). Each one is inserted
//! as far back as possible while never standing behind an item it
//! outweighs by a factor of φ or more: it goes right before the first item
//! `p` with `v(x) ≥ φ·v(p)`, or at the end if there is none.

use crate::error::{Error, Result};
use crate::model::Instance;
use crate::order::unit_order;
use crate::policy::UniversalPolicy;
use crate::rational::lt_phi_times_positive;

fn require_unit_density(instance: &Instance) -> Result<()> {
    match instance.first_non_unit_item() {
        None => Ok(()),
        Some(item) => Err(Error::Precondition(format!(
            "unit density required, but item {} has value {} and size {}",
            item.id, item.value, item.size
        ))),
    }
}

/// Quadratic reference construction.
pub fn universal_ud_naive(instance: &Instance) -> Result<UniversalPolicy> {
    require_unit_density(instance)?;
    Ok(UniversalPolicy::from_indices(
        instance,
        &universal_ud_naive_traced(instance).0,
    ))
}

/// Naive construction that also reports which items were inserted at the
/// front of the partial sequence.
pub(crate) fn universal_ud_naive_traced(instance: &Instance) -> (Vec<usize>, Vec<bool>) {
    let items = instance.items();
    let mut seq: Vec<usize> = Vec::with_capacity(items.len());
    let mut at_front = vec![false; items.len()];
    for x in unit_order(instance) {
        let vx = &items[x].value;
        let j = seq
            .iter()
            .position(|&p| !lt_phi_times_positive(vx, &items[p].value))
            .unwrap_or(seq.len());
        at_front[x] = j == 0;
        seq.insert(j, x);
    }
    (seq, at_front)
}

/// `O(n log n)` construction producing the same permutation as
/// [`universal_ud_naive`].
///
/// Items ever inserted at the front form a subsequence whose values grow
/// towards the front; the insertion anchor of every item lies in it, so a
/// binary search there replaces the linear scan. The sequence itself is a
/// doubly linked list over item indices.
pub fn universal_ud_fast(instance: &Instance) -> Result<UniversalPolicy> {
    require_unit_density(instance)?;
    Ok(UniversalPolicy::from_indices(
        instance,
        &universal_ud_fast_indices(instance),
    ))
}

const NIL: usize = usize::MAX;

pub(crate) fn universal_ud_fast_indices(instance: &Instance) -> Vec<usize> {
    let items = instance.items();
    let n = items.len();
    let mut prev = vec![NIL; n];
    let mut next = vec![NIL; n];
    let (mut head, mut tail) = (NIL, NIL);
    // front-inserted items, oldest (smallest) first; last = current head
    let mut fronts: Vec<usize> = Vec::new();

    for x in unit_order(instance) {
        let vx = &items[x].value;
        // anchors satisfy v(x) >= φ·v(p); these form a prefix of `fronts`
        let k = fronts.partition_point(|&p| !lt_phi_times_positive(vx, &items[p].value));
        if k == 0 {
            // append at the end
            prev[x] = tail;
            if tail == NIL {
                head = x;
                fronts.push(x);
            } else {
                next[tail] = x;
            }
            tail = x;
        } else {
            let anchor = fronts[k - 1];
            let before = prev[anchor];
            prev[x] = before;
            next[x] = anchor;
            prev[anchor] = x;
            if before == NIL {
                head = x;
                fronts.push(x);
            } else {
                next[before] = x;
            }
        }
    }

    let mut out = Vec::with_capacity(n);
    let mut cur = head;
    while cur != NIL {
        out.push(cur);
        cur = next[cur];
    }
    out
}
