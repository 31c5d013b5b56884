//! Binary indexed tree over a fixed key universe, storing prefix sums.
//!
//! Used as the size-ordered search structure with subtree value sums when
//! classifying swap items: keys are `(size, tiebreak)` ranks, known up front.

use crate::scale::Amount;

pub(crate) struct Fenwick<A> {
    tree: Vec<A>,
}

impl<A: Amount> Fenwick<A> {
    pub fn new(len: usize) -> Self {
        Fenwick {
            tree: vec![A::zero(); len + 1],
        }
    }

    pub fn add(&mut self, pos: usize, amount: &A) {
        let mut i = pos + 1;
        while i < self.tree.len() {
            self.tree[i].add_assign(amount);
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions `0..=pos`.
    pub fn prefix(&self, pos: usize) -> A {
        let mut acc = A::zero();
        let mut i = pos + 1;
        while i > 0 {
            acc.add_assign(&self.tree[i]);
            i &= i - 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn prefix_sums_match_naive(ops in prop::collection::vec((0usize..40, -50i128..50), 0..80)) {
            let mut fw = Fenwick::<i128>::new(40);
            let mut plain = [0i128; 40];
            for &(pos, amt) in &ops {
                fw.add(pos, &amt);
                plain[pos] += amt;
            }
            for pos in 0..40 {
                prop_assert_eq!(fw.prefix(pos), plain[..=pos].iter().sum::<i128>());
            }
        }
    }
}
