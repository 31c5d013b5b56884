//! Item orderings: density with tie-breaking (`d̃`), the unit-density
//! order `≺`, and rank tables used by the fast builders.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::model::{Instance, Item};
use crate::rational::Rational;

/// Value per unit of size.
pub fn density(item: &Item) -> Rational {
    &item.value / &item.size
}

/// Compares by density, then by tiebreak. `Greater` means `a` has the
/// higher density in the tie-broken sense.
pub fn cmp_dtilde(a: &Item, b: &Item) -> Ordering {
    // v(a)/l(a) vs v(b)/l(b) without materialising the quotients
    (&a.value * &b.size)
        .cmp(&(&b.value * &a.size))
        .then(a.tiebreak.cmp(&b.tiebreak))
}

/// `d̃(a) ≻ d̃(b)`: strictly denser, or equally dense with larger tiebreak.
pub fn dtilde_greater(a: &Item, b: &Item) -> bool {
    cmp_dtilde(a, b) == Ordering::Greater
}

/// Compares by value, then tiebreak. Only meaningful for unit-density items.
pub fn cmp_unit(a: &Item, b: &Item) -> Ordering {
    a.value.cmp(&b.value).then(a.tiebreak.cmp(&b.tiebreak))
}

/// `a ≺ b` in the unit-density order: smaller value, or equal value with
/// smaller tiebreak.
pub fn prec_unit(a: &Item, b: &Item) -> bool {
    cmp_unit(a, b) == Ordering::Less
}

/// Compares by size, then tiebreak.
pub fn cmp_size(a: &Item, b: &Item) -> Ordering {
    a.size.cmp(&b.size).then(a.tiebreak.cmp(&b.tiebreak))
}

/// A fraction prepared for many comparisons: machine integers when they
/// fit, big integers otherwise. Not necessarily reduced.
#[derive(Clone, Debug)]
enum FracKey {
    Small(i64, i64),
    Big(BigInt, BigInt),
}

impl FracKey {
    fn of(r: &Rational) -> Self {
        match r.small_parts() {
            Some((n, d)) => FracKey::Small(n, d),
            None => FracKey::Big(r.numer().clone(), r.denom().clone()),
        }
    }

    /// `a / b` for positive `b`.
    fn quotient(a: &Rational, b: &Rational) -> Self {
        if let (Some((an, ad)), Some((bn, bd))) = (a.small_parts(), b.small_parts()) {
            if let (Some(n), Some(d)) = (an.checked_mul(bd), ad.checked_mul(bn)) {
                return FracKey::Small(n, d);
            }
        }
        FracKey::Big(a.numer() * b.denom(), a.denom() * b.numer())
    }

    fn big(&self) -> (BigInt, BigInt) {
        match self {
            FracKey::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            FracKey::Big(n, d) => (n.clone(), d.clone()),
        }
    }
}

impl PartialEq for FracKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for FracKey {}

impl PartialOrd for FracKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FracKey {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        if let (FracKey::Small(a, b), FracKey::Small(c, d)) = (self, other) {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        let ((a, b), (c, d)) = (self.big(), other.big());
        (a * d).cmp(&(c * b))
    }
}

/// Indices sorted ascending by `(key, tiebreak)`.
fn sorted_by_key(instance: &Instance, key: impl Fn(&Item) -> FracKey) -> Vec<usize> {
    let mut keyed: Vec<(FracKey, u32, u32)> = instance
        .items()
        .iter()
        .enumerate()
        .map(|(i, item)| (key(item), item.tiebreak, i as u32))
        .collect();
    // tiebreaks are distinct, so the index never decides
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, _, i)| i as usize).collect()
}

/// Item indices sorted by `d̃` ascending, and each item's rank in that
/// order. A larger rank means a higher density.
#[derive(Clone, Debug)]
pub struct DensityRanks {
    pub ascending: Vec<usize>,
    pub rank: Vec<u32>,
}

impl DensityRanks {
    pub fn new(instance: &Instance) -> Self {
        let ascending = sorted_by_key(instance, |i| FracKey::quotient(&i.value, &i.size));
        let mut rank = vec![0u32; ascending.len()];
        for (r, &i) in ascending.iter().enumerate() {
            rank[i] = r as u32;
        }
        DensityRanks { ascending, rank }
    }
}

/// Item indices sorted by size ascending, ties by tiebreak ascending.
pub fn size_order(instance: &Instance) -> Vec<usize> {
    sorted_by_key(instance, |i| FracKey::of(&i.size))
}

/// Item indices sorted ascending in the unit-density order `≺`.
pub fn unit_order(instance: &Instance) -> Vec<usize> {
    sorted_by_key(instance, |i| FracKey::of(&i.value))
}
