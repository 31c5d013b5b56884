//! Reference oracles shared by the integration tests and the acceptance
//! runner. They are deliberately simple (subset enumeration, direct
//! simulation, per-item predicates) and share no code with the library's
//! algorithms beyond the data model and exact arithmetic.

#![allow(dead_code)]

use std::cmp::Ordering;

use oknap_core::{Instance, Item, ItemId, Rational, UniversalPolicy};
use rand::Rng;

pub fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `d(a) > d(b)`, ties by larger tiebreak, by cross multiplication.
pub fn denser(a: &Item, b: &Item) -> bool {
    match (&a.value * &b.size).cmp(&(&b.value * &a.size)) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.tiebreak > b.tiebreak,
    }
}

/// `v(i) > v({ j : l(j) <= l(i), j denser than i })`.
pub fn swap_by_definition(inst: &Instance, i: usize) -> bool {
    let it = inst.item(i);
    let rest: Rational = inst
        .items()
        .iter()
        .filter(|j| j.size <= it.size && denser(j, it))
        .map(|j| j.value.clone())
        .sum();
    it.value > rest
}

/// Sizes must be integers. Entry `c` is the best value of any subset of
/// size at most `c`, for `c` in `0..=l(I)`, by enumerating all subsets.
pub fn best_by_capacity(inst: &Instance) -> Vec<Rational> {
    let n = inst.len();
    assert!(n <= 20, "enumeration oracle is exponential");
    let sizes: Vec<usize> = inst
        .items()
        .iter()
        .map(|i| {
            assert!(i.size.is_integer());
            i.size.numer().to_string().parse().unwrap()
        })
        .collect();
    let total: usize = sizes.iter().sum();
    let mut best = vec![Rational::zero(); total + 1];
    for mask in 0u32..(1 << n) {
        let (mut s, mut v) = (0usize, Rational::zero());
        for (k, item) in inst.items().iter().enumerate() {
            if mask >> k & 1 == 1 {
                s += sizes[k];
                v += &item.value;
            }
        }
        if v > best[s] {
            best[s] = v;
        }
    }
    for c in 1..=total {
        if best[c - 1] > best[c] {
            best[c] = best[c - 1].clone();
        }
    }
    best
}

/// Best value at one (rational) capacity, by enumeration.
pub fn best_at(inst: &Instance, capacity: &Rational) -> Rational {
    let n = inst.len();
    let mut best = Rational::zero();
    for mask in 0u32..(1 << n) {
        let (mut s, mut v) = (Rational::zero(), Rational::zero());
        for (k, item) in inst.items().iter().enumerate() {
            if mask >> k & 1 == 1 {
                s += &item.size;
                v += &item.value;
            }
        }
        if &s <= capacity && v > best {
            best = v;
        }
    }
    best
}

/// Value packed by trying `order` in sequence at `capacity`.
pub fn simulate(inst: &Instance, order: &[ItemId], capacity: &Rational) -> Rational {
    let mut left = capacity.clone();
    let mut value = Rational::zero();
    for id in order {
        let it = inst.get(id).unwrap();
        if it.size <= left {
            left -= &it.size;
            value += &it.value;
        }
    }
    value
}

/// Worst ratio over integer capacities; `None` stands for infinity.
pub fn robustness_by_enumeration(inst: &Instance, policy: &UniversalPolicy) -> Option<Rational> {
    let best = best_by_capacity(inst);
    let mut worst = Some(Rational::one());
    for (c, opt) in best.iter().enumerate() {
        let got = simulate(inst, &policy.order, &Rational::from(c as u64));
        let ratio = if got.is_zero() {
            if opt.is_zero() {
                Some(Rational::one())
            } else {
                None
            }
        } else {
            Some(opt / &got)
        };
        worst = match (worst, ratio) {
            (None, _) | (_, None) => None,
            (Some(a), Some(b)) => Some(a.max(b)),
        };
    }
    worst
}

/// Random instance with integer sizes in `1..=max_size` and values in
/// `0..=max_value` (`value = size` when `unit`).
pub fn random_instance(rng: &mut impl Rng, n: usize, max_value: i64, max_size: i64, unit: bool) -> Instance {
    Instance::from_triples((0..n).map(|k| {
        let size = rng.random_range(1..=max_size);
        let value = if unit { size } else { rng.random_range(0..=max_value) };
        (format!("i{k}"), r(value), r(size))
    }))
    .unwrap()
}

/// Random instance with rational values and sizes.
pub fn random_rational_instance(rng: &mut impl Rng, n: usize) -> Instance {
    Instance::from_triples((0..n).map(|k| {
        let size = Rational::frac(rng.random_range(1..=20), rng.random_range(1..=4));
        let value = Rational::frac(rng.random_range(0..=20), rng.random_range(1..=5));
        (format!("q{k}"), value, size)
    }))
    .unwrap()
}

/// The four structural properties of the 2-robust construction, checked on
/// the final order. Returns a description of the first violation.
pub fn universal_structure_violation(inst: &Instance, policy: &UniversalPolicy) -> Option<String> {
    let items: Vec<&Item> = policy.order.iter().map(|id| inst.get(id).unwrap()).collect();
    let swap: Vec<bool> = policy
        .order
        .iter()
        .map(|id| swap_by_definition(inst, inst.index_of(id).unwrap()))
        .collect();
    let n = items.len();
    for k in 0..n {
        if !swap[k] && k + 1 < n && !denser(items[k], items[k + 1]) {
            return Some(format!("non-swap {} is not denser than its successor", items[k].id));
        }
        if swap[k] {
            for j in 0..k {
                if items[j].size < items[k].size {
                    return Some(format!("{} before swap {} is smaller", items[j].id, items[k].id));
                }
                if items[j].value < items[k].value {
                    return Some(format!("{} before swap {} is worth less", items[j].id, items[k].id));
                }
            }
        }
        let later_denser: Rational = items[k + 1..]
            .iter()
            .filter(|j| denser(j, items[k]))
            .map(|j| j.value.clone())
            .sum();
        if items[k].value < later_denser {
            return Some(format!("{} is worth less than the denser items after it", items[k].id));
        }
    }
    None
}
