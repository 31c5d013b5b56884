//! Reductions from SubsetSum to deciding α-robustness of a given universal
//! policy, for general and for unit-density instances.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Instance, ItemId};
use crate::policy::UniversalPolicy;
use crate::rational::Rational;

use super::subsetsum::SubsetSumInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Regular,
    Auxiliary,
    Dummy,
}

/// A reduction output: the policy is α-robust on the instance iff the
/// SubsetSum source has no solution.
#[derive(Clone, Debug)]
pub struct HardnessGadget {
    pub instance: Instance,
    pub policy: UniversalPolicy,
    pub alpha: Rational,
    pub epsilon: Rational,
    pub labels: BTreeMap<ItemId, Label>,
    /// The SubsetSum target `T`, the critical capacity of the reduction.
    pub target: u64,
}

impl HardnessGadget {
    /// Ids carrying `label`, in instance order.
    pub fn ids_with(&self, label: Label) -> Vec<ItemId> {
        self.instance
            .items()
            .iter()
            .filter(|i| self.labels[&i.id] == label)
            .map(|i| i.id.clone())
            .collect()
    }
}

fn check_target(t: u64) -> Result<()> {
    if !t.is_power_of_two() || t < 8 {
        return Err(Error::Precondition(format!(
            "target must be a power of two >= 8, got {t}"
        )));
    }
    Ok(())
}

/// Regular item ids `i1..in` by input position, listed by decreasing
/// weight; equal weights keep the reverse of their input order.
fn regular_order(weights: &[u64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..weights.len()).collect();
    idx.sort_by_key(|&i| (weights[i], i));
    idx.reverse();
    idx
}

struct Builder {
    triples: Vec<(ItemId, Rational, Rational)>,
    labels: BTreeMap<ItemId, Label>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            triples: Vec::new(),
            labels: BTreeMap::new(),
        }
    }

    fn push(&mut self, id: String, value: Rational, size: Rational, label: Label) -> ItemId {
        let id = ItemId::from(id);
        self.labels.insert(id.clone(), label);
        self.triples.push((id.clone(), value, size));
        id
    }
}

/// General-instance gadget. With `ε = (α(T−1)−T)/(α(T−1)−1)`:
/// regular items `l = v = w`, auxiliary items `j_k` with `l = 2^k` and
/// `v = 2^k(1−ε)` for `k = 0..log₂T−1`, and a dummy `d` with `l = T+1` and
/// `v = (1−ε)/ε · (v(aux) + v(reg))`. The policy is `d`, then the auxiliary
/// items from largest to smallest, then the regular items by decreasing
/// weight.
pub fn gen_hardness_general(s: &SubsetSumInstance, alpha: &Rational) -> Result<HardnessGadget> {
    let t = s.target;
    check_target(t)?;
    if s.weights.contains(&0) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    let t_r = Rational::from(t);
    let t1 = &t_r - &Rational::one();
    if alpha <= &(&t_r / &t1) {
        return Err(Error::Precondition(format!(
            "alpha must exceed T/(T-1) = {}, got {alpha}",
            &t_r / &t1
        )));
    }
    let a = alpha * &t1;
    let epsilon = (&a - &t_r) / (&a - &Rational::one());
    let keep = Rational::one() - &epsilon;
    let m = t.trailing_zeros() - 1;

    let mut b = Builder::new();
    let reg_total: Rational = s.weights.iter().map(|&w| Rational::from(w)).sum();
    let aux_total = &t1 * &keep;
    let d_value = &keep / &epsilon * (aux_total + reg_total);
    let d = b.push("d".into(), d_value, Rational::from(t + 1), Label::Dummy);
    let aux: Vec<ItemId> = (0..=m)
        .map(|k| {
            let size = Rational::from(1u64 << k);
            b.push(format!("j{k}"), &size * &keep, size, Label::Auxiliary)
        })
        .collect();
    let reg: Vec<ItemId> = s
        .weights
        .iter()
        .enumerate()
        .map(|(i, &w)| b.push(format!("i{}", i + 1), Rational::from(w), Rational::from(w), Label::Regular))
        .collect();

    let mut order = vec![d];
    order.extend(aux.iter().rev().cloned());
    order.extend(regular_order(&s.weights).into_iter().map(|i| reg[i].clone()));
    Ok(HardnessGadget {
        instance: Instance::from_triples(b.triples)?,
        policy: UniversalPolicy::new(order),
        alpha: alpha.clone(),
        epsilon,
        labels: b.labels,
        target: t,
    })
}

/// Unit-density gadget with `ε = 1/T²`: regular items `v = w`, auxiliary
/// items `v = 2^k(1−ε)`, dummies `d_0 = T+ε` and `d_k = T·2^k` for
/// `k = 1..⌈log₂ w_max⌉`, and `α = (T−ε)/((1−ε)(T−1))`. The policy tries
/// the dummies, then the auxiliary items, then the regular items, each
/// group from largest to smallest.
pub fn gen_hardness_unit(s: &SubsetSumInstance) -> Result<HardnessGadget> {
    let t = s.target;
    check_target(t)?;
    if s.weights.contains(&0) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    let Some(&w_max) = s.weights.iter().max() else {
        return Err(Error::Precondition("at least one weight is required".into()));
    };
    let t_r = Rational::from(t);
    let epsilon = (&t_r * &t_r).recip();
    let keep = Rational::one() - &epsilon;
    let one = Rational::one();
    let alpha = (&t_r - &epsilon) / (&keep * &(&t_r - &one));
    let m = t.trailing_zeros() - 1;
    let m_dummy = if w_max <= 1 { 0 } else { 64 - (w_max - 1).leading_zeros() };

    let mut b = Builder::new();
    let unit = |v: Rational| (v.clone(), v);
    let dummies: Vec<ItemId> = (0..=m_dummy)
        .map(|k| {
            let v = if k == 0 {
                &t_r + &epsilon
            } else {
                Rational::from_integer(num_bigint::BigInt::from(t) << k)
            };
            let (v, l) = unit(v);
            b.push(format!("d{k}"), v, l, Label::Dummy)
        })
        .collect();
    let aux: Vec<ItemId> = (0..=m)
        .map(|k| {
            let (v, l) = unit(Rational::from(1u64 << k) * &keep);
            b.push(format!("j{k}"), v, l, Label::Auxiliary)
        })
        .collect();
    let reg: Vec<ItemId> = s
        .weights
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            let (v, l) = unit(Rational::from(w));
            b.push(format!("i{}", i + 1), v, l, Label::Regular)
        })
        .collect();

    let mut order: Vec<ItemId> = dummies.into_iter().rev().collect();
    order.extend(aux.into_iter().rev());
    order.extend(regular_order(&s.weights).into_iter().map(|i| reg[i].clone()));
    Ok(HardnessGadget {
        instance: Instance::from_triples(b.triples)?,
        policy: UniversalPolicy::new(order),
        alpha,
        epsilon,
        labels: b.labels,
        target: t,
    })
}
