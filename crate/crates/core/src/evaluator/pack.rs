use crate::error::{Error, Result};
use crate::model::Instance;
use crate::policy::{DecisionTreePolicy, UniversalPolicy};
use crate::rational::Rational;

use super::PackingResult;

fn check_capacity(capacity: &Rational) -> Result<()> {
    if capacity.is_negative() {
        return Err(Error::Precondition(format!("negative capacity {capacity}")));
    }
    Ok(())
}

/// Tries the items in policy order, keeping each one that still fits.
pub fn pack_universal(
    instance: &Instance,
    policy: &UniversalPolicy,
    capacity: &Rational,
) -> Result<PackingResult> {
    check_capacity(capacity)?;
    let order = policy.resolve(instance)?;
    let mut used = Rational::zero();
    let mut value = Rational::zero();
    let mut packed = Vec::new();
    for idx in order {
        let item = instance.item(idx);
        let next = &used + &item.size;
        if &next <= capacity {
            used = next;
            value += &item.value;
            packed.push(item.id.clone());
        }
    }
    Ok(PackingResult {
        packed,
        total_value: value,
        total_size: used,
        capacity: capacity.clone(),
    })
}

/// Walks the decision tree: the `fit` branch after packing an item, the
/// `no_fit` branch after discarding it.
pub fn pack_tree(
    instance: &Instance,
    policy: &DecisionTreePolicy,
    capacity: &Rational,
) -> Result<PackingResult> {
    check_capacity(capacity)?;
    policy.validate(instance)?;
    let mut used = Rational::zero();
    let mut value = Rational::zero();
    let mut packed = Vec::new();
    let mut node = policy.root();
    while let Some(n) = node {
        let tree_node = &policy.nodes()[n];
        let item = instance.get(&tree_node.item)?;
        let next = &used + &item.size;
        if &next <= capacity {
            used = next;
            value += &item.value;
            packed.push(item.id.clone());
            node = tree_node.fit;
        } else {
            node = tree_node.no_fit;
        }
    }
    Ok(PackingResult {
        packed,
        total_value: value,
        total_size: used,
        capacity: capacity.clone(),
    })
}
