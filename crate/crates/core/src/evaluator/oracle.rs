//! Optimal knapsack values: a table over all integer capacities, and a
//! single-capacity optimum for small instances with arbitrary sizes.

use crate::error::{Error, Result};
use crate::model::{Instance, Item, ItemId};
use crate::rational::{lcm_of_denominators, Rational};
use crate::scale::{Amount, ScaledValues, SizeScale, ValueScale};

use super::EvalConfig;

/// Multiplies every size by the lcm of the size denominators. Values are
/// untouched; a capacity `C` of the input corresponds to `C * scale`.
pub fn scale_to_integers(instance: &Instance) -> (Instance, Rational) {
    let factor = Rational::from_integer(lcm_of_denominators(instance.items().iter().map(|i| &i.size)));
    let items = instance
        .items()
        .iter()
        .map(|i| Item {
            size: &i.size * &factor,
            ..i.clone()
        })
        .collect();
    (
        Instance::new(items).expect("scaling preserves validity"),
        factor,
    )
}

/// Bytes needed by a table over `capacities` entries for `n` items.
pub(crate) fn table_bytes(n: usize, capacities: u64, per_value: u128) -> u128 {
    let c = capacities as u128;
    c * per_value + (n as u128) * c.div_ceil(8)
}

pub(crate) fn value_width(values: &ScaledValues) -> u128 {
    match values {
        ScaledValues::Small(_) => 16,
        // vector header plus a few limbs
        ScaledValues::Big(_) => 64,
    }
}

pub(crate) fn check_budget(bytes: u128, config: &EvalConfig) -> Result<()> {
    if bytes > config.memory_budget {
        return Err(Error::Budget {
            what: "the knapsack table",
            unit: "bytes",
            required: bytes,
            limit: config.memory_budget,
        });
    }
    Ok(())
}

/// 0/1 knapsack over integer sizes with per-item decision bits for
/// reconstructing an optimal set at any capacity.
pub(crate) struct Knapsack<A> {
    pub best: Vec<A>,
    take: Vec<Vec<u64>>,
    sizes: Vec<u64>,
}

impl<A: Amount> Knapsack<A> {
    pub fn build(sizes: &[u64], values: &[A], max_capacity: u64) -> Self {
        let cells = max_capacity as usize + 1;
        let words = cells.div_ceil(64);
        let mut best = vec![A::zero(); cells];
        let mut take = Vec::with_capacity(sizes.len());
        for (&size, value) in sizes.iter().zip(values) {
            let mut bits = vec![0u64; words];
            let s = size as usize;
            if s < cells {
                for c in (s..cells).rev() {
                    let cand = best[c - s].plus(value);
                    if cand > best[c] {
                        best[c] = cand;
                        bits[c / 64] |= 1 << (c % 64);
                    }
                }
            }
            take.push(bits);
        }
        Knapsack {
            best,
            take,
            sizes: sizes.to_vec(),
        }
    }

    /// Item indices of an optimal packing for capacity `c`.
    pub fn witness(&self, c: u64) -> Vec<usize> {
        let mut c = c as usize;
        let mut out = Vec::new();
        for i in (0..self.sizes.len()).rev() {
            if self.take[i][c / 64] >> (c % 64) & 1 == 1 {
                out.push(i);
                c -= self.sizes[i] as usize;
            }
        }
        out.reverse();
        out
    }
}

/// Optimal values for every integer capacity `0..=max_capacity`.
#[derive(Clone, Debug)]
pub struct OptTable {
    values: Vec<Rational>,
    ids: Vec<ItemId>,
    take: Vec<Vec<u64>>,
    sizes: Vec<u64>,
}

impl OptTable {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, capacity: u64) -> &Rational {
        &self.values[capacity as usize]
    }

    pub fn max_capacity(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// An optimal packing for `capacity`, in instance order.
    pub fn witness(&self, capacity: u64) -> Vec<ItemId> {
        let mut c = capacity.min(self.max_capacity()) as usize;
        let mut out = Vec::new();
        for i in (0..self.sizes.len()).rev() {
            if self.take[i][c / 64] >> (c % 64) & 1 == 1 {
                out.push(self.ids[i].clone());
                c -= self.sizes[i] as usize;
            }
        }
        out.reverse();
        out
    }
}

/// Knapsack table for an instance whose sizes are already integers.
pub fn opt_all_capacities(
    instance: &Instance,
    max_capacity: u64,
    config: &EvalConfig,
) -> Result<OptTable> {
    if let Some(item) = instance.items().iter().find(|i| !i.size.is_integer()) {
        return Err(Error::Precondition(format!(
            "integer sizes required, item {} has size {}",
            item.id, item.size
        )));
    }
    let sizes = SizeScale::new(instance.items().iter().map(|i| &i.size))?;
    if max_capacity > sizes.total {
        return Err(Error::Precondition(format!(
            "capacity bound {max_capacity} exceeds the total size {}",
            sizes.total
        )));
    }
    let scale = ValueScale::new(instance.items().iter().map(|i| &i.value));
    check_budget(
        table_bytes(instance.len(), max_capacity + 1, value_width(&scale.values)),
        config,
    )?;
    let ids = instance.items().iter().map(|i| i.id.clone()).collect();
    fn finish<A: Amount>(k: Knapsack<A>, scale: &ValueScale, ids: Vec<ItemId>) -> OptTable {
        OptTable {
            values: k.best.iter().map(|v| scale.unscale(v)).collect(),
            ids,
            take: k.take,
            sizes: k.sizes,
        }
    }
    Ok(match &scale.values {
        ScaledValues::Small(v) => finish(Knapsack::build(&sizes.sizes, v, max_capacity), &scale, ids),
        ScaledValues::Big(v) => finish(Knapsack::build(&sizes.sizes, v, max_capacity), &scale, ids),
    })
}

/// Optimal value for a single capacity, with exact rational sizes.
///
/// Maintains the Pareto frontier of (size, value) pairs over subsets, so it
/// needs no integer scaling; intended for small instances.
pub fn opt_value_at(instance: &Instance, capacity: &Rational) -> Result<Rational> {
    if capacity.is_negative() {
        return Err(Error::Precondition(format!("negative capacity {capacity}")));
    }
    let mut frontier = vec![(Rational::zero(), Rational::zero())];
    for item in instance.items() {
        let extended: Vec<_> = frontier
            .iter()
            .map(|(s, v)| (s + &item.size, v + &item.value))
            .filter(|(s, _)| s <= capacity)
            .collect();
        frontier.extend(extended);
        // by size, larger value first, then keep strictly improving values
        frontier.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut pruned: Vec<(Rational, Rational)> = Vec::with_capacity(frontier.len());
        for entry in frontier {
            if pruned.last().map_or(true, |last| entry.1 > last.1) {
                pruned.push(entry);
            }
        }
        frontier = pruned;
    }
    Ok(frontier.pop().map(|(_, v)| v).unwrap_or_default())
}
