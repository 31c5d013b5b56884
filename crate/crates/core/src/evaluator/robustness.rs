use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{Instance, ItemId};
use crate::policy::UniversalPolicy;
use crate::rational::Rational;
use crate::scale::{cmp_ratio, Amount, ScaledValues, SizeScale, ValueScale};

use super::oracle::{check_budget, opt_value_at, table_bytes, value_width, Knapsack};
use super::{AlphaCheck, CapacityRow, EvalConfig, Ratio, RobustnessReport};

/// Value packed by trying `order` at integer capacity `capacity`.
fn pack_value<A: Amount>(sizes: &[u64], values: &[A], order: &[usize], capacity: u64) -> A {
    let mut left = capacity;
    let mut total = A::zero();
    for &i in order {
        if sizes[i] <= left {
            left -= sizes[i];
            total.add_assign(&values[i]);
        }
    }
    total
}

fn ratio_of<A: Amount>(opt: &A, achieved: &A) -> Ratio {
    if achieved.is_zero() {
        if opt.is_zero() {
            Ratio::Finite(Rational::one())
        } else {
            Ratio::Infinite
        }
    } else {
        Ratio::Finite(Rational::new(opt.to_bigint(), achieved.to_bigint()).expect("non-zero"))
    }
}

struct Evaluation<A> {
    knapsack: Knapsack<A>,
    worst: usize,
    worst_pack: A,
    packs: Option<Vec<A>>,
}

fn evaluate<A: Amount>(
    sizes: &[u64],
    values: &[A],
    total: u64,
    order: &[usize],
    config: &EvalConfig,
) -> Evaluation<A> {
    let knapsack = Knapsack::build(sizes, values, total);
    let best = &knapsack.best;
    let cells = total as usize + 1;
    let pack_at = |c: usize| (c, pack_value(sizes, values, order, c as u64));
    // larger ratio wins, equal ratios go to the smaller capacity; the rule
    // is associative and commutative, so any reduction tree gives the same
    // answer as the sequential scan
    let pick = |a: (usize, A), b: (usize, A)| match cmp_ratio(&best[a.0], &a.1, &best[b.0], &b.1) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal if a.0 <= b.0 => a,
        Ordering::Equal => b,
    };
    let (worst, worst_pack, packs) = if config.with_table {
        let packs: Vec<A> = if config.parallel {
            (0..cells).into_par_iter().map(|c| pack_at(c).1).collect()
        } else {
            (0..cells).map(|c| pack_at(c).1).collect()
        };
        let (w, p) = (0..cells)
            .map(|c| (c, packs[c].clone()))
            .reduce(pick)
            .expect("capacity 0 always exists");
        (w, p, Some(packs))
    } else {
        let (w, p) = if config.parallel {
            (0..cells)
                .into_par_iter()
                .with_min_len(256)
                .map(pack_at)
                .reduce_with(pick)
        } else {
            (0..cells).map(pack_at).reduce(pick)
        }
        .expect("capacity 0 always exists");
        (w, p, None)
    };
    Evaluation {
        knapsack,
        worst,
        worst_pack,
        packs,
    }
}

fn report<A: Amount>(
    instance: &Instance,
    eval: Evaluation<A>,
    sizes: &SizeScale,
    values: &ValueScale,
) -> RobustnessReport {
    let w = eval.worst;
    let opt = &eval.knapsack.best[w];
    let pack = &eval.worst_pack;
    let per_capacity = eval.packs.as_ref().map(|packs| {
        eval.knapsack
            .best
            .iter()
            .zip(packs)
            .enumerate()
            .map(|(c, (o, p))| CapacityRow {
                capacity: sizes.unscale(c as u64),
                opt_value: values.unscale(o),
                policy_value: values.unscale(p),
                ratio: ratio_of(o, p),
            })
            .collect()
    });
    RobustnessReport {
        factor: ratio_of(opt, pack),
        witness_capacity: sizes.unscale(w as u64),
        witness_opt: instance.ids_of(&eval.knapsack.witness(w as u64)),
        opt_value: values.unscale(opt),
        policy_value: values.unscale(pack),
        per_capacity,
    }
}

/// Robustness factor with the default configuration.
pub fn robustness_factor(instance: &Instance, policy: &UniversalPolicy) -> Result<RobustnessReport> {
    robustness_factor_with(instance, policy, &EvalConfig::default())
}

/// Worst ratio `v(Opt(C)) / v(Π(C))` over all capacities `C ≤ l(I)`, with
/// the smallest capacity attaining it and an optimal packing there.
pub fn robustness_factor_with(
    instance: &Instance,
    policy: &UniversalPolicy,
    config: &EvalConfig,
) -> Result<RobustnessReport> {
    let order = policy.resolve(instance)?;
    let sizes = SizeScale::new(instance.items().iter().map(|i| &i.size))?;
    let values = ValueScale::new(instance.items().iter().map(|i| &i.value));
    let rows = if config.with_table { 2 } else { 1 };
    let per_value = value_width(&values.values) * rows;
    check_budget(table_bytes(instance.len(), sizes.total + 1, per_value), config)?;
    Ok(match &values.values {
        ScaledValues::Small(v) => {
            let eval = evaluate(&sizes.sizes, v, sizes.total, &order, config);
            report(instance, eval, &sizes, &values)
        }
        ScaledValues::Big(v) => {
            let eval = evaluate(&sizes.sizes, v, sizes.total, &order, config);
            report(instance, eval, &sizes, &values)
        }
    })
}

/// Decides whether the policy is α-robust. When it is not, returns the
/// worst capacity together with an optimal packing there.
pub fn check_alpha_robust(
    instance: &Instance,
    policy: &UniversalPolicy,
    alpha: &Rational,
    config: &EvalConfig,
) -> Result<AlphaCheck> {
    if alpha < &Rational::one() {
        return Err(Error::Precondition(format!("alpha must be at least 1, got {alpha}")));
    }
    let rep = robustness_factor_with(instance, policy, config)?;
    if rep.factor.is_at_most(alpha) {
        Ok(AlphaCheck::Robust)
    } else {
        Ok(AlphaCheck::Counterexample {
            capacity: rep.witness_capacity,
            opt_set: rep.witness_opt,
            opt_value: rep.opt_value,
            policy_value: rep.policy_value,
        })
    }
}

/// `true` iff the policy's robustness factor is at most φ.
pub fn check_alpha_robust_phi(
    instance: &Instance,
    policy: &UniversalPolicy,
    config: &EvalConfig,
) -> Result<bool> {
    Ok(robustness_factor_with(instance, policy, config)?
        .factor
        .is_at_most_phi())
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("pivot has a successor");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Exhaustive search over all `n!` universal policies. Returns the first
/// (lexicographically by instance index) policy of minimum robustness
/// factor, together with that factor.
pub fn best_universal_robustness(
    instance: &Instance,
    config: &EvalConfig,
) -> Result<(UniversalPolicy, Ratio)> {
    let n = instance.len();
    if n > config.brute_force_limit {
        return Err(Error::Budget {
            what: "exhaustive policy search",
            unit: "permutations",
            required: factorial(n),
            limit: factorial(config.brute_force_limit),
        });
    }
    let sizes = SizeScale::new(instance.items().iter().map(|i| &i.size))?;
    let values = ValueScale::new(instance.items().iter().map(|i| &i.value));
    check_budget(
        table_bytes(n, sizes.total + 1, value_width(&values.values)),
        config,
    )?;
    let (order, opt, pack) = match &values.values {
        ScaledValues::Small(v) => {
            let (o, a, b) = search(&sizes.sizes, v, sizes.total);
            (o, a.to_bigint(), b.to_bigint())
        }
        ScaledValues::Big(v) => search(&sizes.sizes, v, sizes.total),
    };
    Ok((
        UniversalPolicy::from_indices(instance, &order),
        ratio_of(&opt, &pack),
    ))
}

fn search<A: Amount>(sizes: &[u64], values: &[A], total: u64) -> (Vec<usize>, A, A) {
    let best_opt = Knapsack::build(sizes, values, total).best;
    let mut perm: Vec<usize> = (0..sizes.len()).collect();
    let mut champion: Option<(Vec<usize>, A, A)> = None;
    // capacity that ruled out the previous candidate; tried first
    let mut killer = 0usize;
    loop {
        let mut worst: Option<(A, A)> = None;
        let mut beaten = false;
        for c in std::iter::once(killer).chain(0..best_opt.len()) {
            let pack = pack_value(sizes, values, &perm, c as u64);
            if let Some((_, b_opt, b_pack)) = &champion {
                if cmp_ratio(&best_opt[c], &pack, b_opt, b_pack) != Ordering::Less {
                    killer = c;
                    beaten = true;
                    break;
                }
            }
            let better = worst
                .as_ref()
                .map_or(true, |(o, p)| cmp_ratio(&best_opt[c], &pack, o, p) == Ordering::Greater);
            if better {
                worst = Some((best_opt[c].clone(), pack));
            }
        }
        if !beaten {
            let (o, p) = worst.expect("at least capacity 0");
            champion = Some((perm.clone(), o, p));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    champion.expect("at least one permutation")
}

/// Ratio between the optimum at `capacity` and the best value any policy
/// can still reach after committing to `first`: `v(first)` plus an optimal
/// packing of the remaining items into the residual capacity.
pub fn first_item_bound(instance: &Instance, first: &ItemId, capacity: &Rational) -> Result<Ratio> {
    let idx = instance.index_of(first)?;
    let item = instance.item(idx);
    if &item.size > capacity {
        return Err(Error::Precondition(format!(
            "item {first} of size {} does not fit capacity {capacity}",
            item.size
        )));
    }
    let opt = opt_value_at(instance, capacity)?;
    let rest = opt_value_at(&instance.without(idx), &(capacity - &item.size))?;
    Ok(super::Ratio::of(&opt, &(&item.value + &rest)))
}
