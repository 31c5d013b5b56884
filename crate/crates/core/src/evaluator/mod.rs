//! Packing simulation, the knapsack optimum oracle and exact robustness
//! evaluation.
//!
//! After multiplying sizes by a common denominator every item size is an
//! integer, so both the optimum and any policy's packing are constant on
//! `[c, c + 1)` for integer `c`. The worst ratio over all real capacities
//! is therefore a maximum over the integer capacities `0..=l(I)`.

mod oracle;
mod pack;
mod robustness;

use std::fmt;

use serde::Serialize;

use crate::model::ItemId;
use crate::rational::Rational;

pub use oracle::{opt_all_capacities, opt_value_at, scale_to_integers, OptTable};
pub use pack::{pack_tree, pack_universal};
pub use robustness::{
    best_universal_robustness, check_alpha_robust, check_alpha_robust_phi, first_item_bound,
    robustness_factor, robustness_factor_with,
};

/// Default memory budget for pseudo-polynomial tables: 1 GiB.
pub const DEFAULT_MEMORY_BUDGET: u128 = 1 << 30;

/// Default largest instance for exhaustive search over permutations.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 8;

#[derive(Clone, Debug)]
pub struct EvalConfig {
    /// Upper bound in bytes for the knapsack table and its witness bits.
    pub memory_budget: u128,
    /// Keep the per-capacity table in robustness reports.
    pub with_table: bool,
    pub brute_force_limit: usize,
    /// Evaluate capacities in parallel. Results are identical either way.
    pub parallel: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            memory_budget: DEFAULT_MEMORY_BUDGET,
            with_table: false,
            brute_force_limit: DEFAULT_BRUTE_FORCE_LIMIT,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingResult {
    /// Packed items in the order they were packed.
    pub packed: Vec<ItemId>,
    pub total_value: Rational,
    pub total_size: Rational,
    pub capacity: Rational,
}

/// A ratio of optimum to achieved value; infinite when a policy packs
/// nothing of value while the optimum is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ratio {
    Finite(Rational),
    Infinite,
}

impl Ratio {
    /// `opt / achieved` with `0/0 = 1` and `x/0 = ∞`.
    pub fn of(opt: &Rational, achieved: &Rational) -> Ratio {
        if achieved.is_zero() {
            if opt.is_zero() {
                Ratio::Finite(Rational::one())
            } else {
                Ratio::Infinite
            }
        } else {
            Ratio::Finite(opt / achieved)
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Ratio::Finite(r) => Some(r),
            Ratio::Infinite => None,
        }
    }

    pub fn is_at_most(&self, bound: &Rational) -> bool {
        self.finite().is_some_and(|r| r <= bound)
    }

    pub fn is_at_least(&self, bound: &Rational) -> bool {
        self.finite().map_or(true, |r| r >= bound)
    }

    /// `r ≤ φ`, decided as `r² ≤ r + 1`.
    pub fn is_at_most_phi(&self) -> bool {
        self.finite().is_some_and(|r| r * r <= r + &Rational::one())
    }

    pub fn to_decimal_string(&self, digits: usize) -> String {
        match self {
            Ratio::Finite(r) => r.to_decimal_string(digits),
            Ratio::Infinite => "inf".into(),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite(r) => write!(f, "{r}"),
            Ratio::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapacityRow {
    pub capacity: Rational,
    pub opt_value: Rational,
    pub policy_value: Rational,
    pub ratio: Ratio,
}

/// Worst-case ratio of a universal policy together with a certificate: a
/// capacity and an optimal packing for it that attain the ratio.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobustnessReport {
    pub factor: Ratio,
    /// Smallest capacity attaining `factor`.
    pub witness_capacity: Rational,
    pub witness_opt: Vec<ItemId>,
    pub opt_value: Rational,
    pub policy_value: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_capacity: Option<Vec<CapacityRow>>,
}

/// Outcome of an α-robustness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaCheck {
    Robust,
    Counterexample {
        capacity: Rational,
        opt_set: Vec<ItemId>,
        opt_value: Rational,
        policy_value: Rational,
    },
}

impl AlphaCheck {
    pub fn is_robust(&self) -> bool {
        matches!(self, AlphaCheck::Robust)
    }
}
