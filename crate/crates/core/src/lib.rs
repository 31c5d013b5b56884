//! Universal packing policies for the knapsack problem with an unknown
//! capacity.
//!
//! A universal policy is a fixed order in which items are tried; each item
//! that still fits is kept. Its robustness factor is the worst ratio, over
//! all capacities, between the optimal knapsack value and the value the
//! policy packs. This crate builds 2-robust policies for arbitrary
//! instances and φ-robust ones for unit-density instances, evaluates the
//! robustness of any policy exactly, and generates the adversarial and
//! hardness instance families that bound what is achievable.
//!
//! All arithmetic is exact over [`Rational`].

pub mod error;
pub mod evaluator;
pub mod generators;
pub mod greedy;
pub mod io;
pub mod model;
pub mod order;
pub mod policy;
pub mod rational;
pub mod universal;
pub mod universal_ud;

mod fenwick;
mod scale;

pub use error::{Error, Result};
pub use evaluator::{
    best_universal_robustness, check_alpha_robust, check_alpha_robust_phi, first_item_bound,
    opt_all_capacities, opt_value_at, pack_tree, pack_universal, robustness_factor,
    robustness_factor_with, scale_to_integers, AlphaCheck, CapacityRow, EvalConfig, OptTable,
    PackingResult, Ratio, RobustnessReport,
};
pub use generators::{
    gen_fibonacci, gen_golden, gen_hardness_general, gen_hardness_unit, gen_random,
    normalize_subsetsum, subsetsum_dp, GoldenInstance, HardnessGadget, Label, SubsetSumInstance,
};
pub use greedy::{is_swap_item, mgreedy, swap_items, GreedyKind, GreedyOutcome};
pub use model::{Instance, Item, ItemId};
pub use order::{density, dtilde_greater, prec_unit};
pub use policy::{DecisionTreePolicy, TreeNode, UniversalPolicy};
pub use rational::{lt_phi_times, Rational};
pub use universal::{universal_fast, universal_naive};
pub use universal_ud::{universal_ud_fast, universal_ud_naive};
