//! Instance families: the adversarial lower-bound instances, the SubsetSum
//! hardness gadgets with their normalizer and oracle, and seeded random
//! instances.

mod fibonacci;
mod golden;
mod hardness;
mod random;
mod subsetsum;

pub use fibonacci::{fibonacci_case_capacities, fibonacci_number, gen_fibonacci};
pub use golden::{gen_golden, GoldenInstance, DEFAULT_GOLDEN_EPSILON_BOUND, MIN_PHI_PRECISION};
pub use hardness::{gen_hardness_general, gen_hardness_unit, HardnessGadget, Label};
pub use random::gen_random;
pub use subsetsum::{normalize_subsetsum, subsetsum_dp, SubsetSumInstance};
