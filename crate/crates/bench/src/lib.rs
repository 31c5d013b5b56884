//! Fixed workloads shared by the benchmarks.

use oknap_core::{gen_random, Instance};

/// Seed used for every benchmark instance.
pub const SEED: u64 = 0x5eed;

/// Random instance with arbitrary densities.
pub fn general(n: usize) -> Instance {
    gen_random(n, SEED, 1000, 1000, false).expect("valid parameters")
}

/// Random unit-density instance.
pub fn unit(n: usize) -> Instance {
    gen_random(n, SEED, 1000, 1000, true).expect("valid parameters")
}

/// Small instance for exact robustness evaluation; the capacity range
/// grows with `n * max_size`.
pub fn small(n: usize) -> Instance {
    gen_random(n, SEED, 50, 20, false).expect("valid parameters")
}
