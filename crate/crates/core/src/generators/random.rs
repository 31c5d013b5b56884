use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::Instance;
use crate::rational::Rational;

/// Seeded instance with integer values in `1..=max_value` and sizes in
/// `1..=max_size`. With `unit_density` every value equals its size. The
/// same arguments always produce the same instance.
pub fn gen_random(
    n: usize,
    seed: u64,
    max_value: u64,
    max_size: u64,
    unit_density: bool,
) -> Result<Instance> {
    if n == 0 || max_value == 0 || max_size == 0 {
        return Err(Error::Precondition(format!(
            "n and both bounds must be positive (n={n}, max_value={max_value}, max_size={max_size})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Instance::from_triples((1..=n).map(|i| {
        let size = rng.random_range(1..=max_size);
        let value = if unit_density {
            size
        } else {
            rng.random_range(1..=max_value)
        };
        (format!("i{i}"), Rational::from(value), Rational::from(size))
    }))
}
