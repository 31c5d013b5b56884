use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::model::{Instance, ItemId};
use crate::rational::Rational;

use super::fibonacci::fibonacci_number;

/// Largest accepted ε (inclusive).
pub const DEFAULT_GOLDEN_EPSILON_BOUND: (i64, i64) = (1, 100);

/// Smallest accepted Fibonacci index for the φ convergent.
pub const MIN_PHI_PRECISION: usize = 10;

/// Five unit-density items on which no policy beats φ by a margin, built
/// with a rational stand-in `φ̂` for the golden ratio.
#[derive(Clone, Debug)]
pub struct GoldenInstance {
    pub instance: Instance,
    pub epsilon: Rational,
    /// `F(k+1) / F(k)`.
    pub phi_hat: Rational,
    /// Strict upper bound on `|φ̂ - φ|`, namely `1 / F(k)²`.
    pub phi_error_bound: Rational,
}

impl GoldenInstance {
    fn value(&self, i: usize) -> &Rational {
        &self.instance.item(i - 1).value
    }

    /// The capacity that punishes each choice of first item: `v5` for items
    /// 1 and 2, `v1 + v2` for item 3, `v2 + v3` for item 4 and `v3 + v4` for
    /// item 5.
    pub fn case_capacities(&self) -> Vec<(ItemId, Rational)> {
        let v = |i| self.value(i);
        let caps = [
            v(5).clone(),
            v(5).clone(),
            v(1) + v(2),
            v(2) + v(3),
            v(3) + v(4),
        ];
        caps.into_iter()
            .enumerate()
            .map(|(i, c)| (ItemId::from((i + 1).to_string()), c))
            .collect()
    }
}

/// Values `(1+ε, 1+ε, 2/φ̂, 1+1/φ̂², φ̂)` with `φ̂ = F(k+1)/F(k)`.
pub fn gen_golden(epsilon: &Rational, phi_precision: usize) -> Result<GoldenInstance> {
    let (num, den) = DEFAULT_GOLDEN_EPSILON_BOUND;
    if !epsilon.is_positive() || epsilon > &Rational::frac(num, den) {
        return Err(Error::Precondition(format!(
            "epsilon must lie in (0, {num}/{den}], got {epsilon}"
        )));
    }
    if phi_precision < MIN_PHI_PRECISION {
        return Err(Error::Precondition(format!(
            "phi precision must be at least {MIN_PHI_PRECISION}, got {phi_precision}"
        )));
    }
    let f_k = fibonacci_number(phi_precision);
    let phi_hat = Rational::new(fibonacci_number(phi_precision + 1), f_k.clone())?;
    let one = Rational::one();
    let inv = phi_hat.recip();
    let values = [
        &one + epsilon,
        &one + epsilon,
        Rational::from(2i64) * &inv,
        &one + &(&inv * &inv),
        phi_hat.clone(),
    ];
    let instance = Instance::from_triples(
        values
            .into_iter()
            .enumerate()
            .map(|(i, v)| ((i + 1).to_string(), v.clone(), v)),
    )?;
    Ok(GoldenInstance {
        instance,
        epsilon: epsilon.clone(),
        phi_hat,
        phi_error_bound: Rational::new(BigInt::from(1), &f_k * &f_k)?,
    })
}
