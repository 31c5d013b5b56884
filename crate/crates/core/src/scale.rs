//! Integer views of rational data.
//!
//! Hot loops (prefix sums, the knapsack table, policy simulation) run on
//! integers: sizes multiplied by the lcm of their denominators, values by
//! the lcm of theirs. Values use `i128` when every partial sum and every
//! product of two sums fits, and fall back to `BigInt` otherwise.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{lcm_of_denominators, Rational};

/// Exact integer amount usable in sums and cross-multiplied comparisons.
pub(crate) trait Amount: Clone + Ord + Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Amount for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign(&mut self, other: &Self) {
        *self += *other;
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Amount for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Largest total for which the `i128` representation is used; keeps every
/// product of two totals below `2^124`.
const SMALL_TOTAL_LIMIT: i128 = 1 << 62;

pub(crate) enum ScaledValues {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// Values multiplied by a common denominator: `value = scaled / denom`.
pub(crate) struct ValueScale {
    pub denom: BigInt,
    pub values: ScaledValues,
}

impl ValueScale {
    pub fn new<'a>(values: impl IntoIterator<Item = &'a Rational> + Clone) -> Self {
        let denom = lcm_of_denominators(values.clone());
        let scaled: Vec<BigInt> = values
            .into_iter()
            .map(|v| v.numer() * (&denom / v.denom()))
            .collect();
        let total: BigInt = scaled.iter().sum();
        let small = total.to_i128().filter(|&t| t <= SMALL_TOTAL_LIMIT).is_some();
        let values = if small {
            ScaledValues::Small(scaled.iter().map(|v| v.to_i128().unwrap()).collect())
        } else {
            ScaledValues::Big(scaled)
        };
        ValueScale { denom, values }
    }

    pub fn unscale<A: Amount>(&self, amount: &A) -> Rational {
        Rational::new(amount.to_bigint(), self.denom.clone()).expect("positive denominator")
    }
}

/// Sizes multiplied by the lcm of their denominators.
pub(crate) struct SizeScale {
    pub factor: BigInt,
    pub sizes: Vec<u64>,
    pub total: u64,
}

impl SizeScale {
    pub fn new<'a>(sizes: impl IntoIterator<Item = &'a Rational> + Clone) -> Result<Self> {
        let factor = lcm_of_denominators(sizes.clone());
        let scaled: Vec<BigInt> = sizes
            .into_iter()
            .map(|s| s.numer() * (&factor / s.denom()))
            .collect();
        let total: BigInt = scaled.iter().sum();
        let Some(total) = total.to_u64() else {
            return Err(Error::Budget {
                what: "the integer-scaled total size",
                unit: "bits",
                required: total.bits() as u128,
                limit: 64,
            });
        };
        Ok(SizeScale {
            factor,
            sizes: scaled.iter().map(|s| s.to_u64().expect("bounded by total")).collect(),
            total,
        })
    }

    pub fn unscale(&self, scaled: u64) -> Rational {
        Rational::new(BigInt::from(scaled), self.factor.clone()).expect("positive factor")
    }
}

/// Compares `a / b` with `c / d`, reading a zero denominator as `+∞` when
/// the numerator is positive and as 1 when it is zero.
pub(crate) fn cmp_ratio<A: Amount>(a: &A, b: &A, c: &A, d: &A) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    // classify as 1 (0/0), +inf (x/0) or finite
    let class = |n: &A, m: &A| match (n.is_zero(), m.is_zero()) {
        (true, true) => 1,
        (false, true) => 2,
        _ => 0,
    };
    match (class(a, b), class(c, d)) {
        (2, 2) | (1, 1) => Equal,
        (2, _) => Greater,
        (_, 2) => Less,
        // 1 vs c/d  <=>  d vs c
        (1, _) => d.cmp(c),
        (_, 1) => a.cmp(b),
        _ => a.times(d).cmp(&c.times(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_scale_uses_lcm() {
        let sizes = [Rational::frac(1, 2), Rational::frac(3, 4)];
        let s = SizeScale::new(sizes.iter()).unwrap();
        assert_eq!(s.factor, BigInt::from(4));
        assert_eq!(s.sizes, vec![2, 3]);
        assert_eq!(s.unscale(3), Rational::frac(3, 4));
    }

    #[test]
    fn value_scale_picks_representation() {
        let small = [Rational::frac(1, 3), Rational::frac(1, 2)];
        let vs = ValueScale::new(small.iter());
        assert_eq!(vs.denom, BigInt::from(6));
        assert!(matches!(&vs.values, ScaledValues::Small(v) if v == &vec![2, 3]));
        let huge = [Rational::from_integer(BigInt::from(1u8) << 70)];
        assert!(matches!(ValueScale::new(huge.iter()).values, ScaledValues::Big(_)));
    }

    #[test]
    fn ratio_comparison_conventions() {
        use std::cmp::Ordering::*;
        let c = |a: i128, b: i128, x: i128, y: i128| cmp_ratio(&a, &b, &x, &y);
        assert_eq!(c(3, 2, 4, 3), Greater);
        assert_eq!(c(0, 0, 1, 1), Equal);
        assert_eq!(c(0, 0, 3, 2), Less);
        assert_eq!(c(1, 0, 100, 1), Greater);
        assert_eq!(c(1, 0, 5, 0), Equal);
        assert_eq!(c(2, 2, 0, 0), Equal);
    }
}
