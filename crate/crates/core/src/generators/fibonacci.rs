use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::model::{Instance, ItemId};
use crate::rational::Rational;

/// `F_k` with `F_1 = F_2 = 1` (and `F_0 = 0`).
pub fn fibonacci_number(k: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Items `1..=n` with `l(i) = F_n + F_i - 1` and `v(i) = 1 + i/n`. No
/// universal policy is better than `(2 - 4/n)`-robust on this instance.
pub fn gen_fibonacci(n: usize) -> Result<Instance> {
    if n < 3 {
        return Err(Error::Precondition(format!("fibonacci family needs n >= 3, got {n}")));
    }
    let f_n = fibonacci_number(n);
    let n_big = BigInt::from(n);
    Instance::from_triples((1..=n).map(|i| {
        let size = Rational::from_integer(&f_n + fibonacci_number(i) - 1);
        let value = Rational::one() + Rational::new(i, n_big.clone()).expect("n > 0");
        (i.to_string(), value, size)
    }))
}

/// For each possible first item, the capacity at which committing to it is
/// costly: `2F_n + F_i - 2` for items `i >= 3`, and `l(n) = 2F_n - 1` for
/// items 1 and 2.
pub fn fibonacci_case_capacities(n: usize) -> Result<Vec<(ItemId, Rational)>> {
    if n < 3 {
        return Err(Error::Precondition(format!("fibonacci family needs n >= 3, got {n}")));
    }
    let f_n = fibonacci_number(n);
    Ok((1..=n)
        .map(|i| {
            let c = if i >= 3 {
                2 * &f_n + fibonacci_number(i) - 2
            } else {
                2 * &f_n - 1
            };
            (ItemId::from(i.to_string()), Rational::from_integer(c))
        })
        .collect())
}
