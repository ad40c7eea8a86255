//! Small exact-arithmetic helpers shared by the combinatorial modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub fn factorial(n: u32) -> Integer {
    (2..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// Rising factorial `⟨a⟩_k = a (a+1) ... (a+k-1)`.
pub fn rising_factorial(a: u32, k: u32) -> Integer {
    (0..k).fold(Integer::one(), |acc, t| acc * (a + t))
}

pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Returns the numerator of `value` if its denominator is one.
pub fn expect_integer(value: &Rational, what: impl Into<String>) -> Result<Integer> {
    if value.is_integer() {
        Ok(value.numer().clone())
    } else {
        Err(Error::NonIntegral {
            what: what.into(),
            value: value.to_string(),
        })
    }
}
