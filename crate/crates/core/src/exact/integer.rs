use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Binomial coefficient C(n, k) for `n >= 0`.
///
/// Returns 0 when `k < 0` or `k > n`. Negative `n` is rejected: generalized
/// binomials are never needed here.
pub fn binomial(n: &Integer, k: &Integer) -> Result<Integer> {
    if n.is_negative() {
        return Err(Error::UnsupportedDomain(format!(
            "binomial with negative upper index {n}"
        )));
    }
    if k.is_negative() || k > n {
        return Ok(Integer::zero());
    }
    // symmetric reduction keeps the loop short
    let n_minus_k = n - k;
    let k = if &n_minus_k < k { n_minus_k } else { k.clone() };
    let mut acc = Integer::one();
    let mut i = Integer::zero();
    while i < k {
        acc *= n - &i;
        i += 1;
        acc /= &i;
    }
    Ok(acc)
}

/// C(n, k) over machine-size indices; 0 when `k > n`.
pub fn binomial_usize(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}
