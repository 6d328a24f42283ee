//! Fₖ(x) = xᵏ/(1 − xᵏ) has Fₖ⁽ⁿ⁾(0) = n! when k | n and 0 otherwise.
//!
//! The closed form is written in two cases: n! for odd k, and
//! n! − (n!/k)(1 + (−1)ⁿ⁺¹) for even k. Since k | n with k even forces n even,
//! the correction always vanishes. Both cases are kept as written and the
//! simplification is left to the tests.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};

pub const BURHENNE_FLOAT_MAX: u64 = 170;
pub const BURHENNE_EXACT_MAX: u64 = 20;

fn check(k: u64, n: u64, max: u64) -> Result<()> {
    if k == 0 || n == 0 {
        return Err(Error::domain("k and n must be positive"));
    }
    for (what, v) in [("k", k), ("n", n)] {
        if v > max {
            return Err(Error::OutOfRange {
                what,
                requested: v,
                limit: max,
            });
        }
    }
    Ok(())
}

/// Fₖ⁽ⁿ⁾(0) in binary floating point.
pub fn burhenne_fk_derivative(k: u64, n: u64) -> Result<f64> {
    check(k, n, BURHENNE_FLOAT_MAX)?;
    if n % k != 0 {
        return Ok(0.0);
    }
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    if k % 2 == 1 {
        Ok(fact)
    } else {
        let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
        Ok(fact - fact / k as f64 * (1.0 + sign))
    }
}

/// Fₖ⁽ⁿ⁾(0) in exact integer arithmetic.
pub fn burhenne_fk_derivative_exact(k: u64, n: u64) -> Result<BigUint> {
    check(k, n, BURHENNE_EXACT_MAX)?;
    if n % k != 0 {
        return Ok(BigUint::default());
    }
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    if k % 2 == 1 {
        return Ok(fact);
    }
    let fact = BigInt::from(fact);
    let sign: BigInt = if (n + 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    // n!/k is exact here because k ≤ n
    let value = &fact - &fact / BigInt::from(k) * (BigInt::one() + sign);
    value
        .to_biguint()
        .ok_or_else(|| Error::domain("negative derivative"))
}

/// Σ_{k=1}^{n} Fₖ⁽ⁿ⁾(0), which should equal d(n)·n!.
pub fn burhenne_column_sum_exact(n: u64) -> Result<BigUint> {
    (1..=n).map(|k| burhenne_fk_derivative_exact(k, n)).sum()
}
