//! Exact integer and rational predicates: gcd, p-th-power-freeness, exact
//! p-th roots and exact square roots.
//!
//! Nothing here rounds. Roots are computed as truncated integer roots and
//! accepted only after an exact re-exponentiation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::ArithError;

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

/// Deterministic primality for exponents; trial division is plenty at this size.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let n = u64::from(n);
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// True iff no prime `q` has `q^p | n`.
///
/// Trial division with the cofactor shrinking as factors are removed: a prime
/// whose p-th power still divides the cofactor `m` is at most `m^(1/p)`, so
/// the loop stops once `d^p > m`.
pub fn is_pth_power_free(n: &BigInt, p: u32) -> Result<bool, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if p < 2 {
        return Err(ArithError::InvalidExponent(p));
    }
    let mut m = n.abs();
    let mut d = BigInt::from(2u32);
    while Pow::pow(&d, p) <= m {
        if m.is_multiple_of(&d) {
            let mut mult = 0u32;
            while m.is_multiple_of(&d) {
                m /= &d;
                mult += 1;
            }
            if mult >= p {
                return Ok(false);
            }
        }
        d += 1u32;
    }
    Ok(true)
}

/// Exact p-th root: `Some(r)` with `r^p = n`, carrying the sign of `n` for odd `p`.
pub fn integer_pth_root(n: &BigInt, p: u32) -> Option<BigInt> {
    if p == 0 {
        return None;
    }
    if n.is_negative() && p % 2 == 0 {
        return None;
    }
    let r = n.nth_root(p);
    if Pow::pow(&r, p) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational p-th root. `BigRational` is always in lowest terms, so the
/// root exists iff numerator and denominator are both p-th powers.
pub fn rational_pth_root(q: &BigRational, p: u32) -> Option<BigRational> {
    let num = integer_pth_root(q.numer(), p)?;
    let den = integer_pth_root(q.denom(), p)?;
    Some(BigRational::new(num, den))
}

/// Nonnegative exact square root, absent for non-squares and negatives.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn rational_sqrt_exact(q: &BigRational) -> Option<BigRational> {
    let num = integer_sqrt_exact(q.numer())?;
    let den = integer_sqrt_exact(q.denom())?;
    Some(BigRational::new(num, den))
}

/// `q^e` for a rational base.
pub fn rational_pow(q: &BigRational, e: u32) -> BigRational {
    BigRational::new_raw(Pow::pow(q.numer(), e), Pow::pow(q.denom(), e))
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub(crate) fn ratio(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

pub(crate) fn two() -> BigInt {
    BigInt::one() + BigInt::one()
}
