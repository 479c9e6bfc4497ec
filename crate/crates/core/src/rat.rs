//! Exact rational scalars and small integer combinatorics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always stored reduced with positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a decimal-free rational literal `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Canonical form: `p/q` with q > 1, otherwise just `p`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Binomial coefficient with arbitrary integer upper argument;
/// zero for k < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for r in 0..k {
        num *= BigInt::from(n - r);
        den *= BigInt::from(r + 1);
    }
    num / den
}

/// Falling factorial n(n-1)...(n-k+1).
pub fn falling(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for r in 0..k {
        acc *= BigInt::from(n as i64 - r as i64);
    }
    acc
}

/// Integer power allowing negative exponents (base must be nonzero then).
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "negative power of zero");
        num_traits::pow::pow(base.recip(), (-exp) as usize)
    }
}

pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}
