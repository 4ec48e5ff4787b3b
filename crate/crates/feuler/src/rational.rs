//! Integer combinatorics and strict parsing for rational scalars.
//!
//! Rationals display as `p/q` with the `/q` part omitted for integers; that
//! format is what reports emit and what [`parse_rational`] accepts back.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::Rational;

/// The binomial coefficient C(n, k), by the running product
/// C(n, k) = prod_{i=1..k} (n - k + i) / i, which divides exactly at every
/// step. Returns 0 when k > n.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// A rational from machine integers; panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses the strict `p/q` form: an optional leading minus, a decimal
/// numerator, and an optional `/` followed by a decimal denominator. No
/// whitespace, no sign on the denominator. A zero denominator is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = |why: &str| Error::InvalidParameter(format!("rational '{text}': {why}"));
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num_part, den_part) = match digits.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (digits, None),
    };
    if num_part.is_empty() || !num_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected a decimal numerator"));
    }
    let mut numer: BigInt = num_part.parse().expect("digits parse as an integer");
    if negative {
        numer = -numer;
    }
    let denom: BigInt = match den_part {
        None => BigInt::one(),
        Some(d) if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) => {
            return Err(bad("expected a decimal denominator"));
        }
        Some(d) => d.parse().expect("digits parse as an integer"),
    };
    if denom == BigInt::from(0) {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}
