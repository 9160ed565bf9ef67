//! Exact scalars, polynomials, truncated power series and the classical
//! sequences (Stirling, Bernoulli, Seki, Gandhi, Genocchi).
//!
//! Everything here is exact. Integers are arbitrary precision and rationals
//! are always kept in lowest terms with a positive denominator.

mod bipoly;
mod poly;
mod series;
mod special;

pub use bipoly::BiPoly;
pub use poly::{PolyDisplay, UniPoly};
pub use series::TruncatedSeries;
pub use special::{
    bernoulli, binomial, choose, factorial, gandhi_polynomial, genocchi, rising, seki_polynomial,
    stirling1, stirling2,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision signed integer.
pub type Integer = BigInt;

/// Rational number in canonical form (positive denominator, coprime parts).
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_from_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// Converts a rational known to be integral, failing with `context` otherwise.
pub fn to_integer(value: &Rational, context: impl Into<String>) -> Result<Integer> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            context: context.into(),
            value: value.to_string(),
        })
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: Integer = num.trim().parse().ok()?;
            let den: Integer = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
        None => text.parse::<Integer>().ok().map(Rational::from_integer),
    }
}

/// `(-1)^e` as an integer.
pub fn sign_pow(e: usize) -> Integer {
    if e.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}
