//! Exact rational scalars and their textual encoding.
//!
//! Everything that feeds a decision is a [`Rational`]. The canonical text
//! form is always `p/q` in lowest terms with a positive denominator, so
//! `0` is written `0/1` and `1` is written `1/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the exact rational `numer/denom`.
///
/// # Panics
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical `p/q` rendering.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`. Decimals and exponents are rejected.
pub fn parse(text: &str) -> Result<Rational> {
    let malformed = || Error::MalformedRational {
        text: text.to_owned(),
    };
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let is_integer = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_integer(numer) || !is_integer(denom) {
        return Err(malformed());
    }
    let numer: BigInt = numer.parse().map_err(|_| malformed())?;
    let denom: BigInt = denom.parse().map_err(|_| malformed())?;
    if denom.is_zero() {
        return Err(malformed());
    }
    Ok(Rational::new(numer, denom))
}

/// `0 <= r <= 1`.
pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= one()
}

/// Lossy conversion for plot output only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
