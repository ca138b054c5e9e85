//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form this crate relies on: always reduced (gcd of numerator and
//! denominator is 1) and denominator strictly positive, so structural
//! equality is value equality.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ExactError;

/// Exact rational number, always stored in reduced form.
pub type Rational = num_rational::BigRational;

/// Builds a rational from machine integers. Panics on a zero denominator.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds a rational from an integer.
pub fn rational_from(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Exact division with an explicit error on a zero divisor.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, ExactError> {
    if b.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}
