//! The universal adjoint character as a finite exponential sum.
//!
//! With `q = exp(x/4)` and an integer representative (α,β,γ), each factor
//! `sinh(x·a/4)` becomes `(q^a − q^{−a})/2`, so the character
//!
//! ```text
//! f(x) = Π sinh(x(αᵢ−2t)/4) / sinh(x·αᵢ/4),   t = α+β+γ
//! ```
//!
//! is the exact Laurent quotient `Π(q^{Aᵢ}−q^{−Aᵢ}) / Π(q^{aᵢ}−q^{−aᵢ})`
//! with `Aᵢ = αᵢ−2t` (the 1/2 factors cancel). A point is *regular* when
//! the quotient leaves no remainder, i.e. when every denominator pole is
//! cancelled; the expansion then encodes dimension (coefficient sum) and
//! rank (constant coefficient).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exact::{cyclotomic_multiplicity, ExactError, LaurentPoly};
use crate::vogel::VogelPoint;

/// Errors from the character layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    /// A coordinate of the representative is zero: the character has an
    /// uncancellable pole there.
    #[error("character has a pole at a zero coordinate")]
    PoleAtZeroCoordinate,
    /// The Laurent division left a remainder: the point is not regular and
    /// the character is not a finite exponential sum.
    #[error("point is not regular; remainder {0}")]
    NotRegular(LaurentPoly),
}

/// A finite exponential sum `Σ c_e · exp(e·x/4)` at a fixed integer
/// representative; the map stores only nonzero coefficients.
///
/// The expansion of any character is palindromic (`c_e = c_{−e}`): it is a
/// product of ratios of odd functions, hence even in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterExpansion {
    coefficients: BTreeMap<i64, BigInt>,
    /// The representative the exponents refer to; the exponent unit is x/4
    /// at this scale. Rescaling the representative dilates the exponents
    /// and leaves dimension and rank unchanged.
    scale_note: [i64; 3],
}

impl CharacterExpansion {
    fn new(poly: &LaurentPoly, scale_note: [i64; 3]) -> Self {
        let coefficients: BTreeMap<i64, BigInt> =
            poly.terms().map(|(e, c)| (e, c.clone())).collect();
        let out = Self {
            coefficients,
            scale_note,
        };
        debug_assert!(out.is_palindromic());
        out
    }

    /// The zero expansion (the character vanishes identically).
    pub fn zero(scale_note: [i64; 3]) -> Self {
        Self {
            coefficients: BTreeMap::new(),
            scale_note,
        }
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coefficients.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.coefficients
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn scale_note(&self) -> [i64; 3] {
        self.scale_note
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients
            .iter()
            .all(|(&e, c)| self.coefficient(-e) == *c)
    }

    /// The dimension: value at x = 0, i.e. the sum of all coefficients.
    pub fn dim(&self) -> BigInt {
        self.coefficients.values().sum()
    }

    /// The rank: the constant-exponent coefficient (0 if absent).
    pub fn rank(&self) -> BigInt {
        self.coefficient(0)
    }
}

fn check_nonzero(rep: [i64; 3]) -> Result<(), CharacterError> {
    if rep.contains(&0) {
        Err(CharacterError::PoleAtZeroCoordinate)
    } else {
        Ok(())
    }
}

/// Fast regularity decision at an integer representative, without carrying
/// out the division. Φ_d divides `q^{2a} − 1` exactly when d | 2a, so the
/// quotient is pole-free iff every cyclotomic factor of the denominator is
/// covered by the numerator. Indices d = 1, 2 are skipped: numerator and
/// denominator each contribute exactly three of those factors.
pub fn is_regular_at(rep: [i64; 3]) -> Result<bool, CharacterError> {
    check_nonzero(rep)?;
    let t: i64 = rep.iter().sum();
    let shifted = rep.map(|a| a - 2 * t);
    if shifted.contains(&0) {
        return Ok(true); // f ≡ 0
    }
    let numer: Vec<i64> = shifted.iter().map(|a| a.abs()).collect();
    let denom: Vec<i64> = rep.iter().map(|a| a.abs()).collect();
    for &a in &denom {
        for d in 3..=(2 * a) {
            if (2 * a) % d != 0 {
                continue;
            }
            if cyclotomic_multiplicity(&numer, d) < cyclotomic_multiplicity(&denom, d) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Regularity of a canonical point.
pub fn is_regular(p: &VogelPoint) -> Result<bool, CharacterError> {
    is_regular_at(p.canonical())
}

/// Expands the character at an arbitrary integer representative.
///
/// Factors with negative arguments contribute tracked −1 signs so the
/// Laurent kernels only ever see positive exponents.
pub fn expand_at(rep: [i64; 3]) -> Result<CharacterExpansion, CharacterError> {
    check_nonzero(rep)?;
    let t: i64 = rep.iter().sum();
    let shifted = rep.map(|a| a - 2 * t);
    if shifted.contains(&0) {
        return Ok(CharacterExpansion::zero(rep));
    }
    let mut sign = 1i64;
    let mut numer = LaurentPoly::one();
    for a in shifted {
        if a < 0 {
            sign = -sign;
        }
        numer = &numer * &LaurentPoly::q_pow_minus_inv(a.abs());
    }
    let mut denom = LaurentPoly::one();
    for a in rep {
        if a < 0 {
            sign = -sign;
        }
        denom = &denom * &LaurentPoly::q_pow_minus_inv(a.abs());
    }
    match numer.exact_div(&denom) {
        Ok(q) => {
            let q = if sign < 0 { -&q } else { q };
            Ok(CharacterExpansion::new(&q, rep))
        }
        Err(ExactError::NonzeroRemainder(rem)) => Err(CharacterError::NotRegular(rem)),
        Err(e) => unreachable!("unexpected exact-arithmetic failure: {e}"),
    }
}

/// Expands the character of a canonical point.
pub fn expand(p: &VogelPoint) -> Result<CharacterExpansion, CharacterError> {
    expand_at(p.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::vogel::named_points;

    fn point(triple: [i64; 3]) -> VogelPoint {
        VogelPoint::from_integers(triple).unwrap()
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&point([-6, -10, 1])).unwrap());
        assert!(is_regular(&point([1, 1, 1])).unwrap());
        // Φ₅ divides q^10 - 1 in the denominator but no numerator factor
        assert!(!is_regular_at([1, 1, 5]).unwrap());
        assert!(matches!(
            is_regular_at([0, 1, 2]),
            Err(CharacterError::PoleAtZeroCoordinate)
        ));
    }

    #[test]
    fn regularity_agrees_with_expansion_on_a_grid() {
        for a in -6..=6i64 {
            for b in a..=6 {
                for c in b..=6 {
                    let rep = [a, b, c];
                    if rep.contains(&0) {
                        continue;
                    }
                    let fast = is_regular_at(rep).unwrap();
                    let slow = expand_at(rep).is_ok();
                    assert_eq!(fast, slow, "disagreement at {rep:?}");
                }
            }
        }
    }

    #[test]
    fn unit_point_expansion_is_negated_cube() {
        // (1,1,1): f = -((q⁵-q⁻⁵)/(q-q⁻¹))³, so the constant term is minus
        // the number of triples from {-4,-2,0,2,4} summing to zero.
        let e = expand_at([1, 1, 1]).unwrap();
        let base = [-4i64, -2, 0, 2, 4];
        let mut zero_sum_triples = 0i64;
        for x in base {
            for y in base {
                for z in base {
                    if x + y + z == 0 {
                        zero_sum_triples += 1;
                    }
                }
            }
        }
        assert_eq!(zero_sum_triples, 19);
        assert_eq!(e.rank(), BigInt::from(-19));
        assert_eq!(e.dim(), BigInt::from(-125));
        for (exp, _) in e.coefficients() {
            assert!(exp.abs() <= 12 && exp % 2 == 0);
        }
    }

    #[test]
    fn vanishing_and_constant_cases() {
        // a factor α - 2t = 0 kills the character
        let z = expand_at([4, -1, -1]).unwrap();
        assert_eq!(z.dim(), BigInt::zero());
        assert_eq!(z.rank(), BigInt::zero());
        assert_eq!(z, CharacterExpansion::zero([4, -1, -1]));
        // on the t = 0 line the numerator equals the denominator: f ≡ 1
        let one = expand_at([-1, -1, 2]).unwrap();
        assert_eq!(one.dim(), BigInt::from(1));
        assert_eq!(one.rank(), BigInt::from(1));
        assert_eq!(one.coefficients().count(), 1);
    }

    #[test]
    fn catalog_dims_and_ranks() {
        let expected: [(i64, i64); 15] = [
            (248, 8),
            (78, 6),
            (28, 4),
            (0, 0),
            (0, 0),
            (-125, -19),
            (-144, -14),
            (-147, -17),
            (-165, -13),
            (-228, -10),
            (-242, -18),
            (-252, -8),
            (-272, -14),
            (-322, -12),
            (-492, -10),
        ];
        for (named, (dim, rank)) in named_points().iter().zip(expected) {
            let e = expand(&named.point).unwrap();
            assert_eq!(e.dim(), BigInt::from(dim), "{} dim", named.label);
            assert_eq!(e.rank(), BigInt::from(rank), "{} rank", named.label);
            assert!(e.is_palindromic(), "{}", named.label);
            // the expansion's dimension must equal the closed formula's
            if dim != 0 {
                assert_eq!(
                    named.point.dimension().unwrap(),
                    rational(dim, 1),
                    "{}",
                    named.label
                );
            }
        }
    }

    #[test]
    fn simple_algebra_rows_have_positive_root_counts() {
        for label in ["e8", "e6", "so(8)"] {
            let named = named_points()
                .into_iter()
                .find(|n| n.label == label)
                .unwrap();
            let e = expand(&named.point).unwrap();
            for (exp, c) in e.coefficients() {
                if exp != 0 {
                    assert!(c > &BigInt::zero(), "{label} coefficient at {exp}");
                }
            }
        }
    }

    #[test]
    fn rescaling_dilates_exponents() {
        let base = expand_at([-1, 6, 10]).unwrap();
        for lambda in [2i64, 3, 5] {
            let scaled = expand_at([-lambda, 6 * lambda, 10 * lambda]).unwrap();
            assert_eq!(scaled.dim(), base.dim());
            assert_eq!(scaled.rank(), base.rank());
            for (e, c) in base.coefficients() {
                assert_eq!(&scaled.coefficient(e * lambda), c);
            }
            assert_eq!(
                base.coefficients().count(),
                scaled.coefficients().count()
            );
        }
    }
}
