//! Unit quaternions with exact cyclotomic components.
//!
//! A quaternion `a + bi + cj + dk` with unit norm corresponds to the SU(2)
//! matrix `[[a+bi, c+di], [−c+di, a−bi]]`; its trace is 2a. Group elements
//! here always have components in a fixed real subfield, so `a` is fixed by
//! complex conjugation and the trace is real.

use std::fmt;

use crate::exact::{CyclotomicNumber, Rational};

/// Quaternion over ℚ(ζ_N), all four components sharing the order N.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicQuaternion {
    pub a: CyclotomicNumber,
    pub b: CyclotomicNumber,
    pub c: CyclotomicNumber,
    pub d: CyclotomicNumber,
}

impl CyclotomicQuaternion {
    pub fn new(
        a: CyclotomicNumber,
        b: CyclotomicNumber,
        c: CyclotomicNumber,
        d: CyclotomicNumber,
    ) -> Self {
        let order = a.order();
        assert!(
            b.order() == order && c.order() == order && d.order() == order,
            "quaternion components must share one field order"
        );
        Self { a, b, c, d }
    }

    pub fn one(order: u32) -> Self {
        Self::new(
            CyclotomicNumber::one(order),
            CyclotomicNumber::zero(order),
            CyclotomicNumber::zero(order),
            CyclotomicNumber::zero(order),
        )
    }

    pub fn order(&self) -> u32 {
        self.a.order()
    }

    /// Hamilton product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        Self {
            a: a1.mul(a2).sub(&b1.mul(b2)).sub(&c1.mul(c2)).sub(&d1.mul(d2)),
            b: a1.mul(b2).add(&b1.mul(a2)).add(&c1.mul(d2)).sub(&d1.mul(c2)),
            c: a1.mul(c2).sub(&b1.mul(d2)).add(&c1.mul(a2)).add(&d1.mul(b2)),
            d: a1.mul(d2).add(&b1.mul(c2)).sub(&c1.mul(b2)).add(&d1.mul(a2)),
        }
    }

    /// Quaternion conjugate `a − bi − cj − dk`; the inverse of a unit
    /// quaternion.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    /// Trace of the corresponding SU(2) matrix: 2a.
    pub fn trace(&self) -> CyclotomicNumber {
        self.a.add(&self.a)
    }

    /// `a·ā + b·b̄ + c·c̄ + d·d̄`; equals 1 for every group element.
    pub fn norm(&self) -> CyclotomicNumber {
        self.a
            .mul(&self.a.conj())
            .add(&self.b.mul(&self.b.conj()))
            .add(&self.c.mul(&self.c.conj()))
            .add(&self.d.mul(&self.d.conj()))
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == CyclotomicNumber::one(self.order())
    }

    /// A total-order key used only for deterministic sorting.
    pub fn sort_key(&self) -> (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber, CyclotomicNumber) {
        (self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
    }
}

impl fmt::Display for CyclotomicQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})i + ({})j + ({})k",
            self.a, self.b, self.c, self.d
        )
    }
}

/// Convenience constructor from rational components.
pub fn quaternion_from_rationals(order: u32, parts: [Rational; 4]) -> CyclotomicQuaternion {
    let [a, b, c, d] = parts;
    CyclotomicQuaternion::new(
        CyclotomicNumber::from_rational(order, a),
        CyclotomicNumber::from_rational(order, b),
        CyclotomicNumber::from_rational(order, c),
        CyclotomicNumber::from_rational(order, d),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn basis(order: u32) -> [CyclotomicQuaternion; 4] {
        let one = CyclotomicNumber::one(order);
        let zero = CyclotomicNumber::zero(order);
        [
            CyclotomicQuaternion::new(one.clone(), zero.clone(), zero.clone(), zero.clone()),
            CyclotomicQuaternion::new(zero.clone(), one.clone(), zero.clone(), zero.clone()),
            CyclotomicQuaternion::new(zero.clone(), zero.clone(), one.clone(), zero.clone()),
            CyclotomicQuaternion::new(zero.clone(), zero.clone(), zero.clone(), one.clone()),
        ]
    }

    #[test]
    fn hamilton_relations() {
        let [one, i, j, k] = basis(1);
        assert_eq!(i.mul(&i), one.neg());
        assert_eq!(j.mul(&j), one.neg());
        assert_eq!(k.mul(&k), one.neg());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
    }

    #[test]
    fn inverse_of_unit_is_conjugate() {
        let w = quaternion_from_rationals(
            1,
            [
                rational(1, 2),
                rational(1, 2),
                rational(1, 2),
                rational(1, 2),
            ],
        );
        assert!(w.is_unit());
        assert_eq!(w.mul(&w.inverse()), CyclotomicQuaternion::one(1));
        assert_eq!(w.trace(), CyclotomicNumber::one(1));
    }
}
