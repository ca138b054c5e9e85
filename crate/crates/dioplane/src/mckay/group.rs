//! Construction of the finite subgroups of SU(2) as exact quaternion
//! groups: closure from fixed generators, then the conjugacy-class
//! partition.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::exact::{rational, CyclotomicNumber, Rational};

use super::quaternion::{quaternion_from_rationals, CyclotomicQuaternion};
use super::McKayError;

/// The classification of finite subgroups of SU(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupFamily {
    /// Cyclic of order N ≥ 1.
    Cyclic(u32),
    /// Binary dihedral of order 4n, n ≥ 1 (double cover of the dihedral
    /// group of the n-gon).
    BinaryDihedral(u32),
    /// Order 24, double cover of the tetrahedron's rotation group.
    BinaryTetrahedral,
    /// Order 48, double cover of the octahedron's rotation group.
    BinaryOctahedral,
    /// Order 120, double cover of the icosahedron's rotation group.
    BinaryIcosahedral,
}

impl SubgroupFamily {
    pub fn expected_order(&self) -> usize {
        match *self {
            Self::Cyclic(n) => n as usize,
            Self::BinaryDihedral(n) => 4 * n as usize,
            Self::BinaryTetrahedral => 24,
            Self::BinaryOctahedral => 48,
            Self::BinaryIcosahedral => 120,
        }
    }
}

impl fmt::Display for SubgroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Cyclic(n) => write!(f, "C{n}"),
            Self::BinaryDihedral(n) => write!(f, "BD{n}"),
            Self::BinaryTetrahedral => write!(f, "2T"),
            Self::BinaryOctahedral => write!(f, "2O"),
            Self::BinaryIcosahedral => write!(f, "2I"),
        }
    }
}

/// One conjugacy class: member indices, a representative, and the common
/// trace.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub members: Vec<usize>,
    pub representative: usize,
    pub trace: CyclotomicNumber,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite subgroup of SU(2), closed under multiplication and inverse,
/// with its conjugacy-class partition.
#[derive(Debug, Clone)]
pub struct FiniteSubgroupSU2 {
    pub family: SubgroupFamily,
    /// Cyclotomic order of the component field.
    pub field_order: u32,
    pub elements: Vec<CyclotomicQuaternion>,
    pub classes: Vec<ConjugacyClass>,
    index: HashMap<CyclotomicQuaternion, usize>,
    generators: Vec<usize>,
}

impl FiniteSubgroupSU2 {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, q: &CyclotomicQuaternion) -> Option<usize> {
        self.index.get(q).copied()
    }

    /// Index of the class containing element `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.contains(&i))
            .expect("every element lies in a class")
    }

    /// Index of −x for element index `i`.
    pub fn negation(&self, i: usize) -> usize {
        self.index_of(&self.elements[i].neg())
            .expect("groups here are closed under negation or trivial")
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
}

fn sin_cos_of(order_m: u32, turn_num: i64, turn_den: u32) -> (CyclotomicNumber, CyclotomicNumber) {
    // cos(2π·num/den) and sin(2π·num/den) inside ℚ(ζ_M); M must be a
    // multiple of both den and 4.
    let m = order_m;
    assert!(m.is_multiple_of(turn_den) && m.is_multiple_of(4));
    let step = (m / turn_den) as i64 * turn_num;
    let z = CyclotomicNumber::root(m, step);
    let zi = CyclotomicNumber::root(m, -step);
    let half = rational(1, 2);
    let cos = z.add(&zi).scale(&half);
    // sin θ = −i (e^{iθ} − e^{−iθ})/2, with −i = ζ_M^{3M/4}
    let minus_i = CyclotomicNumber::root(m, 3 * (m as i64) / 4);
    let sin = z.sub(&zi).mul(&minus_i).scale(&half);
    (sin, cos)
}

fn generators_for(family: SubgroupFamily) -> (u32, Vec<CyclotomicQuaternion>) {
    let zero = Rational::from(num_bigint::BigInt::from(0));
    let one = rational(1, 1);
    let half = rational(1, 2);
    match family {
        SubgroupFamily::Cyclic(n) => {
            let m = (n as u64).lcm(&4) as u32;
            let (sin, cos) = sin_cos_of(m, 1, n);
            let z = CyclotomicNumber::zero(m);
            (
                m,
                vec![CyclotomicQuaternion::new(cos, sin, z.clone(), z)],
            )
        }
        SubgroupFamily::BinaryDihedral(n) => {
            let m = (2 * n as u64).lcm(&4) as u32;
            let (sin, cos) = sin_cos_of(m, 1, 2 * n);
            let z = CyclotomicNumber::zero(m);
            let r = CyclotomicQuaternion::new(cos, sin, z.clone(), z);
            let j = quaternion_from_rationals(m, [zero.clone(), zero, one, rational(0, 1)]);
            (m, vec![r, j])
        }
        SubgroupFamily::BinaryTetrahedral => {
            let i = quaternion_from_rationals(1, [zero.clone(), one, rational(0, 1), rational(0, 1)]);
            let w = quaternion_from_rationals(
                1,
                [half.clone(), half.clone(), half.clone(), half],
            );
            (1, vec![i, w])
        }
        SubgroupFamily::BinaryOctahedral => {
            // 2T generators lifted into ℚ(ζ₈) plus (1+i)/√2
            let lift = |q: Rational| CyclotomicNumber::from_rational(8, q);
            let i = CyclotomicQuaternion::new(
                lift(zero.clone()),
                lift(one),
                lift(rational(0, 1)),
                lift(rational(0, 1)),
            );
            let w = CyclotomicQuaternion::new(
                lift(half.clone()),
                lift(half.clone()),
                lift(half.clone()),
                lift(half),
            );
            // √2/2 = (ζ₈ − ζ₈³)/2
            let s = CyclotomicNumber::root(8, 1)
                .sub(&CyclotomicNumber::root(8, 3))
                .scale(&rational(1, 2));
            let o = CyclotomicQuaternion::new(
                s.clone(),
                s,
                CyclotomicNumber::zero(8),
                CyclotomicNumber::zero(8),
            );
            (8, vec![i, w, o])
        }
        SubgroupFamily::BinaryIcosahedral => {
            // φ = (1+√5)/2 = −ζ₅²−ζ₅³ and 1/φ = φ−1 = ζ₅+ζ₅⁴; the two
            // generators are (1+i+j+k)/2 and (φ + φ⁻¹ i + j)/2.
            let lift = |q: Rational| CyclotomicNumber::from_rational(5, q);
            let w = CyclotomicQuaternion::new(
                lift(half.clone()),
                lift(half.clone()),
                lift(half.clone()),
                lift(half.clone()),
            );
            let phi = CyclotomicNumber::root(5, 2)
                .add(&CyclotomicNumber::root(5, 3))
                .neg();
            let inv_phi = CyclotomicNumber::root(5, 1).add(&CyclotomicNumber::root(5, 4));
            let g = CyclotomicQuaternion::new(
                phi.scale(&half),
                inv_phi.scale(&half),
                lift(half),
                CyclotomicNumber::zero(5),
            );
            (5, vec![w, g])
        }
    }
}

/// Builds the group as the closure of its generator set under exact
/// multiplication, asserts the expected order, and computes the conjugacy
/// classes (deterministically ordered by size, then trace, then a canonical
/// member key).
pub fn build_group(family: SubgroupFamily) -> Result<FiniteSubgroupSU2, McKayError> {
    if let SubgroupFamily::Cyclic(0) | SubgroupFamily::BinaryDihedral(0) = family {
        return Err(McKayError::InvalidFamily(family.to_string()));
    }
    let (field_order, gens) = generators_for(family);
    let expected = family.expected_order();
    for g in &gens {
        debug_assert!(g.is_unit(), "generators must be unit quaternions");
    }

    let identity = CyclotomicQuaternion::one(field_order);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in &gens {
            let next = elements[i].mul(g);
            if !index.contains_key(&next) {
                let id = elements.len();
                if id >= 2 * expected {
                    return Err(McKayError::ClosureExceeded {
                        family: family.to_string(),
                        expected,
                    });
                }
                index.insert(next.clone(), id);
                elements.push(next);
                frontier.push(id);
            }
        }
    }
    if elements.len() != expected {
        return Err(McKayError::WrongOrder {
            family: family.to_string(),
            expected,
            got: elements.len(),
        });
    }
    let generators: Vec<usize> = gens.iter().map(|g| index[g]).collect();

    // conjugation orbits under the generators
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut raw_classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = raw_classes.len();
        let mut orbit = vec![start];
        class_of[start] = cid;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &gi in &generators {
                let g = &elements[gi];
                let conj = g.mul(&elements[i]).mul(&g.inverse());
                let j = index[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    orbit.push(j);
                    stack.push(j);
                }
            }
        }
        raw_classes.push(orbit);
    }

    let mut classes: Vec<ConjugacyClass> = raw_classes
        .into_iter()
        .map(|mut members| {
            members.sort_unstable();
            let representative = *members
                .iter()
                .min_by_key(|&&i| elements[i].sort_key())
                .unwrap();
            let trace = elements[representative].trace();
            ConjugacyClass {
                members,
                representative,
                trace,
            }
        })
        .collect();
    classes.sort_by(|x, y| {
        (x.size(), &x.trace, elements[x.representative].sort_key()).cmp(&(
            y.size(),
            &y.trace,
            elements[y.representative].sort_key(),
        ))
    });

    Ok(FiniteSubgroupSU2 {
        family,
        field_order,
        elements,
        classes,
        index,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_orders() {
        assert_eq!(
            build_group(SubgroupFamily::BinaryIcosahedral).unwrap().order(),
            120
        );
        assert_eq!(build_group(SubgroupFamily::Cyclic(5)).unwrap().order(), 5);
        assert_eq!(
            build_group(SubgroupFamily::BinaryDihedral(3)).unwrap().order(),
            12
        );
        assert_eq!(
            build_group(SubgroupFamily::BinaryTetrahedral).unwrap().order(),
            24
        );
        assert_eq!(
            build_group(SubgroupFamily::BinaryOctahedral).unwrap().order(),
            48
        );
    }

    #[test]
    fn class_counts() {
        assert_eq!(
            build_group(SubgroupFamily::BinaryIcosahedral)
                .unwrap()
                .classes
                .len(),
            9
        );
        for n in 2..=6 {
            let g = build_group(SubgroupFamily::BinaryDihedral(n)).unwrap();
            assert_eq!(g.classes.len(), n as usize + 3, "BD{n}");
        }
        for n in [1u32, 2, 3, 7, 12] {
            let g = build_group(SubgroupFamily::Cyclic(n)).unwrap();
            assert_eq!(g.classes.len(), n as usize, "C{n} is abelian");
            assert!(g.classes.iter().all(|c| c.size() == 1));
        }
    }

    #[test]
    fn groups_are_closed_and_unit_norm() {
        for family in [
            SubgroupFamily::Cyclic(6),
            SubgroupFamily::BinaryDihedral(4),
            SubgroupFamily::BinaryTetrahedral,
            SubgroupFamily::BinaryOctahedral,
            SubgroupFamily::BinaryIcosahedral,
        ] {
            let g = build_group(family).unwrap();
            for e in &g.elements {
                assert!(e.is_unit());
                assert!(g.index_of(&e.inverse()).is_some());
                // the trace is real: fixed by conjugation
                assert_eq!(e.trace().conj(), e.trace());
            }
            let sizes: usize = g.classes.iter().map(|c| c.size()).sum();
            assert_eq!(sizes, g.order());
            // −1 is central for the binary families (order > 2 here)
            if g.order() > 2 {
                let minus_one = g.elements[0].neg();
                if let Some(i) = g.index_of(&minus_one) {
                    assert_eq!(g.classes[g.class_of(i)].size(), 1);
                }
            }
        }
    }

    #[test]
    fn spot_check_closure_products() {
        let g = build_group(SubgroupFamily::BinaryOctahedral).unwrap();
        for a in g.elements.iter().step_by(7) {
            for b in g.elements.iter().step_by(11) {
                assert!(g.index_of(&a.mul(b)).is_some(), "closure violated");
            }
        }
    }
}
