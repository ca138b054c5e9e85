//! Property tests for the structural invariants of the arithmetic and
//! classification layers.

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use dioplane::character::{expand_at, is_regular_at};
use dioplane::dioph::{classify, enumerate, equation_catalog, main_equation, SolutionKind};
use dioplane::exact::{rational, CyclotomicNumber, LaurentPoly, Rational};
use dioplane::vogel::{dimension_formula, VogelPoint};

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..=6, -5i64..=5), 0..5).prop_map(|pairs| {
        LaurentPoly::from_terms(pairs.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn cyclotomic_strategy() -> impl Strategy<Value = CyclotomicNumber> {
    (
        prop_oneof![Just(1u32), Just(3), Just(4), Just(5), Just(8), Just(12)],
        proptest::collection::vec((-4i64..=4, 1i64..=3), 1..4),
    )
        .prop_map(|(order, terms)| {
            let mut acc = CyclotomicNumber::zero(order);
            for (i, (num, den)) in terms.into_iter().enumerate() {
                let term = CyclotomicNumber::root(order, i as i64).scale(&rational(num, den));
                acc = acc.add(&term);
            }
            acc
        })
}

proptest! {
    #[test]
    fn laurent_division_round_trips(a in laurent_strategy(), b in laurent_strategy()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        let q = product.exact_div(&b).expect("a*b is divisible by b");
        prop_assert_eq!(q, a);
    }

    #[test]
    fn laurent_multiplication_commutes_and_associates(
        a in laurent_strategy(),
        b in laurent_strategy(),
        c in laurent_strategy(),
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn conjugation_involutes_and_fixes_norms(z in cyclotomic_strategy()) {
        prop_assert_eq!(z.conj().conj(), z.clone());
        let norm = z.mul(&z.conj());
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn rationals_stay_reduced(a in -40i64..=40, b in 1i64..=40, c in -40i64..=40, d in 1i64..=40) {
        let x = rational(a, b);
        let y = rational(c, d);
        for r in [&x + &y, &x - &y, &x * &y] {
            prop_assert!(r.denom() > &BigInt::from(0));
            prop_assert_eq!(r.numer().gcd(r.denom()), BigInt::from(1));
        }
    }

    #[test]
    fn dimension_is_scale_and_permutation_invariant(
        a in -9i64..=9, b in -9i64..=9, c in -9i64..=9,
        lam_num in 1i64..=7, lam_den in 1i64..=7, negate in proptest::bool::ANY,
        perm in 0usize..6,
    ) {
        prop_assume!(a != 0 && b != 0 && c != 0);
        let triple = [rational(a, 1), rational(b, 1), rational(c, 1)];
        let base = dimension_formula(&triple).unwrap();
        let lambda = rational(if negate { -lam_num } else { lam_num }, lam_den);
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let p = perms[perm];
        let scaled = [
            &triple[p[0]] * &lambda,
            &triple[p[1]] * &lambda,
            &triple[p[2]] * &lambda,
        ];
        prop_assert_eq!(dimension_formula(&scaled).unwrap(), base.clone());
        // and through canonicalization
        let point = VogelPoint::canonicalize(scaled).unwrap();
        prop_assert_eq!(point.dimension().unwrap(), base);
    }

    #[test]
    fn regularity_shortcut_matches_division(
        a in -12i64..=12, b in -12i64..=12, c in -12i64..=12,
    ) {
        prop_assume!(a != 0 && b != 0 && c != 0);
        let rep = [a, b, c];
        let fast = is_regular_at(rep).unwrap();
        match expand_at(rep) {
            Ok(e) => {
                prop_assert!(fast, "division succeeded but the shortcut said irregular");
                prop_assert!(e.is_palindromic());
                // expansion dimension equals the closed formula
                let triple = rep.map(|x| rational(x, 1));
                prop_assert_eq!(
                    Rational::from(e.dim()),
                    dimension_formula(&triple).unwrap()
                );
            }
            Err(_) => prop_assert!(!fast, "division failed but the shortcut said regular"),
        }
    }

    #[test]
    fn enumeration_is_monotone_and_self_consistent(bound_small in 3i64..=20, extra in 0i64..=20) {
        let main = main_equation();
        let small = enumerate(&main, bound_small, true);
        let large = enumerate(&main, bound_small + extra, true);
        for s in &small {
            prop_assert!(main.is_solution(s.k, s.n, s.m));
            prop_assert!(large.contains(s));
        }
        // polygon family classes present up to the bound
        for a in 1..=bound_small {
            let mut key = [2, a, -a];
            key.sort_unstable_by(|x, y| y.cmp(x));
            prop_assert!(large.iter().any(|s| s.canonical_descending() == key));
        }
    }
}

#[test]
fn every_catalog_equation_is_solved_by_its_enumeration() {
    for eq in equation_catalog() {
        for s in enumerate(&eq, 25, true) {
            assert!(eq.is_solution(s.k, s.n, s.m), "{} returned {s}", eq.name);
        }
    }
}

#[test]
fn family_members_classify_as_families() {
    let main = main_equation();
    for s in enumerate(&main, 25, true) {
        let cls = classify(&s).unwrap();
        let zeros = s.entries().iter().filter(|&&x| x == 0).count();
        match cls.kind {
            SolutionKind::ZeroFamily => assert!(zeros >= 2),
            SolutionKind::PolygonFamily => {
                let a = cls.family_parameter.unwrap();
                assert!(a > 0);
                let mut want = [2, a, -a];
                want.sort_unstable_by(|x, y| y.cmp(x));
                assert_eq!(s.canonical_descending(), want);
            }
            SolutionKind::Isolated => assert_eq!(zeros, 0),
        }
    }
}
