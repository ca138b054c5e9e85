//! Points of the projective (α:β:γ) plane modulo permutation and rescaling,
//! the universal dimension formula, the solution → point map, and
//! identification of points against the classical algebra families.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dioph::{main_equation, SolutionTriple};
use crate::exact::{rational, Rational};

/// Errors from the point layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VogelError {
    #[error("the zero triple has no projective class")]
    ZeroTriple,
    #[error("canonical coordinates exceed the machine-integer range")]
    CanonicalOverflow,
    #[error("({0}, {1}, {2}) does not solve the main equation")]
    NotMainSolution(i64, i64, i64),
    #[error("degenerate solution: one zero entry outside the zero family")]
    DegenerateSolution,
    #[error("dimension formula has a pole at a zero coordinate")]
    PoleAtZeroCoordinate,
}

/// A point of the plane: a fixed rational representative plus the canonical
/// coprime integer triple that names its permutation/rescaling class.
///
/// Canonical form: scale to coprime integers, pick the sign with positive
/// coordinate sum (for sum zero, the lexicographically greater sorted
/// triple), sort ascending. Two points are equal iff canonical forms are.
#[derive(Debug, Clone)]
pub struct VogelPoint {
    rep: [Rational; 3],
    canonical: [i64; 3],
}

impl PartialEq for VogelPoint {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}
impl Eq for VogelPoint {}
impl std::hash::Hash for VogelPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl fmt::Display for VogelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.canonical;
        write!(f, "({a}, {b}, {c})")
    }
}

impl VogelPoint {
    /// Canonicalizes an arbitrary nonzero rational triple.
    pub fn canonicalize(raw: [Rational; 3]) -> Result<Self, VogelError> {
        if raw.iter().all(Zero::is_zero) {
            return Err(VogelError::ZeroTriple);
        }
        // clear denominators, then divide by the common gcd
        let lcm = raw
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints: Vec<BigInt> = raw.iter().map(|r| r.numer() * &lcm / r.denom()).collect();
        let gcd = ints
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut v: Vec<BigInt> = ints.into_iter().map(|x| x / &gcd).collect();
        let t: BigInt = v.iter().sum();
        let flip = match t.sign() {
            num_bigint::Sign::Minus => true,
            num_bigint::Sign::Plus => false,
            num_bigint::Sign::NoSign => {
                let mut sorted: Vec<BigInt> = v.clone();
                sorted.sort();
                let mut neg_sorted: Vec<BigInt> = v.iter().map(|x| -x).collect();
                neg_sorted.sort();
                neg_sorted > sorted
            }
        };
        if flip {
            for x in &mut v {
                *x = -&*x;
            }
        }
        v.sort();
        let mut canonical = [0i64; 3];
        for (slot, x) in canonical.iter_mut().zip(&v) {
            *slot = i64::try_from(x).map_err(|_| VogelError::CanonicalOverflow)?;
        }
        Ok(Self {
            rep: raw,
            canonical,
        })
    }

    /// Canonicalizes an integer triple.
    pub fn from_integers(triple: [i64; 3]) -> Result<Self, VogelError> {
        Self::canonicalize(triple.map(|x| rational(x, 1)))
    }

    /// The representative handed to `canonicalize`.
    pub fn representative(&self) -> &[Rational; 3] {
        &self.rep
    }

    /// The canonical coprime integer triple in canonical order.
    pub fn canonical(&self) -> [i64; 3] {
        self.canonical
    }

    /// α + β + γ of the canonical triple (recomputed, never stored).
    pub fn t(&self) -> i64 {
        self.canonical.iter().sum()
    }

    /// The universal dimension
    /// `d = (α−2t)(β−2t)(γ−2t)/(αβγ)` with `t = α+β+γ`, evaluated exactly
    /// on the canonical triple. Invariant under permutation and rescaling.
    pub fn dimension(&self) -> Result<Rational, VogelError> {
        dimension_formula(&self.canonical.map(|x| rational(x, 1)))
    }

    /// Tests membership in each classical family and the named catalog.
    /// All matches are returned; coincidences between families are genuine.
    pub fn identify(&self) -> Vec<AlgebraIdentity> {
        let mut found: Vec<AlgebraIdentity> = Vec::new();
        let mut push = |id: AlgebraIdentity| {
            if !found.contains(&id) {
                found.push(id);
            }
        };
        let c = self.canonical.map(|x| rational(x, 1));
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let two = rational(2, 1);
        let four = rational(4, 1);
        let one = rational(1, 1);
        for p in perms {
            let (p1, p2, p3) = (&c[p[0]], &c[p[1]], &c[p[2]]);
            if p1.is_zero() {
                continue;
            }
            // rescale so the first coordinate is -2
            let lambda = rational(-2, 1) / p1;
            let x = &lambda * p2;
            let y = &lambda * p3;
            if x == two {
                if let Some(n) = as_integer(&y) {
                    if n >= 2 {
                        push(AlgebraIdentity::Sl { n });
                    }
                }
            }
            if x == four {
                if let Some(n4) = as_integer(&y) {
                    let n = n4 + 4;
                    if n >= 3 {
                        push(AlgebraIdentity::So { n });
                    }
                }
            }
            if x == one {
                if let Some(h) = as_integer(&y) {
                    if h >= 3 {
                        push(AlgebraIdentity::Sp { n: 2 * (h - 2) });
                    }
                }
            }
            // exceptional line (-2, n+4, 2n+4) at the six named values
            let n = &x - &four;
            if y == &(&two * &n) + &four {
                if let Some(name) = exceptional_name(&n) {
                    push(AlgebraIdentity::Exc { n: n.clone(), name });
                }
            }
        }
        for named in named_points() {
            if named.point == *self {
                push(AlgebraIdentity::Named { label: named.label });
            }
        }
        if self.t() == 0 {
            push(AlgebraIdentity::ZeroLine);
        }
        if found.is_empty() {
            found.push(AlgebraIdentity::Unknown);
        }
        found
    }
}

fn as_integer(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| i64::try_from(r.numer()).ok()).flatten()
}

fn exceptional_name(n: &Rational) -> Option<&'static str> {
    if *n == rational(-2, 3) {
        Some("G2")
    } else if *n == rational(0, 1) {
        Some("D4")
    } else if *n == rational(1, 1) {
        Some("F4")
    } else if *n == rational(2, 1) {
        Some("E6")
    } else if *n == rational(4, 1) {
        Some("E7")
    } else if *n == rational(8, 1) {
        Some("E8")
    } else {
        None
    }
}

/// Raw evaluation of the dimension formula at any representative; the value
/// is a degree-0 symmetric function, so any representative gives the same
/// result.
pub fn dimension_formula(triple: &[Rational; 3]) -> Result<Rational, VogelError> {
    if triple.iter().any(Zero::is_zero) {
        return Err(VogelError::PoleAtZeroCoordinate);
    }
    let t: Rational = triple.iter().sum();
    let two_t = rational(2, 1) * &t;
    let numer: Rational = triple.iter().map(|x| x - &two_t).product();
    let denom: Rational = triple.iter().product();
    Ok(numer / denom)
}

/// Image of a main-equation solution in the plane.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum VogelImage {
    Point(VogelPoint),
    /// The one-parameter family on the line α + β + γ = 0 attached to the
    /// (0,0,m) solutions; the D(2,1;λ) superalgebra family. No particular
    /// point on the line is singled out.
    ZeroLine,
}

/// Maps a main-equation solution to its plane image: (1/k, 1/n, 1/m)
/// canonicalized for a nonzero triple (the 2t scale factor is projectively
/// irrelevant), or the t = 0 line for the zero family.
pub fn from_solution(s: &SolutionTriple) -> Result<VogelImage, VogelError> {
    let [k, n, m] = s.entries();
    if s.equation != "main" || !main_equation().is_solution(k, n, m) {
        return Err(VogelError::NotMainSolution(k, n, m));
    }
    let zeros = s.entries().iter().filter(|&&x| x == 0).count();
    match zeros {
        0 => Ok(VogelImage::Point(VogelPoint::canonicalize([
            rational(1, k),
            rational(1, n),
            rational(1, m),
        ])?)),
        1 => Err(VogelError::DegenerateSolution),
        _ => Ok(VogelImage::ZeroLine),
    }
}

/// Identification of a point: family memberships, named catalog points, the
/// zero line, or `Unknown`.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraIdentity {
    Sl { n: i64 },
    So { n: i64 },
    Sp { n: i64 },
    Exc { n: Rational, name: &'static str },
    /// The α+β+γ = 0 line: the D(2,1;λ) family.
    ZeroLine,
    /// One of the fifteen named isolated points.
    Named { label: &'static str },
    Unknown,
}

impl fmt::Display for AlgebraIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sl { n } => write!(f, "sl({n})"),
            Self::So { n } => write!(f, "so({n})"),
            Self::Sp { n } => write!(f, "sp({n})"),
            Self::Exc { name, .. } => write!(f, "{name}"),
            Self::ZeroLine => write!(f, "D(2,1;lambda)"),
            Self::Named { label } => write!(f, "{label}"),
            Self::Unknown => write!(f, "unknown"),
        }
    }
}

impl AlgebraIdentity {
    /// Normalizes to a root-system label, when the identification denotes a
    /// definite simple algebra. Used for the route comparison.
    pub fn root_system(&self) -> Option<RootSystem> {
        match self {
            Self::Sl { n } => Some(RootSystem::A(n - 1)),
            Self::So { n } => {
                if n % 2 == 0 {
                    Some(RootSystem::D(n / 2))
                } else {
                    Some(RootSystem::B((n - 1) / 2))
                }
            }
            Self::Sp { n } => Some(RootSystem::C(n / 2)),
            Self::Exc { name, .. } => Some(match *name {
                "G2" => RootSystem::G2,
                "D4" => RootSystem::D(4),
                "F4" => RootSystem::F4,
                "E6" => RootSystem::E(6),
                "E7" => RootSystem::E(7),
                _ => RootSystem::E(8),
            }),
            Self::Named { label } => match *label {
                "e8" => Some(RootSystem::E(8)),
                "e6" => Some(RootSystem::E(6)),
                "so(8)" => Some(RootSystem::D(4)),
                _ => None,
            },
            Self::ZeroLine | Self::Unknown => None,
        }
    }
}

/// A finite root-system label; the common vocabulary in which the McKay and
/// Diophantine routes are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootSystem {
    A(i64),
    B(i64),
    C(i64),
    D(i64),
    E(u8),
    F4,
    G2,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(n) => write!(f, "A{n}"),
            Self::B(n) => write!(f, "B{n}"),
            Self::C(n) => write!(f, "C{n}"),
            Self::D(n) => write!(f, "D{n}"),
            Self::E(n) => write!(f, "E{n}"),
            Self::F4 => write!(f, "F4"),
            Self::G2 => write!(f, "G2"),
        }
    }
}

/// One named isolated point: its printed solution triple, the printed plane
/// representative, and the label it carries in the catalog.
#[derive(Debug, Clone)]
pub struct NamedPoint {
    pub solution: [i64; 3],
    pub printed_point: [i64; 3],
    pub label: &'static str,
    pub point: VogelPoint,
}

/// The printed isolated-solution catalog: solution, plane representative,
/// label. Dimension and rank are *not* stored; they are always recomputed.
pub const NAMED_CATALOG: [([i64; 3], [i64; 3], &str); 15] = [
    ([5, 3, -30], [-6, -10, 1], "e8"),
    ([4, 3, -12], [-3, -4, 1], "e6"),
    ([3, 3, -6], [-2, -2, 1], "so(8)"),
    ([1, -4, -4], [4, -1, -1], "0d3"),
    ([1, -3, -6], [6, -2, -1], "0d4"),
    ([6, 6, 6], [1, 1, 1], "Y1"),
    ([10, 5, 5], [1, 2, 2], "Y10"),
    ([8, 8, 4], [1, 1, 2], "Y11"),
    ([12, 6, 4], [1, 2, 3], "Y15"),
    ([20, 5, 4], [1, 4, 5], "Y29"),
    ([12, 12, 3], [1, 1, 4], "Y31"),
    ([15, 10, 3], [2, 3, 10], "Y35"),
    ([18, 9, 3], [1, 2, 6], "Y38"),
    ([24, 8, 3], [1, 3, 8], "Y43"),
    ([42, 7, 3], [1, 6, 14], "Y47"),
];

/// The named catalog with canonicalized points.
pub fn named_points() -> Vec<NamedPoint> {
    NAMED_CATALOG
        .iter()
        .map(|&(solution, printed_point, label)| NamedPoint {
            solution,
            printed_point,
            label,
            point: VogelPoint::from_integers(printed_point)
                .expect("catalog points are nonzero"),
        })
        .collect()
}

/// Looks up the catalog label for a main-equation solution given in any
/// permutation order.
pub fn named_label_for_solution(triple: [i64; 3]) -> Option<&'static str> {
    let mut key = triple;
    key.sort_unstable_by(|a, b| b.cmp(a));
    NAMED_CATALOG.iter().find_map(|&(sol, _, label)| {
        let mut s = sol;
        s.sort_unstable_by(|a, b| b.cmp(a));
        (s == key).then_some(label)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dioph;

    fn point(triple: [i64; 3]) -> VogelPoint {
        VogelPoint::from_integers(triple).unwrap()
    }

    #[test]
    fn canonical_form_examples() {
        // negated because the coordinate sum is -15 < 0, then sorted
        assert_eq!(point([-6, -10, 1]).canonical(), [-1, 6, 10]);
        let thirds = VogelPoint::canonicalize([
            rational(2, 3),
            rational(2, 3),
            rational(2, 3),
        ])
        .unwrap();
        assert_eq!(thirds.canonical(), [1, 1, 1]);
        assert_eq!(point([4, -1, -1]), point([-4, 1, 1]));
        assert!(matches!(
            VogelPoint::from_integers([0, 0, 0]),
            Err(VogelError::ZeroTriple)
        ));
    }

    #[test]
    fn zero_sum_tiebreak_is_permutation_invariant() {
        let p = point([1, 2, -3]);
        assert_eq!(p.t(), 0);
        assert_eq!(p, point([-3, 2, 1]));
        assert_eq!(p, point([-1, -2, 3]));
    }

    #[test]
    fn solution_map_examples() {
        let sol = |k, n, m| SolutionTriple::new(k, n, m, "main");
        match from_solution(&sol(5, 3, -30)).unwrap() {
            VogelImage::Point(p) => assert_eq!(p, point([-6, -10, 1])),
            other => panic!("expected a point, got {other:?}"),
        }
        match from_solution(&sol(6, 6, 6)).unwrap() {
            VogelImage::Point(p) => assert_eq!(p.canonical(), [1, 1, 1]),
            other => panic!("expected a point, got {other:?}"),
        }
        assert_eq!(from_solution(&sol(0, 0, 0)).unwrap(), VogelImage::ZeroLine);
        assert_eq!(from_solution(&sol(0, 0, 9)).unwrap(), VogelImage::ZeroLine);
        assert!(matches!(
            from_solution(&sol(5, 5, 5)),
            Err(VogelError::NotMainSolution(..))
        ));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(point([-6, -10, 1]).dimension().unwrap(), rational(248, 1));
        assert_eq!(point([1, 1, 1]).dimension().unwrap(), rational(-125, 1));
        // the sl line gives N² - 1
        assert_eq!(point([-2, 2, 4]).dimension().unwrap(), rational(15, 1));
        assert!(matches!(
            point([0, 1, 2]).dimension(),
            Err(VogelError::PoleAtZeroCoordinate)
        ));
    }

    #[test]
    fn identify_examples() {
        let ids = point([-2, -2, 1]).identify();
        assert!(ids.contains(&AlgebraIdentity::So { n: 8 }));
        assert!(ids
            .iter()
            .any(|i| matches!(i, AlgebraIdentity::Exc { name: "D4", .. })));
        assert!(ids.contains(&AlgebraIdentity::Named { label: "so(8)" }));

        let ids = point([1, 2, 3]).identify();
        assert_eq!(ids, vec![AlgebraIdentity::Named { label: "Y15" }]);

        let ids = point([-2, 1, 9]).identify();
        assert!(ids.contains(&AlgebraIdentity::Sp { n: 14 }));

        assert_eq!(point([3, 5, 7]).identify(), vec![AlgebraIdentity::Unknown]);
    }

    #[test]
    fn catalog_labels_reproduce_from_computation() {
        for named in named_points() {
            let sol = SolutionTriple::new(
                named.solution[0],
                named.solution[1],
                named.solution[2],
                "main",
            );
            match from_solution(&sol).unwrap() {
                VogelImage::Point(p) => {
                    assert_eq!(p, named.point, "{}", named.label);
                    let ids = p.identify();
                    assert!(
                        ids.contains(&AlgebraIdentity::Named { label: named.label }),
                        "{} not identified",
                        named.label
                    );
                }
                other => panic!("unexpected image {other:?}"),
            }
        }
        assert_eq!(named_label_for_solution([6, 4, 12]), Some("Y15"));
        assert_eq!(named_label_for_solution([9, 9, 9]), None);
    }

    #[test]
    fn family_matches_resubstitute_to_the_same_point() {
        // every family identification must reproduce the point from its row
        let main = dioph::main_equation();
        for s in dioph::enumerate(&main, 45, false) {
            let p = match from_solution(&s).unwrap() {
                VogelImage::Point(p) => p,
                _ => unreachable!(),
            };
            for id in p.identify() {
                let row: Option<[Rational; 3]> = match id {
                    AlgebraIdentity::Sl { n } => {
                        Some([rational(-2, 1), rational(2, 1), rational(n, 1)])
                    }
                    AlgebraIdentity::So { n } => {
                        Some([rational(-2, 1), rational(4, 1), rational(n - 4, 1)])
                    }
                    AlgebraIdentity::Sp { n } => {
                        Some([rational(-2, 1), rational(1, 1), rational(n, 2) + rational(2, 1)])
                    }
                    AlgebraIdentity::Exc { ref n, .. } => Some([
                        rational(-2, 1),
                        n + rational(4, 1),
                        rational(2, 1) * n + rational(4, 1),
                    ]),
                    _ => None,
                };
                if let Some(row) = row {
                    let q = VogelPoint::canonicalize(row).unwrap();
                    assert_eq!(q, p, "{id} does not land back on {p} (from {s})");
                }
            }
        }
    }

    #[test]
    fn exceptional_line_dimensions() {
        // direct formula evaluation on (-2, n+4, 2n+4)
        let cases: [(Rational, i64); 6] = [
            (rational(-2, 3), 14),
            (rational(0, 1), 28),
            (rational(1, 1), 52),
            (rational(2, 1), 78),
            (rational(4, 1), 133),
            (rational(8, 1), 248),
        ];
        for (n, dim) in cases {
            let beta = &n + rational(4, 1);
            let gamma = rational(2, 1) * &n + rational(4, 1);
            let triple = [rational(-2, 1), beta, gamma];
            assert_eq!(dimension_formula(&triple).unwrap(), rational(dim, 1));
            let p = VogelPoint::canonicalize(triple).unwrap();
            assert_eq!(p.dimension().unwrap(), rational(dim, 1));
        }
    }

    #[test]
    fn solution_recovery_through_inverse_pattern() {
        // 2t/α over the canonical triple recovers (k,n,m) up to permutation
        let main = dioph::main_equation();
        for s in dioph::enumerate(&main, 45, false) {
            let p = match from_solution(&s).unwrap() {
                VogelImage::Point(p) => p,
                _ => unreachable!(),
            };
            let t: Rational = p.canonical().iter().map(|&x| rational(x, 1)).sum();
            let two_t = rational(2, 1) * t;
            let mut rec: Vec<i64> = p
                .canonical()
                .iter()
                .map(|&a| {
                    let r = &two_t / rational(a, 1);
                    assert!(r.is_integer());
                    i64::try_from(r.numer()).unwrap()
                })
                .collect();
            rec.sort_unstable();
            let mut orig = s.entries().to_vec();
            orig.sort_unstable();
            assert_eq!(rec, orig, "recovery failed for {s}");
        }
    }
}
