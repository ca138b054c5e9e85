//! Exact elements of cyclotomic fields ℚ(ζ_N).
//!
//! An element is a coefficient vector over the power basis
//! `1, ζ, …, ζ^{φ(N)−1}` of `ℚ[x]/(Φ_N(x))`, where `Φ_N` is the N-th
//! cyclotomic polynomial. Reducing modulo `Φ_N` (rather than `x^N − 1`)
//! keeps the representation canonical, so structural equality decides
//! field equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// Reduction data for one field order, cached process-wide.
struct CycloContext {
    degree: usize,
    /// `x^p` in the power basis, for `p = 0 .. max(order, 2·degree − 1)`.
    powers: Vec<Vec<Rational>>,
}

fn context(order: u32) -> Arc<CycloContext> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CycloContext::new(order)))
        .clone()
}

/// Dense ascending-coefficient polynomial division over ℤ, exact by
/// construction here (cyclotomic polynomials are monic divisors of x^n − 1).
fn poly_div_exact(numer: &[BigInt], denom: &[BigInt]) -> Vec<BigInt> {
    let mut rem = numer.to_vec();
    let dd = denom.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quo = vec![BigInt::zero(); nd - dd + 1];
    for top in (dd..=nd).rev() {
        if rem[top].is_zero() {
            continue;
        }
        let c = rem[top].clone(); // denom is monic
        let shift = top - dd;
        for (i, d) in denom.iter().enumerate() {
            let prod = &c * d;
            rem[shift + i] -= prod;
        }
        quo[shift] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact cyclotomic division");
    quo
}

/// Computes Φ_n for every divisor of `n` bottom-up:
/// Φ_d = (x^d − 1) / Π_{e | d, e < d} Φ_e.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut table: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut numer = vec![BigInt::zero(); d as usize + 1];
        numer[0] = -BigInt::one();
        numer[d as usize] = BigInt::one();
        let mut quo = numer;
        for e in 1..d {
            if d % e == 0 {
                quo = poly_div_exact(&quo, &table[&e]);
            }
        }
        table.insert(d, quo);
    }
    table.remove(&n).unwrap()
}

impl CycloContext {
    fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let min_poly = cyclotomic_polynomial(order);
        let degree = min_poly.len() - 1;
        // x^degree = -(lower part of Φ), everything above follows by shifting
        let reduction: Vec<Rational> = min_poly[..degree]
            .iter()
            .map(|c| -Rational::from(c.clone()))
            .collect();
        let limit = (2 * degree).max(order as usize + 1);
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(limit);
        for p in 0..limit {
            if p < degree {
                let mut v = vec![Rational::zero(); degree];
                v[p] = Rational::one();
                powers.push(v);
            } else {
                let prev = &powers[p - 1];
                let mut v = vec![Rational::zero(); degree];
                // multiply by x: shift, then fold the overflowing top term
                let top = prev[degree - 1].clone();
                v[1..degree].clone_from_slice(&prev[..degree - 1]);
                if !top.is_zero() {
                    for (x, r) in v.iter_mut().zip(&reduction) {
                        *x += &top * r;
                    }
                }
                powers.push(v);
            }
        }
        Self { degree, powers }
    }
}

/// An exact element of ℚ(ζ_N).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        let ctx = context(order);
        Self {
            order,
            coeffs: vec![Rational::zero(); ctx.degree],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    /// `ζ_order^power` (power taken modulo the order).
    pub fn root(order: u32, power: i64) -> Self {
        let ctx = context(order);
        let p = power.rem_euclid(order as i64) as usize;
        Self {
            order,
            coeffs: ctx.powers[p].clone(),
        }
    }

    /// Builds directly from basis coefficients (must have length φ(order)).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        let ctx = context(order);
        assert_eq!(coeffs.len(), ctx.degree, "coefficient vector length");
        Self { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every non-constant basis coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The constant coefficient when the element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Degree of the field extension, φ(order).
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Lifts into ℚ(ζ_M); `M` must be a multiple of the current order.
    pub fn coerce(&self, to_order: u32) -> Result<Self, ExactError> {
        if to_order == self.order {
            return Ok(self.clone());
        }
        if !to_order.is_multiple_of(self.order) {
            return Err(ExactError::BadCoercion {
                from: self.order,
                to: to_order,
            });
        }
        let step = (to_order / self.order) as usize;
        let ctx = context(to_order);
        let mut out = Self::zero(to_order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, p) in ctx.powers[k * step].iter().enumerate() {
                out.coeffs[i] += c * p;
            }
        }
        Ok(out)
    }

    /// Lifts both operands to the least common field ℚ(ζ_lcm).
    pub fn lift_pair(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = (a.order as u64).lcm(&(b.order as u64)) as u32;
        (a.coerce(m).unwrap(), b.coerce(m).unwrap())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (mut a, b) = Self::lift_pair(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product, reduced modulo the cyclotomic polynomial. Operands of
    /// different orders are first lifted to the lcm order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = Self::lift_pair(self, rhs);
        let ctx = context(a.order);
        let n = ctx.degree;
        let mut conv = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        let mut out = Self::zero(a.order);
        for (p, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, basis) in ctx.powers[p].iter().enumerate() {
                out.coeffs[i] += &c * basis;
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹; an involution.
    pub fn conj(&self) -> Self {
        let ctx = context(self.order);
        let n = self.order as usize;
        let mut out = Self::zero(self.order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = (n - k) % n;
            for (i, basis) in ctx.powers[p].iter().enumerate() {
                out.coeffs[i] += c * basis;
            }
        }
        out
    }

    /// Parses a term expression such as `-1/2*z^3+z-2`, where `z` denotes
    /// ζ_order. Used by the embedded character-table asset.
    pub fn parse(order: u32, text: &str) -> Result<Self, String> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty cyclotomic literal".into());
        }
        let mut out = Self::zero(order);
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            let coeff = if start == i {
                Rational::one()
            } else {
                let lit = &s[start..i];
                let (num, den) = match lit.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (lit, "1"),
                };
                let n: BigInt = num.parse().map_err(|_| format!("bad numerator in {lit}"))?;
                let d: BigInt = den.parse().map_err(|_| format!("bad denominator in {lit}"))?;
                Rational::new(n, d)
            };
            let coeff = Rational::from(sign) * coeff;
            let mut power: i64 = 0;
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'z' {
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let start = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = s[start..i]
                        .parse()
                        .map_err(|_| format!("bad exponent in {text}"))?;
                }
            } else if start == i {
                return Err(format!("dangling sign in {text}"));
            }
            let term = Self::root(order, power).scale(&coeff);
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}
