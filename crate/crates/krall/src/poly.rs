//! Dense univariate polynomials over an exact coefficient ring.
//!
//! `Poly<K>` is used in several roles: polynomials in x over any of the
//! scalar fields (the orthogonal polynomials themselves and the Laguerre
//! equation data), and polynomials in the deformation parameter t over
//! [`Rational`] (numerators and denominators of [`crate::RatFun1`]).

use crate::field::{Field, Ring, Var};
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate polynomial, coefficients stored by ascending degree.
///
/// Invariant: the highest-degree coefficient is nonzero; the zero polynomial
/// has an empty coefficient list.
#[derive(Clone, PartialEq)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

/// Exact division failed; carries the nonzero remainder.
#[derive(Clone)]
pub struct DivisibilityFailure<K> {
    pub remainder: Poly<K>,
}

impl<K: Ring> fmt::Debug for DivisibilityFailure<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisibilityFailure {{ remainder: {} }}", self.remainder)
    }
}

impl<K: Ring> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial equal to the main variable.
    pub fn var() -> Self {
        Poly::new(vec![K::zero(), K::one()])
    }

    /// c * X^k
    pub fn monomial(c: K, k: usize) -> Self {
        let mut coeffs = vec![K::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| K::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0, convenient for bounds checks.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn map<F: Ring>(&self, f: impl Fn(&K) -> F) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| f(c)).collect())
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Evaluate at a point of the coefficient ring.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate into another ring through an embedding of the coefficients.
    pub fn eval_map<F: Ring>(&self, x: &F, embed: impl Fn(&K) -> F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    /// Derivative with respect to the main variable.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * K::from_int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    /// Exact division by repeated leading-coefficient division; returns the
    /// remainder on failure.  Works over any ring in which the leading
    /// coefficients happen to divide, which is always the case when `self`
    /// is an exact multiple of `d`.
    pub fn exact_divide(&self, d: &Self) -> Result<Self, DivisibilityFailure<K>> {
        assert!(!d.is_zero(), "exact_divide by zero polynomial");
        let dd = d.degree().unwrap();
        let dlead = d.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let Some(q) = rem.leading_coeff().exact_div(&dlead) else {
                return Err(DivisibilityFailure { remainder: rem });
            };
            let shift = rd - dd;
            quot[shift] = q.clone();
            rem = rem - Poly::monomial(q, shift) * d.clone();
        }
        if rem.is_zero() {
            Ok(Poly::new(quot))
        } else {
            Err(DivisibilityFailure { remainder: rem })
        }
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = format!("{c}");
            let part = match k {
                0 => coeff,
                1 if coeff == "1" => var.to_string(),
                1 => format!("({coeff})*{var}"),
                _ if coeff == "1" => format!("{var}^{k}"),
                _ => format!("({coeff})*{var}^{k}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl<K: Field> Poly<K> {
    /// Quotient and remainder with deg r < deg d; coefficients form a field.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dinv = d.leading_coeff().inv();
        let mut rem = self.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading_coeff() * dinv.clone();
            let shift = rd - dd;
            quot[shift] = q.clone();
            rem = rem - Poly::monomial(q, shift) * d.clone();
        }
        (Poly::new(quot), rem)
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading_coeff() == K::one()
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().inv())
    }

    /// Monic gcd, delegated to the coefficient field (integer primitive
    /// pseudo-remainder sequence for rationals, monic Euclid otherwise).
    pub fn gcd(&self, other: &Self) -> Self {
        K::poly_gcd(self, other)
    }
}

/// Monic Euclidean gcd, with remainders re-normalized to monic at every
/// step to keep coefficient growth polynomial.
pub(crate) fn gcd_monic_euclid<K: Field>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    let mut a = a.make_monic();
    let mut b = b.make_monic();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b);
        a = b;
        b = r.make_monic();
    }
    a
}

/// Monic gcd of rational-coefficient polynomials via a primitive
/// pseudo-remainder sequence over the integers.
pub(crate) fn gcd_int_primitive(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    gcd_int_primitive_raw(a, b).make_monic()
}

/// As `gcd_int_primitive` but returning the primitive integer associate
/// (content-free, positive leading coefficient) instead of the monic one.
pub(crate) fn gcd_int_primitive_raw(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero as _;

    fn primitive_ints(p: &Poly<Rational>) -> Vec<BigInt> {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denominator()));
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| c.numerator() * (&lcm / c.denominator()))
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return Vec::new();
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    fn make_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
        let v = trim(v);
        if v.is_empty() {
            return v;
        }
        let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        v.into_iter().map(|c| c / &content).collect()
    }

    // lead(b)^k a mod b, computed without fractions
    fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = b.len() - 1;
        let lead_b = b.last().unwrap().clone();
        let mut r = a.to_vec();
        loop {
            r = trim(r);
            if r.len() <= db {
                return r;
            }
            let dr = r.len() - 1;
            let lead_r = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lead_b;
            }
            for (j, bc) in b.iter().enumerate() {
                r[dr - db + j] -= &lead_r * bc;
            }
        }
    }

    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    let mut u = primitive_ints(a);
    let mut v = primitive_ints(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = pseudo_rem(&u, &v);
        u = v;
        v = make_primitive(r);
    }
    if u.last().is_some_and(|c| c < &BigInt::zero()) {
        for c in u.iter_mut() {
            *c = -c.clone();
        }
    }
    Poly::new(
        u.into_iter()
            .map(|c| Rational::from_big(c, BigInt::from(1)))
            .collect(),
    )
}

/// Power-series division to the given order: coefficients of num/den in
/// ascending powers.  Requires den(0) != 0.
pub fn series_div<K: Field>(num: &Poly<K>, den: &Poly<K>, order: usize) -> Vec<K> {
    let d0 = den.coeff(0);
    assert!(!d0.is_zero(), "series_div: denominator vanishes at 0");
    let d0inv = d0.inv();
    let mut out: Vec<K> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.coeff(k);
        for j in 0..k {
            acc = acc - out[j].clone() * den.coeff(k - j);
        }
        out.push(acc * d0inv.clone());
    }
    out
}

impl<K: Ring> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Poly<K>) -> Poly<K> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Poly::new(long)
    }
}

impl<K: Ring> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        self + (-rhs)
    }
}

impl<K: Ring> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<K: Ring> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<K: Ring> Ring for Poly<K> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn from_rational(q: Rational) -> Self {
        Poly::constant(K::from_rational(q))
    }

    /// Coefficient-wise derivative: the main variable is never a deformation
    /// variable in ring contexts (x-polynomials over t-dependent scalars).
    fn deriv(&self, var: Var) -> Self {
        self.map(|c| c.deriv(var))
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.exact_divide(d).ok()
    }
}

impl<K: Ring> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<K: Ring> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    type P = Poly<Rational>;

    fn p(coeffs: &[i64]) -> P {
        P::from_ints(coeffs)
    }

    #[test]
    fn derivative_drops_degree() {
        // x^2 - 3x -> 2x - 3
        assert_eq!(p(&[0, -3, 1]).derivative(), p(&[-3, 2]));
        // constant -> 0
        assert!(p(&[7]).derivative().is_zero());
        // t^3/6 -> t^2/2
        let third = Poly::new(vec![
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::new(1, 6),
        ]);
        assert_eq!(
            third.derivative(),
            Poly::new(vec![Rational::zero(), Rational::zero(), Rational::new(1, 2)])
        );
    }

    #[test]
    fn exact_divide_examples() {
        // (x^2 - 1)/(x - 1) = x + 1
        assert_eq!(p(&[-1, 0, 1]).exact_divide(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        // x^2 + 1 by x: remainder 1
        let err = p(&[1, 0, 1]).exact_divide(&p(&[0, 1])).unwrap_err();
        assert_eq!(err.remainder, p(&[1]));
        // x^3 / x^2 = x
        assert_eq!(p(&[0, 0, 0, 1]).exact_divide(&p(&[0, 0, 1])).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-2, 2]); // 2(x-1)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn series_division() {
        // 1/(1+s) = 1 - s + s^2 - ...
        let c = series_div(&p(&[1]), &p(&[1, 1]), 3);
        assert_eq!(c, vec![
            Rational::from(1),
            Rational::from(-1),
            Rational::from(1),
            Rational::from(-1)
        ]);
    }
}
