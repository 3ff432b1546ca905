//! Bivariate polynomials in the two deformation parameters (t1, t2).
//!
//! Stored recursively as polynomials in t1 whose coefficients are
//! polynomials in t2; gcds are computed by content/primitive-part recursion
//! on this representation.  Degrees stay small (a few times the polynomial
//! index n), so a primitive pseudo-remainder sequence is entirely adequate.

use crate::field::{Ring, Var};
use crate::poly::Poly;
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type Inner = Poly<Poly<Rational>>;

/// A polynomial in t1 and t2 with rational coefficients.
#[derive(Clone, PartialEq)]
pub struct BiPoly {
    inner: Inner,
}

impl BiPoly {
    fn wrap(inner: Inner) -> Self {
        BiPoly { inner }
    }

    pub fn zero() -> Self {
        BiPoly::wrap(Poly::zero())
    }

    pub fn one() -> Self {
        BiPoly::wrap(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::wrap(Poly::constant(Poly::constant(c)))
    }

    /// The variable t1.
    pub fn var1() -> Self {
        BiPoly::wrap(Poly::new(vec![Poly::zero(), Poly::one()]))
    }

    /// The variable t2.
    pub fn var2() -> Self {
        BiPoly::wrap(Poly::constant(Poly::var()))
    }

    pub fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let mut acc = BiPoly::zero();
        for (i, j, c) in terms {
            let row = Poly::monomial(c.clone(), *j);
            acc = acc + BiPoly::wrap(Poly::monomial(row, *i));
        }
        acc
    }

    /// Terms as (deg_t1, deg_t2, coefficient), nonzero coefficients only.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for (i, row) in self.inner.coeffs().iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.inner.coeff(i).coeff(j)
    }

    pub fn deg1(&self) -> usize {
        self.inner.degree_or_zero()
    }

    pub fn deg2(&self) -> usize {
        self.inner
            .coeffs()
            .iter()
            .map(|r| r.degree_or_zero())
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms().iter().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::wrap(self.inner.map(|row| row.scale(c)))
    }

    pub fn deriv_t1(&self) -> Self {
        BiPoly::wrap(self.inner.derivative())
    }

    pub fn deriv_t2(&self) -> Self {
        BiPoly::wrap(self.inner.map(|row| row.derivative()))
    }

    pub fn swap_vars(&self) -> Self {
        BiPoly::from_terms(
            &self
                .terms()
                .into_iter()
                .map(|(i, j, c)| (j, i, c))
                .collect::<Vec<_>>(),
        )
    }

    pub fn eval2(&self, t1: &Rational, t2: &Rational) -> Rational {
        self.inner
            .map(|row| row.eval(t2))
            .eval(t1)
    }

    /// Substitute t1 = q, leaving a polynomial in t2.
    pub fn pin_t1(&self, q: &Rational) -> Poly<Rational> {
        let mut acc = Poly::zero();
        let mut power = Rational::one();
        for row in self.inner.coeffs() {
            acc = acc + row.scale(&power);
            power = power * q.clone();
        }
        acc
    }

    /// Substitute t2 = q, leaving a polynomial in t1.
    pub fn pin_t2(&self, q: &Rational) -> Poly<Rational> {
        Poly::new(self.inner.coeffs().iter().map(|row| row.eval(q)).collect())
    }

    /// Substitute t1 = t2 = t.
    pub fn diagonal(&self) -> Poly<Rational> {
        let mut acc = Poly::zero();
        for (i, row) in self.inner.coeffs().iter().enumerate() {
            acc = acc + Poly::monomial(Rational::one(), i) * row.clone();
        }
        acc
    }

    /// Leading coefficient under graded lexicographic order (total degree,
    /// then degree in t1).
    pub fn grlex_lead(&self) -> Rational {
        self.terms()
            .into_iter()
            .max_by_key(|(i, j, _)| (i + j, *i))
            .map(|(_, _, c)| c)
            .unwrap_or_else(Rational::zero)
    }

    /// Drop all terms of total degree > m.
    pub fn truncate_total(&self, m: usize) -> Self {
        BiPoly::from_terms(
            &self
                .terms()
                .into_iter()
                .filter(|(i, j, _)| i + j <= m)
                .collect::<Vec<_>>(),
        )
    }

    /// Multiplicative inverse as a power series around (0, 0), truncated at
    /// total degree m.  Requires a nonzero constant term.
    pub fn series_inv(&self, m: usize) -> Self {
        let c = self.coeff(0, 0);
        assert!(!c.is_zero(), "series_inv: zero constant term");
        let cinv = c.inv();
        // self = c (1 + e) with e of positive total degree
        let e = self.scale(&cinv) - BiPoly::one();
        let mut acc = BiPoly::one();
        let mut pow = BiPoly::one();
        for _ in 1..=m {
            pow = (pow * (-e.clone())).truncate_total(m);
            if pow.is_zero() {
                break;
            }
            acc = acc + pow.clone();
        }
        acc.scale(&cinv)
    }

    /// The rational content: gcd of the coefficient numerators over the lcm
    /// of their denominators.  Dividing by it leaves integer coefficients
    /// with gcd 1.
    fn rational_content(&self) -> Rational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Zero as _;
        let mut num = BigInt::zero();
        let mut den = BigInt::from(1);
        for (_, _, c) in self.terms() {
            num = num.gcd(c.numerator());
            den = den.lcm(c.denominator());
        }
        Rational::from_big(num, den)
    }

    /// Content as a polynomial in t1 over Q[t2]: the primitive integer gcd
    /// of the t2-coefficient polynomials.
    fn content(&self) -> Poly<Rational> {
        let mut acc = Poly::zero();
        for row in self.inner.coeffs() {
            if !row.is_zero() {
                acc = crate::poly::gcd_int_primitive_raw(&acc, row);
            }
            if acc.degree() == Some(0) {
                break;
            }
        }
        acc
    }

    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let c = self.content();
        BiPoly::wrap(self.inner.map(|row| {
            if row.is_zero() {
                Poly::zero()
            } else {
                row.exact_divide(&c).expect("content divides every row")
            }
        }))
    }

    /// GCD by content/primitive-part recursion: treat the polynomials as
    /// univariate in t1 over Q[t2] and run a primitive pseudo-remainder
    /// sequence, with coefficients held integral throughout.  The result is
    /// normalized to grlex leading coefficient 1.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        let f = self.scale(&self.rational_content().inv());
        let g = other.scale(&other.rational_content().inv());
        let c = crate::poly::gcd_int_primitive_raw(&f.content(), &g.content());
        let mut a = f.primitive_part().inner;
        let mut b = g.primitive_part().inner;
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = BiPoly::wrap(r).primitive_part().inner;
        }
        let g = BiPoly::wrap(a).primitive_part();
        let g = g * BiPoly::wrap(Poly::constant(c));
        g.normalize()
    }

    /// Divide by the grlex leading coefficient.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        self.scale(&self.grlex_lead().inv())
    }

    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        let mut terms = self.terms();
        terms.sort_by_key(|(i, j, _)| std::cmp::Reverse((i + j, *i)));
        for (i, j, c) in terms {
            let mut factors: Vec<String> = Vec::new();
            match i {
                0 => {}
                1 => factors.push("t1".into()),
                _ => factors.push(format!("t1^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("t2".into()),
                _ => factors.push(format!("t2^{j}")),
            }
            if factors.is_empty() {
                parts.push(format!("{c}"));
            } else if c.is_one() {
                parts.push(factors.join("*"));
            } else {
                parts.push(format!("({c})*{}", factors.join("*")));
            }
        }
        parts.join(" + ")
    }
}

/// Pseudo-remainder of a by b in t1 over Q[t2] (up to a power of the leading
/// coefficient of b, which the primitive PRS strips anyway).
fn pseudo_rem(a: &Inner, b: &Inner) -> Inner {
    let db = b.degree().expect("nonzero divisor");
    let lead_b = b.leading_coeff();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let s: Inner = Poly::monomial(r.leading_coeff(), dr - db);
        r = r.scale(&lead_b) - s * b.clone();
    }
    r
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        BiPoly::wrap(self.inner + rhs.inner)
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        BiPoly::wrap(self.inner - rhs.inner)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        BiPoly::wrap(self.inner * rhs.inner)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::wrap(-self.inner)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }

    fn one() -> Self {
        BiPoly::one()
    }

    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }

    fn from_rational(q: Rational) -> Self {
        BiPoly::constant(q)
    }

    fn deriv(&self, var: Var) -> Self {
        match var {
            Var::T1 => self.deriv_t1(),
            Var::T2 => self.deriv_t2(),
        }
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.inner.exact_divide(&d.inner).ok().map(BiPoly::wrap)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> BiPoly {
        BiPoly::var1()
    }

    fn t2() -> BiPoly {
        BiPoly::var2()
    }

    fn c(n: i64) -> BiPoly {
        BiPoly::from_rational(Rational::from(n))
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let p = t1() * t2() + t1() * t1();
        assert_eq!(p.deriv_t1(), t2() + c(2) * t1());
        assert_eq!(p.deriv_t2(), t1());
        assert_eq!(p.eval2(&Rational::from(2), &Rational::from(3)), Rational::from(10));
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = (t1() + t2()) * (t1() - t2());
        let g = (t1() + t2()) * (t1() + c(1));
        let gcd = f.gcd(&g);
        assert_eq!(gcd, (t1() + t2()).normalize());
    }

    #[test]
    fn exact_division() {
        let f = (t1() + t2()) * (t1() * t2() + c(3));
        let q = f.exact_div(&(t1() + t2())).unwrap();
        assert_eq!(q, t1() * t2() + c(3));
        assert!(f.exact_div(&(t1() + c(1))).is_none());
    }

    #[test]
    fn series_inverse() {
        // 1/(1 + t1 + t2) = 1 - t1 - t2 + (t1+t2)^2 - ... truncated
        let d = c(1) + t1() + t2();
        let inv = d.series_inv(2);
        let expect = c(1) - t1() - t2() + (t1() + t2()) * (t1() + t2());
        assert_eq!(inv, expect.truncate_total(2));
        // multiplying back gives 1 modulo total degree 3
        assert_eq!((inv * d).truncate_total(2), c(1));
    }

    #[test]
    fn swap_and_diagonal() {
        let p = t1() * t1() * t2() + c(5) * t2();
        assert_eq!(p.swap_vars(), t2() * t2() * t1() + c(5) * t1());
        let d = p.diagonal();
        // t^3 + 5t
        assert_eq!(d, Poly::from_ints(&[0, 5, 0, 1]));
    }
}
