//! Rational functions of one deformation parameter t.
//!
//! `RatFun1` is the coefficient field for every symbolic computation on the
//! one-jump families (Krall-Laguerre, Krall-Jacobi, Krall-Gegenbauer): the
//! moments, recurrence coefficients, tau-function solutions y_n(t) and their
//! exact derivatives all live here.

use crate::field::{Field, Ring, Var};
use crate::poly::{series_div, Poly};
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A reduced ratio of polynomials in t.
///
/// Invariants: gcd(num, den) = 1 and den is monic; zero is 0/1.
#[derive(Clone, PartialEq)]
pub struct RatFun1 {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFun1 {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun1 {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.exact_divide(&g).expect("gcd divides numerator");
        let den = den.exact_divide(&g).expect("gcd divides denominator");
        RatFun1::make_canonical(num, den)
    }

    // coprime num/den in, monic-denominator canonical form out
    fn make_canonical(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        if num.is_zero() {
            return RatFun1 {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let lead = den.leading_coeff().inv();
        RatFun1 {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFun1 {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFun1::from_poly(Poly::constant(c))
    }

    /// The deformation variable t.
    pub fn var() -> Self {
        RatFun1::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn as_poly(&self) -> Option<Poly<Rational>> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// Exact evaluation at a rational point; `None` on a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    /// d/dt by the quotient rule, reduced to lowest terms.  With num and den
    /// coprime the only cancellation sits inside gcd(w, den) for
    /// w = num' den - num den'.
    pub fn derivative(&self) -> Self {
        let w = self.num.derivative() * self.den.clone()
            - self.num.clone() * self.den.derivative();
        if w.is_zero() {
            return RatFun1::zero();
        }
        let g = w.gcd(&self.den);
        let num = w.exact_divide(&g).expect("gcd divides");
        let den_part = self.den.exact_divide(&g).expect("gcd divides");
        RatFun1::make_canonical(num, self.den.clone() * den_part)
    }

    /// The value at t = infinity: 0 if deg num < deg den, the ratio of
    /// leading coefficients if the degrees agree, `None` if unbounded.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Some(Rational::zero()),
            std::cmp::Ordering::Equal => Some(self.num.leading_coeff() / self.den.leading_coeff()),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Taylor coefficients c_1..c_k of the expansion at t = infinity,
    ///
    ///   f(t) = c_0 + c_1/t + c_2/t^2 + ... + c_k/t^k + O(t^{-k-1}),
    ///
    /// computed by exact long division in the variable s = 1/t.  Fails when
    /// f is unbounded at infinity (deg num > deg den).
    pub fn expand_at_infinity(&self, k: usize) -> Result<Vec<Rational>, crate::Error> {
        let mut full = self.expand_at_infinity_full(k)?;
        full.remove(0);
        Ok(full)
    }

    /// As `expand_at_infinity` but including c_0 as the first entry.
    pub fn expand_at_infinity_full(&self, k: usize) -> Result<Vec<Rational>, crate::Error> {
        if self.num.is_zero() {
            return Ok(vec![Rational::zero(); k + 1]);
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        if dn > dd {
            return Err(crate::Error::UnboundedAtInfinity);
        }
        // f(1/s) = s^{dd-dn} * rev(num)(s) / rev(den)(s), a power series in s
        // with rev the coefficient reversal.
        let rev = |p: &Poly<Rational>| {
            let mut c: Vec<Rational> = p.coeffs().to_vec();
            c.reverse();
            Poly::new(c)
        };
        let num_rev = rev(&self.num);
        let den_rev = rev(&self.den);
        let shift = dd - dn;
        let series = series_div(&num_rev, &den_rev, k);
        let mut out = vec![Rational::zero(); k + 1];
        for (j, c) in series.into_iter().enumerate() {
            if j + shift <= k {
                out[j + shift] = c;
            }
        }
        Ok(out)
    }
}

impl Ring for RatFun1 {
    fn zero() -> Self {
        RatFun1::from_poly(Poly::zero())
    }

    fn one() -> Self {
        RatFun1::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(q: Rational) -> Self {
        RatFun1::constant(q)
    }

    fn deriv(&self, var: Var) -> Self {
        match var {
            Var::T1 => self.derivative(),
            Var::T2 => RatFun1::zero(),
        }
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self.clone() / d.clone())
    }
}

impl Field for RatFun1 {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFun1::make_canonical(self.den.clone(), self.num.clone())
    }
}

// Arithmetic uses Henrici's scheme: with both operands already reduced, the
// candidate common factors are small cross-gcds rather than a gcd of full
// products.

impl Add for RatFun1 {
    type Output = RatFun1;
    fn add(self, rhs: RatFun1) -> RatFun1 {
        if self.den == rhs.den {
            return RatFun1::new(self.num + rhs.num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        if g.degree() == Some(0) {
            let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
            return RatFun1::make_canonical(num, self.den * rhs.den);
        }
        let bp = self.den.exact_divide(&g).expect("gcd divides");
        let dp = rhs.den.exact_divide(&g).expect("gcd divides");
        let t = self.num * dp.clone() + rhs.num * bp.clone();
        let h = t.gcd(&g);
        if h.degree() == Some(0) {
            return RatFun1::make_canonical(t, g * bp * dp);
        }
        let t = t.exact_divide(&h).expect("gcd divides");
        let g = g.exact_divide(&h).expect("gcd divides");
        RatFun1::make_canonical(t, g * bp * dp)
    }
}

impl Sub for RatFun1 {
    type Output = RatFun1;
    fn sub(self, rhs: RatFun1) -> RatFun1 {
        self + (-rhs)
    }
}

impl Mul for RatFun1 {
    type Output = RatFun1;
    fn mul(self, rhs: RatFun1) -> RatFun1 {
        if self.is_zero() || rhs.is_zero() {
            return RatFun1::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = self.num.exact_divide(&g1).expect("gcd divides")
            * rhs.num.exact_divide(&g2).expect("gcd divides");
        let den = self.den.exact_divide(&g2).expect("gcd divides")
            * rhs.den.exact_divide(&g1).expect("gcd divides");
        RatFun1::make_canonical(num, den)
    }
}

impl Div for RatFun1 {
    type Output = RatFun1;
    fn div(self, rhs: RatFun1) -> RatFun1 {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self * rhs.inv()
    }
}

impl Neg for RatFun1 {
    type Output = RatFun1;
    fn neg(self) -> RatFun1 {
        RatFun1 {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFun1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num.to_string_var("t"))
        } else {
            write!(
                f,
                "({}) / ({})",
                self.num.to_string_var("t"),
                self.den.to_string_var("t")
            )
        }
    }
}

impl fmt::Debug for RatFun1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn t() -> RatFun1 {
        RatFun1::var()
    }

    fn c(n: i64) -> RatFun1 {
        RatFun1::from_rational(Rational::from(n))
    }

    #[test]
    fn derivative_of_inverse() {
        // d/dt (1/t) = -1/t^2
        let f = c(1) / t();
        let expect = c(-1) / (t() * t());
        assert_eq!(f.derivative(), expect);
    }

    #[test]
    fn derivative_quotient_rule_worked_example() {
        // d/dt [t/((t+1)(t+2))] = (2 - t^2)/((t+1)^2 (t+2)^2)
        let f = t() / ((t() + c(1)) * (t() + c(2)));
        let num = c(2) - t() * t();
        let den = (t() + c(1)) * (t() + c(1)) * (t() + c(2)) * (t() + c(2));
        assert_eq!(f.derivative(), num / den);
    }

    #[test]
    fn derivative_in_absent_variable_is_zero() {
        let f = t() / (t() + c(1));
        assert!(f.deriv(Var::T2).is_zero());
    }

    #[test]
    fn expansion_geometric() {
        // 1/(t+1) = 1/t - 1/t^2 + ...
        let f = c(1) / (t() + c(1));
        assert_eq!(
            f.expand_at_infinity(2).unwrap(),
            vec![Rational::from(1), Rational::from(-1)]
        );
    }

    #[test]
    fn expansion_of_worked_y1() {
        // t/((t+1)(t+2)): c_1 = 1
        let f = t() / ((t() + c(1)) * (t() + c(2)));
        assert_eq!(f.expand_at_infinity(1).unwrap(), vec![Rational::from(1)]);
        assert_eq!(f.limit_at_infinity().unwrap(), Rational::zero());
    }

    #[test]
    fn expansion_of_constant() {
        let f = c(5);
        assert_eq!(f.expand_at_infinity_full(3).unwrap()[0], Rational::from(5));
        assert_eq!(
            f.expand_at_infinity(3).unwrap(),
            vec![Rational::zero(); 3]
        );
    }

    #[test]
    fn expansion_rejects_unbounded() {
        assert!((t() * t() / (t() + c(1))).expand_at_infinity(1).is_err());
    }

    #[test]
    fn reduction_keeps_denominator_monic() {
        let f = (c(2) * t()) / (c(2) * t() + c(2));
        assert_eq!(f.den().leading_coeff(), Rational::one());
        assert_eq!(f, t() / (t() + c(1)));
        let _ = q(1, 1);
    }
}
