//! Rational functions of the two deformation parameters (t1, t2).
//!
//! The coefficient field for symbolic Koornwinder computations.  Canonical
//! form: numerator and denominator coprime, denominator with graded-lex
//! leading coefficient 1, so equality is structural.

use crate::bipoly::BiPoly;
use crate::field::{Field, Ring, Var};
use crate::poly::Poly;
use crate::ratfun::RatFun1;
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A reduced ratio of bivariate polynomials.
#[derive(Clone, PartialEq)]
pub struct RatFun2 {
    num: BiPoly,
    den: BiPoly,
}

impl RatFun2 {
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun2 {
                num: BiPoly::zero(),
                den: BiPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        RatFun2::make_canonical(num, den)
    }

    // coprime num/den in, grlex-normalized denominator out
    fn make_canonical(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return RatFun2 {
                num: BiPoly::zero(),
                den: BiPoly::one(),
            };
        }
        let lead = den.grlex_lead().inv();
        RatFun2 {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFun2 {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn var1() -> Self {
        RatFun2::from_poly(BiPoly::var1())
    }

    pub fn var2() -> Self {
        RatFun2::from_poly(BiPoly::var2())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == BiPoly::one()
    }

    pub fn as_poly(&self) -> Option<BiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// Exact evaluation; `None` on a pole.
    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Option<Rational> {
        let d = self.den.eval2(t1, t2);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval2(t1, t2) / d)
    }

    /// Substitute t2 = q, leaving a rational function of t1.  `None` when
    /// the denominator vanishes identically on that line.
    pub fn pin_t2(&self, q: &Rational) -> Option<RatFun1> {
        let den = self.den.pin_t2(q);
        if den.is_zero() {
            return None;
        }
        Some(RatFun1::new(self.num.pin_t2(q), den))
    }

    pub fn pin_t1(&self, q: &Rational) -> Option<RatFun1> {
        let den = self.den.pin_t1(q);
        if den.is_zero() {
            return None;
        }
        Some(RatFun1::new(self.num.pin_t1(q), den))
    }

    /// Substitute t1 = t2 = t.
    pub fn diagonal(&self) -> Option<RatFun1> {
        let den = self.den.diagonal();
        if den.is_zero() {
            return None;
        }
        Some(RatFun1::new(self.num.diagonal(), den))
    }

    /// Swap t1 and t2.
    pub fn swap_vars(&self) -> Self {
        RatFun2::new(self.num.swap_vars(), self.den.swap_vars())
    }

    /// Taylor coefficients of the expansion at (t1, t2) = (infinity,
    /// infinity), as a polynomial in (s1, s2) = (1/t1, 1/t2) truncated at
    /// total degree `order`.  Fails when the function is unbounded there.
    pub fn expand_at_infinity2(&self, order: usize) -> Result<BiPoly, crate::Error> {
        if self.num.is_zero() {
            return Ok(BiPoly::zero());
        }
        let d1 = self.num.deg1().max(self.den.deg1());
        let d2 = self.num.deg2().max(self.den.deg2());
        // reverse both at bidegree (d1, d2): p~(s1,s2) = s1^d1 s2^d2 p(1/s1, 1/s2)
        let rev = |p: &BiPoly| {
            BiPoly::from_terms(
                &p.terms()
                    .into_iter()
                    .map(|(i, j, c)| (d1 - i, d2 - j, c))
                    .collect::<Vec<_>>(),
            )
        };
        let num_rev = rev(&self.num);
        let den_rev = rev(&self.den);
        if den_rev.coeff(0, 0).is_zero() {
            return Err(crate::Error::UnboundedAtInfinity);
        }
        Ok((num_rev * den_rev.series_inv(order)).truncate_total(order))
    }

    /// The constant term of the expansion at (infinity, infinity).
    pub fn limit_at_infinity(&self) -> Result<Rational, crate::Error> {
        Ok(self.expand_at_infinity2(0)?.coeff(0, 0))
    }
}

impl Ring for RatFun2 {
    fn zero() -> Self {
        RatFun2::from_poly(BiPoly::zero())
    }

    fn one() -> Self {
        RatFun2::from_poly(BiPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(q: Rational) -> Self {
        RatFun2::from_poly(BiPoly::constant(q))
    }

    fn deriv(&self, var: Var) -> Self {
        let w = self.num.deriv(var) * self.den.clone() - self.num.clone() * self.den.deriv(var);
        if w.is_zero() {
            return RatFun2::zero();
        }
        let g = w.gcd(&self.den);
        let num = w.exact_div(&g).expect("gcd divides");
        let den_part = self.den.exact_div(&g).expect("gcd divides");
        RatFun2::make_canonical(num, self.den.clone() * den_part)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self.clone() / d.clone())
    }
}

impl Field for RatFun2 {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFun2::make_canonical(self.den.clone(), self.num.clone())
    }
}

// Henrici-style arithmetic: only small cross-gcds on reduced operands.

impl Add for RatFun2 {
    type Output = RatFun2;
    fn add(self, rhs: RatFun2) -> RatFun2 {
        if self.den == rhs.den {
            return RatFun2::new(self.num + rhs.num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        if g == BiPoly::one() {
            let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
            return RatFun2::make_canonical(num, self.den * rhs.den);
        }
        let bp = self.den.exact_div(&g).expect("gcd divides");
        let dp = rhs.den.exact_div(&g).expect("gcd divides");
        let t = self.num * dp.clone() + rhs.num * bp.clone();
        if t.is_zero() {
            return RatFun2::zero();
        }
        let h = t.gcd(&g);
        if h == BiPoly::one() {
            return RatFun2::make_canonical(t, g * bp * dp);
        }
        let t = t.exact_div(&h).expect("gcd divides");
        let g = g.exact_div(&h).expect("gcd divides");
        RatFun2::make_canonical(t, g * bp * dp)
    }
}

impl Sub for RatFun2 {
    type Output = RatFun2;
    fn sub(self, rhs: RatFun2) -> RatFun2 {
        self + (-rhs)
    }
}

impl Mul for RatFun2 {
    type Output = RatFun2;
    fn mul(self, rhs: RatFun2) -> RatFun2 {
        if self.is_zero() || rhs.is_zero() {
            return RatFun2::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).expect("gcd divides")
            * rhs.num.exact_div(&g2).expect("gcd divides");
        let den = self.den.exact_div(&g2).expect("gcd divides")
            * rhs.den.exact_div(&g1).expect("gcd divides");
        RatFun2::make_canonical(num, den)
    }
}

impl Div for RatFun2 {
    type Output = RatFun2;
    fn div(self, rhs: RatFun2) -> RatFun2 {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self * rhs.inv()
    }
}

impl Neg for RatFun2 {
    type Output = RatFun2;
    fn neg(self) -> RatFun2 {
        RatFun2 {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Embed a univariate rational function of t as a function of t1.
pub fn lift_t1(f: &RatFun1) -> RatFun2 {
    let lift = |p: &Poly<Rational>| {
        BiPoly::from_terms(
            &p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, 0, c.clone()))
                .collect::<Vec<_>>(),
        )
    };
    RatFun2::new(lift(f.num()), lift(f.den()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> RatFun2 {
        RatFun2::var1()
    }

    fn t2() -> RatFun2 {
        RatFun2::var2()
    }

    fn c(n: i64) -> RatFun2 {
        RatFun2::from_int(n)
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let f = (t1() * t2() + t1()) / (t1() * t1());
        assert_eq!(f, (t2() + c(1)) / t1());
    }

    #[test]
    fn partial_derivatives() {
        let f = t1() / (t1() + t2());
        let d1 = f.deriv(Var::T1);
        let d2 = f.deriv(Var::T2);
        assert_eq!(d1, t2() / ((t1() + t2()) * (t1() + t2())));
        assert_eq!(d2, -t1() / ((t1() + t2()) * (t1() + t2())));
        // a function of t2 only has zero t1-derivative
        let g = t2() / (t2() + c(1));
        assert!(g.deriv(Var::T1).is_zero());
    }

    #[test]
    fn pins_and_diagonal() {
        let f = (t1() + t2()) / (t1() * t2() + c(1));
        let at = f.eval(&Rational::from(2), &Rational::from(3)).unwrap();
        assert_eq!(at, Rational::new(5, 7));
        let pinned = f.pin_t2(&Rational::from(3)).unwrap();
        assert_eq!(pinned.eval(&Rational::from(2)).unwrap(), at);
        let diag = f.diagonal().unwrap();
        assert_eq!(diag.eval(&Rational::from(2)).unwrap(), Rational::new(4, 5));
    }

    #[test]
    fn expansion_at_double_infinity() {
        // t1/(t1 t2 + t1 + t2) = s2/(1 + s1 + s2) = s2 - s1 s2 - s2^2 + ...
        let f = t1() / (t1() * t2() + t1() + t2());
        let s = f.expand_at_infinity2(2).unwrap();
        assert_eq!(s.coeff(0, 0), Rational::zero());
        assert_eq!(s.coeff(1, 0), Rational::zero());
        assert_eq!(s.coeff(0, 1), Rational::one());
        assert_eq!(s.coeff(1, 1), Rational::from(-1));
        assert_eq!(s.coeff(0, 2), Rational::from(-1));
        assert_eq!(s.coeff(2, 0), Rational::zero());
    }
}
