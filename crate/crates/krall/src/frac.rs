//! Unreduced fractions over an integral domain.
//!
//! Residual checks only ever ask "is this expression identically zero?", and
//! that question does not require keeping fractions in lowest terms.  `Frac`
//! performs field arithmetic without any gcd reduction, which avoids the
//! cost of repeated bivariate gcds in the heavier symbolic identities; the
//! final zero test is a plain polynomial cancellation.
//!
//! Shared denominators are detected structurally on addition, which keeps
//! degrees close to minimal for the formula shapes used here.

use crate::field::{Field, Ring, Var};
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// num/den with den nonzero; equality is by cross-multiplication.
#[derive(Clone)]
pub struct Frac<R> {
    num: R,
    den: R,
}

impl<R: Ring> Frac<R> {
    pub fn new(num: R, den: R) -> Self {
        assert!(!den.is_zero(), "fraction with zero denominator");
        Frac { num, den }
    }

    pub fn from_ring(r: R) -> Self {
        Frac {
            num: r,
            den: R::one(),
        }
    }

    pub fn num(&self) -> &R {
        &self.num
    }

    pub fn den(&self) -> &R {
        &self.den
    }
}

impl<R: Ring> PartialEq for Frac<R> {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl<R: Ring> Add for Frac<R> {
    type Output = Frac<R>;
    fn add(self, rhs: Frac<R>) -> Frac<R> {
        if self.den == rhs.den {
            return Frac {
                num: self.num + rhs.num,
                den: self.den,
            };
        }
        Frac {
            num: self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            den: self.den * rhs.den,
        }
    }
}

impl<R: Ring> Sub for Frac<R> {
    type Output = Frac<R>;
    fn sub(self, rhs: Frac<R>) -> Frac<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Frac<R> {
    type Output = Frac<R>;
    fn mul(self, rhs: Frac<R>) -> Frac<R> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Frac::from_ring(R::zero());
        }
        Frac {
            num: self.num * rhs.num,
            den: self.den * rhs.den,
        }
    }
}

impl<R: Ring> Div for Frac<R> {
    type Output = Frac<R>;
    fn div(self, rhs: Frac<R>) -> Frac<R> {
        assert!(!rhs.num.is_zero(), "division by zero fraction");
        Frac {
            num: self.num * rhs.den,
            den: self.den * rhs.num,
        }
    }
}

impl<R: Ring> Neg for Frac<R> {
    type Output = Frac<R>;
    fn neg(self) -> Frac<R> {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<R: Ring> Ring for Frac<R> {
    fn zero() -> Self {
        Frac::from_ring(R::zero())
    }

    fn one() -> Self {
        Frac::from_ring(R::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(q: Rational) -> Self {
        Frac::from_ring(R::from_rational(q))
    }

    fn deriv(&self, var: Var) -> Self {
        // quotient rule, unreduced
        Frac {
            num: self.num.deriv(var) * self.den.clone() - self.num.clone() * self.den.deriv(var),
            den: self.den.clone() * self.den.clone(),
        }
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self.clone() / d.clone())
    }
}

impl<R: Ring> Field for Frac<R> {
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero fraction");
        Frac {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
}

impl<R: Ring> fmt::Display for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_zero() || self.den == R::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<R: Ring> fmt::Debug for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::BiPoly;

    type F = Frac<BiPoly>;

    #[test]
    fn zero_test_without_reduction() {
        let t1 = F::from_ring(BiPoly::var1());
        let t2 = F::from_ring(BiPoly::var2());
        let one = F::one();
        // t1/(t1+t2) + t2/(t1+t2) - 1 == 0
        let s = t1.clone() / (t1.clone() + t2.clone()) + t2.clone() / (t1 + t2) - one;
        assert!(s.is_zero() || s.num().is_zero());
        assert!(s.is_zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        let t1 = F::from_ring(BiPoly::var1());
        let f = F::one() / t1.clone();
        let d = f.deriv(Var::T1);
        // -1/t1^2
        assert_eq!(d, -(F::one() / (t1.clone() * t1)));
    }
}
