//! Ring and field abstractions shared by the scalar types.
//!
//! The same formulas are evaluated over three coefficient fields:
//! [`Rational`] (deformation parameters pinned to rational values),
//! [`crate::RatFun1`] (symbolic in one parameter t), and
//! [`crate::RatFun2`] (symbolic in two parameters t1, t2).  Generic code is
//! written against [`Field`]; fraction-free determinant code only needs
//! [`Ring`].

use crate::rational::Rational;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// The deformation variables.  One-parameter families use `T1` for t; the
/// Koornwinder family uses both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    T1,
    T2,
}

/// A commutative ring with exact division and a formal derivative in the
/// deformation variables.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Sized
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    /// Derivative with respect to a deformation variable.  Plain rationals
    /// are constants, so their derivative is zero.
    fn deriv(&self, var: Var) -> Self;

    /// Exact division: `Some(q)` with `self = q * d` if the division leaves
    /// no remainder, `None` otherwise.  Panics if `d` is zero.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    /// Multiplicative inverse.  Panics on zero.
    fn inv(&self) -> Self;

    /// Monic gcd of univariate polynomials over this field.  The default is
    /// the Euclidean algorithm; [`Rational`] overrides it with a primitive
    /// pseudo-remainder sequence over the integers, which is what keeps the
    /// coefficient sizes under control everywhere else in the crate.
    fn poly_gcd(a: &crate::poly::Poly<Self>, b: &crate::poly::Poly<Self>) -> crate::poly::Poly<Self> {
        crate::poly::gcd_monic_euclid(a, b)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn deriv(&self, _var: Var) -> Self {
        Rational::zero()
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!Rational::is_zero(d), "division by zero");
        Some(self / d)
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        Rational::inv(self)
    }

    fn poly_gcd(
        a: &crate::poly::Poly<Rational>,
        b: &crate::poly::Poly<Rational>,
    ) -> crate::poly::Poly<Rational> {
        crate::poly::gcd_int_primitive(a, b)
    }
}
