//! Arbitrary-precision rational scalars.
//!
//! Every quantity in this crate is built from [`Rational`]: an exact ratio of
//! big integers kept in lowest terms with a positive denominator.  There is no
//! floating point anywhere in the library; identities are either exactly zero
//! or they fail.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational number.
///
/// Invariants (maintained by `num_rational`): numerator and denominator are
/// coprime and the denominator is positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Factorial n! as a rational.
    pub fn factorial(n: usize) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= BigInt::from(k);
        }
        Rational(BigRational::from_integer(acc))
    }
}

/// The shifted factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc = &acc * &factor;
        factor = &factor + &Rational::one();
    }
    acc
}

/// The shifted factorial extended to negative order by the reciprocal-Gamma
/// convention: (a)_{-m} = 1 / ((a-m)(a-m+1)...(a-1)).
///
/// Panics when the reciprocal product vanishes.
pub fn pochhammer_i(a: &Rational, n: i64) -> Rational {
    if n >= 0 {
        pochhammer(a, n as usize)
    } else {
        let m = (-n) as usize;
        let base = a - &Rational::from(m as i64);
        let prod = pochhammer(&base, m);
        assert!(!prod.is_zero(), "pochhammer_i: reciprocal of zero");
        prod.inv()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<(i64, i64)> for Rational {
    fn from((n, d): (i64, i64)) -> Self {
        Rational::new(n, d)
    }
}

/// Parses "p/q" or "p"; the denominator must be nonzero.
impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
        let den = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

/// Renders "p/q" with q > 0, or just "p" for integers.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

macro_rules! forward_div {
    ($lhs:ty, $rhs:ty) => {
        impl Div<$rhs> for $lhs {
            type Output = Rational;
            fn div(self, rhs: $rhs) -> Rational {
                assert!(!rhs.is_zero(), "division by zero");
                Rational((&self.0).div(&rhs.0))
            }
        }
    };
}

forward_div!(Rational, Rational);
forward_div!(&Rational, &Rational);
forward_div!(Rational, &Rational);
forward_div!(&Rational, Rational);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn pochhammer_empty_product() {
        assert_eq!(pochhammer(&q(5, 2), 0), Rational::one());
    }

    #[test]
    fn pochhammer_integer() {
        // 2*3*4
        assert_eq!(pochhammer(&Rational::from(2), 3), Rational::from(24));
    }

    #[test]
    fn pochhammer_half_integer() {
        // (-1/2)(1/2)
        assert_eq!(pochhammer(&q(-1, 2), 2), q(-1, 4));
    }

    #[test]
    fn pochhammer_negative_order() {
        // (a)_{-1} = 1/(a-1)
        assert_eq!(pochhammer_i(&Rational::from(3), -1), q(1, 2));
        // (1/2)_{-2} = 1/((-3/2)(-1/2)) = 4/3
        assert_eq!(pochhammer_i(&q(1, 2), -2), q(4, 3));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!("17/6".parse::<Rational>().unwrap(), q(17, 6));
        assert_eq!("-3".parse::<Rational>().unwrap(), Rational::from(-3));
        assert_eq!("4/-6".parse::<Rational>().unwrap(), q(-2, 3));
        assert_eq!(q(-2, 3).to_string(), "-2/3");
        assert_eq!(Rational::from(7).to_string(), "7");
    }
}
