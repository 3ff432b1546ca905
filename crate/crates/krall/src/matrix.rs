//! 2x2 matrices over an arbitrary ring, used for the Schlesinger systems.

use crate::field::{Ring, Var};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Row-major 2x2 matrix.
#[derive(Clone, PartialEq)]
pub struct Mat2<R> {
    pub e: [[R; 2]; 2],
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        Mat2::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    pub fn diag(a: R, d: R) -> Self {
        Mat2::new(a, R::zero(), R::zero(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    pub fn map<F: Ring>(&self, f: impl Fn(&R) -> F) -> Mat2<F> {
        Mat2::new(
            f(&self.e[0][0]),
            f(&self.e[0][1]),
            f(&self.e[1][0]),
            f(&self.e[1][1]),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn deriv(&self, var: Var) -> Self {
        self.map(|x| x.deriv(var))
    }

    /// AB - BA.
    pub fn commutator(&self, other: &Self) -> Self {
        self.clone() * other.clone() - other.clone() * self.clone()
    }

    /// First entry that is nonzero, with its indices.
    pub fn first_nonzero(&self) -> Option<(usize, usize, R)> {
        for i in 0..2 {
            for j in 0..2 {
                if !self.e[i][j].is_zero() {
                    return Some((i, j, self.e[i][j].clone()));
                }
            }
        }
        None
    }
}

impl<R: Ring> Add for Mat2<R> {
    type Output = Mat2<R>;
    fn add(self, rhs: Mat2<R>) -> Mat2<R> {
        let [[a, b], [c, d]] = self.e;
        let [[e, f], [g, h]] = rhs.e;
        Mat2::new(a + e, b + f, c + g, d + h)
    }
}

impl<R: Ring> Sub for Mat2<R> {
    type Output = Mat2<R>;
    fn sub(self, rhs: Mat2<R>) -> Mat2<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Mat2<R> {
    type Output = Mat2<R>;
    fn neg(self) -> Mat2<R> {
        let [[a, b], [c, d]] = self.e;
        Mat2::new(-a, -b, -c, -d)
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, rhs: Mat2<R>) -> Mat2<R> {
        let a = &self.e;
        let b = &rhs.e;
        let entry = |i: usize, j: usize| {
            a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone()
        };
        Mat2::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

impl<R: Ring> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

impl<R: Ring> fmt::Debug for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
