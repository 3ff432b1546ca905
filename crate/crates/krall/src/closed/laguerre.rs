//! Krall-Laguerre closed forms: the rational Painlevé III data.
//!
//! With tau_n(t) = n! t + (alpha+2)_n, the function
//!
//!   y_0 = (alpha+1)/(t+1),
//!   y_n = (n-1)! (alpha+1)^2 (alpha+2)_{n-1} t / (tau_{n-1} tau_n),  n >= 1,
//!
//! solves an integrable case of Painlevé III (after y_n = t q_n), and the
//! recurrence coefficients are
//!
//!   a_n = -u_n (u_n + (2n+alpha) y_n) / y_n^2,
//!   b_n = 2n + 1 + alpha - y_n,
//!   u_n = (y_n^2 - (2n+1+alpha) y_n - (alpha+1) t y_n') / 2.

use crate::field::Ring;
use crate::measures::Family;
use crate::poly::Poly;
use crate::ratfun::RatFun1;
use crate::rational::{pochhammer, Rational};
use crate::Result;

#[derive(Clone, Debug)]
pub struct KrallLaguerre {
    family: Family,
}

fn c(q: Rational) -> RatFun1 {
    RatFun1::from_rational(q)
}

impl KrallLaguerre {
    pub fn new(alpha: Rational) -> Result<Self> {
        Ok(KrallLaguerre {
            family: Family::krall_laguerre(alpha)?,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    fn alpha(&self) -> &Rational {
        self.family.alpha()
    }

    /// tau_n(t) = n! t + (alpha+2)_n.
    pub fn tau(&self, n: usize) -> Poly<Rational> {
        let a2 = self.alpha() + &Rational::from(2);
        Poly::new(vec![pochhammer(&a2, n), Rational::factorial(n)])
    }

    pub fn y(&self, n: usize) -> RatFun1 {
        let alpha = self.alpha();
        if n == 0 {
            // (alpha+1)/(t+1)
            return RatFun1::new(
                Poly::constant(alpha + &Rational::one()),
                Poly::new(vec![Rational::one(), Rational::one()]),
            );
        }
        let a1 = alpha + &Rational::one();
        let coeff = Rational::factorial(n - 1)
            * (&a1 * &a1)
            * pochhammer(&(alpha + &Rational::from(2)), n - 1);
        let num = Poly::new(vec![Rational::zero(), coeff]);
        RatFun1::new(num, self.tau(n - 1) * self.tau(n))
    }

    /// u_n from y_n and its exact derivative.
    pub fn u(&self, n: usize) -> RatFun1 {
        let y = self.y(n);
        let dy = y.derivative();
        let t = RatFun1::var();
        let a1 = self.alpha() + &Rational::one();
        let lin = Rational::from(2 * n as i64 + 1) + self.alpha().clone();
        (y.clone() * y.clone() - c(lin) * y - c(a1) * t * dy) * c(Rational::new(1, 2))
    }

    /// a_n = -u_n (u_n + (2n+alpha) y_n)/y_n^2 for n >= 1; a_0 = 0.
    pub fn a(&self, n: usize) -> RatFun1 {
        if n == 0 {
            return RatFun1::zero();
        }
        let y = self.y(n);
        let u = self.u(n);
        let lin = Rational::from(2 * n as i64) + self.alpha().clone();
        -u.clone() * (u + c(lin) * y.clone()) / (y.clone() * y)
    }

    /// b_n = 2n + 1 + alpha - y_n.
    pub fn b(&self, n: usize) -> RatFun1 {
        c(Rational::from(2 * n as i64 + 1) + self.alpha().clone()) - self.y(n)
    }

    /// Theta_n = -x + y_n.
    pub fn theta(&self, n: usize) -> Poly<RatFun1> {
        Poly::new(vec![self.y(n), -RatFun1::one()])
    }

    /// Omega_n = -x^2/2 + (n + alpha/2) x + u_n.
    pub fn omega(&self, n: usize) -> Poly<RatFun1> {
        let lin = Rational::from(n as i64) + self.alpha() / &Rational::from(2);
        Poly::new(vec![self.u(n), c(lin), c(Rational::new(-1, 2))])
    }

    /// The explicit second-order equation: coefficients (A2, A1, A0) of
    /// A2 g'' + A1 g' + A0 g = 0 with
    ///
    ///   A2 = x (-x + y_n),
    ///   A1 = (x - y_n)(x - alpha - 2) + x,
    ///   A0 = [(alpha+1)(t y_n'/y_n + 1) + (2n-1) y_n - 2n x] / 2.
    pub fn ode(&self, n: usize) -> [Poly<RatFun1>; 3] {
        let y = self.y(n);
        let x = Poly::<RatFun1>::var();
        let yc = Poly::constant(y.clone());
        let a2 = x.clone() * (-x.clone() + yc.clone());
        let shift = Poly::constant(c(self.alpha() + &Rational::from(2)));
        let a1 = (x.clone() - yc) * (x.clone() - shift) + x;
        let t = RatFun1::var();
        let alpha1 = c(self.alpha() + &Rational::one());
        let const_term = (alpha1 * (t * y.derivative() / y.clone() + RatFun1::one())
            + c(Rational::from(2 * n as i64 - 1)) * y)
            * c(Rational::new(1, 2));
        let a0 = Poly::new(vec![const_term, c(Rational::from(-(n as i64)))]);
        [a2, a1, a0]
    }

    /// t -> infinity limits of (a_n, b_n): the generalized Laguerre
    /// recurrence coefficients.
    pub fn classical_ab(&self, n: usize) -> (Rational, Rational) {
        let a = self.a(n).limit_at_infinity().expect("a_n bounded at infinity");
        let b = self.b(n).limit_at_infinity().expect("b_n bounded at infinity");
        (a, b)
    }

    /// The multiplier U_n in the differentiation formula
    /// p_n = (U_n d/dx + 1) p_n^alpha: U_n = (alpha+1)_n / (n! t + n (alpha+2)_{n-1}).
    pub fn diff_multiplier(&self, n: usize) -> RatFun1 {
        let num = Poly::constant(pochhammer(&(self.alpha() + &Rational::one()), n));
        let den = if n == 0 {
            Poly::new(vec![Rational::zero(), Rational::one()])
        } else {
            // n * tau_{n-1}
            self.tau(n - 1).scale(&Rational::from(n as i64))
        };
        RatFun1::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn kl0() -> KrallLaguerre {
        KrallLaguerre::new(Rational::from(0)).unwrap()
    }

    #[test]
    fn y0_and_y1_displays() {
        let kl = kl0();
        let t = RatFun1::var();
        let one = RatFun1::one();
        assert_eq!(kl.y(0), one.clone() / (t.clone() + one.clone()));
        // y_1 = t/((t+1)(t+2))
        let y1 = t.clone() / ((t.clone() + one.clone()) * (t + RatFun1::from_int(2)));
        assert_eq!(kl.y(1), y1);
        assert_eq!(kl.y(1).eval(&Rational::from(1)).unwrap(), q(1, 6));
    }

    #[test]
    fn worked_chain_values_at_t1() {
        let kl = kl0();
        let t1 = Rational::from(1);
        assert_eq!(kl.u(1).eval(&t1).unwrap(), q(-1, 4));
        assert_eq!(kl.a(1).eval(&t1).unwrap(), q(3, 4));
        assert_eq!(kl.b(1).eval(&t1).unwrap(), q(17, 6));
        assert_eq!(kl.b(0).eval(&t1).unwrap(), q(1, 2));
    }

    #[test]
    fn matches_symbolic_oracle() {
        for alpha in [Rational::from(0), q(1, 2), q(-1, 2), q(3, 2)] {
            let kl = KrallLaguerre::new(alpha).unwrap();
            let o = Oracle::symbolic1(kl.family(), 4).unwrap();
            for n in 0..=4 {
                assert_eq!(kl.a(n), o.a(n), "a_{n}");
                assert_eq!(kl.b(n), o.b(n), "b_{n}");
                assert_eq!(kl.y(n), super::super::kl_y_from_oracle(&o, n));
                assert_eq!(kl.u(n), super::super::kl_u_from_oracle(&o, n));
            }
        }
    }

    #[test]
    fn asymptotic_leading_coefficient() {
        // y_n ~ (alpha+1)(alpha+1)_n / (n! t)
        let kl = KrallLaguerre::new(q(1, 2)).unwrap();
        for n in 0..=3 {
            let c1 = kl.y(n).expand_at_infinity(1).unwrap()[0].clone();
            let expect = (q(1, 2) + Rational::one())
                * pochhammer(&q(3, 2), n)
                / Rational::factorial(n);
            assert_eq!(c1, expect);
        }
    }

    #[test]
    fn classical_limits() {
        let kl = kl0();
        for n in 1..=4 {
            let (a, b) = kl.classical_ab(n);
            // alpha = 0: a_n -> n^2, b_n -> 2n+1
            assert_eq!(a, Rational::from((n * n) as i64));
            assert_eq!(b, Rational::from(2 * n as i64 + 1));
        }
    }
}
