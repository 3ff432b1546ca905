//! Krall-Gegenbauer closed forms: equal jumps at +-1 with alpha = beta.
//!
//! This is the Koornwinder family on the diagonal t1 = t2 = t, where
//! y_n = z_n =: x_n collapses to a single rational function of t solving an
//! integrable Painlevé V case.  With
//! ttau_m(t) = (alpha+1) t + (2alpha+2)_{m+1}/m! (and ttau_{-1} := (alpha+1) t,
//! the value forced by the reciprocal-Gamma convention in the general
//! solution),
//!
//!   x_0 = 4(alpha+1) / ((2alpha+1)(t+2)),
//!   x_n = 4(alpha+1)^3 (2alpha+2)_{n-1} t / (n! ttau_{n-2} ttau_n),  n >= 1.
//!
//! Here u_n = 0, w_n = -v_n, and
//!
//!   v_n = (gamma_n x_n^2 - (gamma_n+1) x_n - 2t(alpha+1) x_n') / ((gamma_n-1)(x_n-1)),
//!   a_n = (gamma_n-1)^2 v_n (2x_n + v_n (x_n-1)) / (4 gamma_{n-1} gamma_n x_n^2),
//!   b_n = 0,
//!
//! with gamma_n = 2 alpha + 2n + 1.

use crate::field::{Field, Ring};
use crate::measures::Family;
use crate::poly::Poly;
use crate::ratfun::RatFun1;
use crate::rational::{pochhammer, Rational};
use crate::{Error, Result};

use super::Koornwinder;

#[derive(Clone, Debug)]
pub struct Gegenbauer {
    family: Family,
}

fn c(q: Rational) -> RatFun1 {
    RatFun1::from_rational(q)
}

impl Gegenbauer {
    pub fn new(alpha: Rational) -> Result<Self> {
        Ok(Gegenbauer {
            family: Family::krall_gegenbauer(alpha)?,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn alpha(&self) -> &Rational {
        self.family.alpha()
    }

    pub fn gamma(&self, n: usize) -> Rational {
        self.family.gamma(n)
    }

    /// The bivariate parent at alpha = beta; x_n is its y_n on t1 = t2 = t.
    pub fn parent(&self) -> Koornwinder {
        Koornwinder::new(self.alpha().clone(), self.alpha().clone()).expect("valid parameters")
    }

    /// ttau_m = (alpha+1) t + (2alpha+2)_{m+1}/m!, with ttau_{-1} = (alpha+1) t.
    pub fn ttau(&self, m: i64) -> Poly<Rational> {
        let slope = self.alpha() + &Rational::one();
        if m == -1 {
            return Poly::new(vec![Rational::zero(), slope]);
        }
        assert!(m >= 0, "ttau defined for m >= -1");
        let m = m as usize;
        let offset = pochhammer(
            &(Rational::from(2) * self.alpha() + Rational::from(2)),
            m + 1,
        ) / Rational::factorial(m);
        Poly::new(vec![offset, slope])
    }

    /// x_n; the n = 0 display is singular exactly when 2 alpha + 1 = 0.
    pub fn x(&self, n: usize) -> Result<RatFun1> {
        if n == 0 {
            let g0 = self.gamma(0);
            if g0.is_zero() {
                return Err(Error::SingularClosedForm(
                    "Krall-Gegenbauer x_0 at alpha = -1/2".into(),
                ));
            }
            // 4(alpha+1)/((2alpha+1)(t+2))
            let num = Poly::constant(Rational::from(4) * (self.alpha() + &Rational::one()) / g0);
            return Ok(RatFun1::new(
                num,
                Poly::new(vec![Rational::from(2), Rational::one()]),
            ));
        }
        let a1 = self.alpha() + &Rational::one();
        let coeff = Rational::from(4) * a1.pow(3)
            * pochhammer(&(Rational::from(2) * self.alpha() + Rational::from(2)), n - 1)
            / Rational::factorial(n);
        Ok(RatFun1::new(
            Poly::new(vec![Rational::zero(), coeff]),
            self.ttau(n as i64 - 2) * self.ttau(n as i64),
        ))
    }

    /// gamma_n x_n, total (the 2alpha+1 factor cancels at n = 0).
    pub fn gx(&self, n: usize) -> RatFun1 {
        if n == 0 {
            let num = Poly::constant(Rational::from(4) * (self.alpha() + &Rational::one()));
            return RatFun1::new(num, Poly::new(vec![Rational::from(2), Rational::one()]));
        }
        self.x(n).expect("n >= 1 is never singular") * c(self.gamma(n))
    }

    /// v_n for n >= 1 (w_n = -v_n and u_n = 0 for this family).
    pub fn v(&self, n: usize) -> Result<RatFun1> {
        if n == 0 {
            if self.gamma(0) == Rational::one() {
                return Err(Error::SingularClosedForm(
                    "Krall-Gegenbauer v_0 at alpha = 0".into(),
                ));
            }
            return Ok(RatFun1::zero());
        }
        let x = self.x(n)?;
        let dx = x.derivative();
        let t = RatFun1::var();
        let g = self.gamma(n);
        let a1 = self.alpha() + &Rational::one();
        let num = c(g.clone()) * x.clone() * x.clone()
            - c(&g + &Rational::one()) * x.clone()
            - c(&a1 * &Rational::from(2)) * t * dx;
        let den = c(&g - &Rational::one()) * (x - RatFun1::one());
        Ok(num / den)
    }

    /// The product (gamma_n - 1) v_n / 2, total; 0 at n = 0.
    pub fn gv2(&self, n: usize) -> Result<RatFun1> {
        if n == 0 {
            return Ok(RatFun1::zero());
        }
        Ok(self.v(n)? * c((self.gamma(n) - Rational::one()) / Rational::from(2)))
    }

    /// a_n = (gamma_n-1)^2 v_n (2 x_n + v_n (x_n - 1)) / (4 gamma_{n-1} gamma_n x_n^2)
    /// for n >= 1; singular at n = 1 when alpha = -1/2.
    pub fn a(&self, n: usize) -> Result<RatFun1> {
        if n == 0 {
            return Ok(RatFun1::zero());
        }
        let gp = self.gamma(n - 1);
        if gp.is_zero() {
            return Err(Error::SingularClosedForm(
                "Krall-Gegenbauer a_1 display at alpha = -1/2".into(),
            ));
        }
        let g = self.gamma(n);
        let gm1 = &g - &Rational::one();
        let x = self.x(n)?;
        let v = self.v(n)?;
        let num = c(&gm1 * &gm1) * v.clone()
            * (RatFun1::from_int(2) * x.clone() + v * (x.clone() - RatFun1::one()));
        let den = c(&(&gp * &g) * &Rational::from(4)) * x.clone() * x;
        Ok(num / den)
    }

    /// b_n = 0: the measure is even.
    pub fn b(&self, _n: usize) -> RatFun1 {
        RatFun1::zero()
    }

    /// Theta_n = gamma_n (x^2 - 1) + gx_n.
    pub fn theta(&self, n: usize) -> Poly<RatFun1> {
        Poly::new(vec![
            self.gx(n) - c(self.gamma(n)),
            RatFun1::zero(),
            c(self.gamma(n)),
        ])
    }

    /// Omega_n = (gamma_n - 1)/2 (x^2 - 1) x + gv2_n x.
    pub fn omega(&self, n: usize) -> Result<Poly<RatFun1>> {
        let gm1_half = c((self.gamma(n) - Rational::one()) / Rational::from(2));
        Ok(Poly::new(vec![
            RatFun1::zero(),
            self.gv2(n)? - gm1_half.clone(),
            RatFun1::zero(),
            gm1_half,
        ]))
    }

    /// The explicit second-order equation (A2, A1, A0):
    ///
    ///   A2 = (x^2-1)(x^2-1+x_n),
    ///   A1 = 2x ((alpha+1)(x^2-1) + (alpha+2) x_n),
    ///   A0 = -[2(alpha+1)(t x_n'/x_n + 1) + (2(n-1)alpha + n^2 + n - 1) x_n
    ///          + n(2alpha+n+1)(x^2-1)].
    pub fn ode(&self, n: usize) -> Result<[Poly<RatFun1>; 3]> {
        let xn = self.x(n)?;
        let x = Poly::<RatFun1>::var();
        let one = Poly::<RatFun1>::one();
        let x2m1 = x.clone() * x.clone() - one.clone();
        let a2 = x2m1.clone() * (x2m1.clone() + Poly::constant(xn.clone()));
        let a1 = x
            .scale(&RatFun1::from_int(2))
            * (x2m1.clone().scale(&c(self.alpha() + &Rational::one()))
                + Poly::constant(xn.clone() * c(self.alpha() + &Rational::from(2))));
        let t = RatFun1::var();
        let nn = n as i64;
        let lin = Rational::from(2 * (nn - 1)) * self.alpha()
            + Rational::from(nn * nn + nn - 1);
        let scalar = c(Rational::from(2) * (self.alpha() + &Rational::one()))
            * (t * xn.derivative() / xn.clone() + RatFun1::one())
            + c(lin) * xn;
        let a0 = -(x2m1.scale(&c(Rational::from(nn) * self.gamma(n))) + Poly::constant(scalar));
        Ok([a2, a1, a0])
    }

    /// t -> infinity limits of (a_n, b_n): the monic Gegenbauer coefficients.
    pub fn classical_ab(&self, n: usize) -> Result<(Rational, Rational)> {
        let a = self
            .a(n)?
            .limit_at_infinity()
            .expect("a_n bounded at infinity");
        Ok((a, Rational::zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn x_displays_at_alpha_zero() {
        let kg = Gegenbauer::new(Rational::from(0)).unwrap();
        let t = RatFun1::var();
        // x_0 = 4/(t+2), x_1 = 4/(t+6), x_2 = 4t/((t+2)(t+12))
        assert_eq!(
            kg.x(0).unwrap(),
            RatFun1::from_int(4) / (t.clone() + RatFun1::from_int(2))
        );
        assert_eq!(kg.x(0).unwrap().eval(&Rational::from(2)).unwrap(), Rational::one());
        assert_eq!(
            kg.x(1).unwrap(),
            RatFun1::from_int(4) / (t.clone() + RatFun1::from_int(6))
        );
        assert_eq!(
            kg.x(2).unwrap(),
            RatFun1::from_int(4) * t.clone()
                / ((t.clone() + RatFun1::from_int(2)) * (t + RatFun1::from_int(12)))
        );
    }

    #[test]
    fn x_is_koornwinder_diagonal() {
        for alpha in [Rational::from(0), q(1, 2), q(3, 2)] {
            let kg = Gegenbauer::new(alpha).unwrap();
            let parent = kg.parent();
            for n in 0..=3 {
                assert_eq!(
                    kg.x(n).unwrap(),
                    parent.y(n).unwrap().diagonal().unwrap(),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn matches_symbolic_oracle() {
        for alpha in [Rational::from(0), q(1, 2), q(-1, 2)] {
            let kg = Gegenbauer::new(alpha.clone()).unwrap();
            let o = Oracle::symbolic1(kg.family(), 3).unwrap();
            for n in 0..=3 {
                if !(n == 1 && kg.gamma(0).is_zero()) {
                    assert_eq!(kg.a(n).unwrap(), o.a(n), "a_{n} at alpha = {alpha}");
                }
                assert!(o.b(n).is_zero());
            }
        }
    }

    #[test]
    fn singular_alpha_flagged() {
        let kg = Gegenbauer::new(q(-1, 2)).unwrap();
        assert!(kg.x(0).is_err());
        assert!(kg.a(1).is_err());
        // gx_0 still exists: 4(alpha+1)/(t+2) = 2/(t+2)
        let t = RatFun1::var();
        assert_eq!(kg.gx(0), RatFun1::from_int(2) / (t + RatFun1::from_int(2)));
    }

    #[test]
    fn classical_limit_legendre() {
        // alpha = 0 (Legendre): a_1 -> 1/3
        let kg = Gegenbauer::new(Rational::from(0)).unwrap();
        let (a1, b1) = kg.classical_ab(1).unwrap();
        assert_eq!(a1, q(1, 3));
        assert!(b1.is_zero());
    }
}
