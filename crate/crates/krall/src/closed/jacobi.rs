//! Krall-Jacobi closed forms: the rational Painlevé V data.
//!
//! With gamma_n = alpha + beta + 2n + 1 and
//! tau_n(t) = n! (alpha+1)_n t + (alpha+beta+2)_n (beta+2)_n,
//!
//!   y_0 = (beta+1) / ((alpha+beta+1)(t+1)),
//!   y_n = (n-1)! (beta+1) (alpha+1)_{n-1} (beta+1)_n (alpha+beta+2)_{n-1} t
//!         / (tau_{n-1} tau_n),   n >= 1.
//!
//! The auxiliary functions u_n, v_n carry 1/(gamma_n - 1) factors, so the
//! stored primaries are the products ju_n = (1-gamma_n) u_n / 2 and
//! jv_n = (1-gamma_n) v_n / 2 (the actual Omega_n coefficients), which stay
//! finite at gamma_0 = 1.  The display for y_0 is genuinely singular at
//! alpha + beta + 1 = 0; such parameters are flagged, and the product
//! gamma_0 y_0 = (beta+1)/(t+1) is offered instead.

use crate::field::{Field, Ring};
use crate::measures::Family;
use crate::poly::Poly;
use crate::ratfun::RatFun1;
use crate::rational::{pochhammer, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct KrallJacobi {
    family: Family,
}

fn c(q: Rational) -> RatFun1 {
    RatFun1::from_rational(q)
}

impl KrallJacobi {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        Ok(KrallJacobi {
            family: Family::krall_jacobi(alpha, beta)?,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    fn alpha(&self) -> &Rational {
        self.family.alpha()
    }

    fn beta(&self) -> &Rational {
        self.family.beta().unwrap()
    }

    pub fn gamma(&self, n: usize) -> Rational {
        self.family.gamma(n)
    }

    /// tau_n(t) = n! (alpha+1)_n t + (alpha+beta+2)_n (beta+2)_n.
    pub fn tau(&self, n: usize) -> Poly<Rational> {
        let slope = Rational::factorial(n) * pochhammer(&(self.alpha() + &Rational::one()), n);
        let offset = pochhammer(&(self.alpha() + self.beta() + &Rational::from(2)), n)
            * pochhammer(&(self.beta() + &Rational::from(2)), n);
        Poly::new(vec![offset, slope])
    }

    /// y_n; at n = 0 the display needs gamma_0 = alpha + beta + 1 != 0.
    pub fn y(&self, n: usize) -> Result<RatFun1> {
        if n == 0 {
            let g0 = self.gamma(0);
            if g0.is_zero() {
                return Err(Error::SingularClosedForm(
                    "Krall-Jacobi y_0 at alpha + beta + 1 = 0".into(),
                ));
            }
            return Ok(self.gy(0) * c(g0.inv()));
        }
        Ok(self.gy(n) * c(self.gamma(n).inv()))
    }

    /// The product gamma_n y_n, total in the parameters.
    pub fn gy(&self, n: usize) -> RatFun1 {
        if n == 0 {
            // gamma_0 y_0 = (beta+1)/(t+1)
            return RatFun1::new(
                Poly::constant(self.beta() + &Rational::one()),
                Poly::new(vec![Rational::one(), Rational::one()]),
            );
        }
        let coeff = Rational::factorial(n - 1)
            * (self.beta() + &Rational::one())
            * pochhammer(&(self.alpha() + &Rational::one()), n - 1)
            * pochhammer(&(self.beta() + &Rational::one()), n)
            * pochhammer(&(self.alpha() + self.beta() + &Rational::from(2)), n - 1)
            * self.gamma(n);
        RatFun1::new(
            Poly::new(vec![Rational::zero(), coeff]),
            self.tau(n - 1) * self.tau(n),
        )
    }

    /// ju_n = (1 - gamma_n) u_n / 2; at n = 0 this is 0.
    ///
    /// For n >= 1 (where gamma_n - 1 = alpha + beta + 2n > 0):
    /// u_n = [alpha^2 y_n^2 - (t(beta+1) y_n' + gamma_n y_n (1-y_n))^2]
    ///       / [2 (gamma_n-1)^2 y_n (y_n - 1)].
    pub fn ju(&self, n: usize) -> RatFun1 {
        if n == 0 {
            return RatFun1::zero();
        }
        let g = self.gamma(n);
        self.u_unchecked(n) * c((Rational::one() - g) / Rational::from(2))
    }

    /// jv_n = (1 - gamma_n) v_n / 2; at n = 0 this is beta/2.
    pub fn jv(&self, n: usize) -> RatFun1 {
        if n == 0 {
            return c(self.beta() / &Rational::from(2));
        }
        let g = self.gamma(n);
        self.v_unchecked(n) * c((Rational::one() - g) / Rational::from(2))
    }

    /// u_n itself; `None` when gamma_n = 1 (only possible at n = 0).
    pub fn u(&self, n: usize) -> Option<RatFun1> {
        let g = self.gamma(n);
        if g == Rational::one() {
            return None;
        }
        if n == 0 {
            return Some(RatFun1::zero());
        }
        Some(self.u_unchecked(n))
    }

    /// v_n itself; `None` when gamma_n = 1.
    pub fn v(&self, n: usize) -> Option<RatFun1> {
        let g = self.gamma(n);
        if g == Rational::one() {
            return None;
        }
        if n == 0 {
            // 2 jv_0 / (1 - gamma_0) = beta / (1 - gamma_0)
            return Some(c(self.beta() / &(Rational::one() - g)));
        }
        Some(self.v_unchecked(n))
    }

    // (KJuy) for n >= 1
    fn u_unchecked(&self, n: usize) -> RatFun1 {
        let y = self.y(n).expect("n >= 1 is never singular");
        let dy = y.derivative();
        let t = RatFun1::var();
        let g = self.gamma(n);
        let gm1 = &g - &Rational::one();
        let alpha2 = self.alpha() * self.alpha();
        let beta1 = self.beta() + &Rational::one();
        let inner = t * c(beta1) * dy + c(g) * y.clone() * (RatFun1::one() - y.clone());
        let num = c(alpha2) * y.clone() * y.clone() - inner.clone() * inner;
        let den = c(&gm1 * &gm1 * Rational::from(2)) * y.clone() * (y - RatFun1::one());
        num / den
    }

    // (KJvy) for n >= 1
    fn v_unchecked(&self, n: usize) -> RatFun1 {
        let y = self.y(n).expect("n >= 1 is never singular");
        let dy = y.derivative();
        let t = RatFun1::var();
        let g = self.gamma(n);
        let gm1 = &g - &Rational::one();
        let gm1_sq = &gm1 * &gm1;
        let beta1 = self.beta() + &Rational::one();
        let alpha2 = self.alpha() * self.alpha();
        let one = RatFun1::one();
        let tdy = t * c(beta1.clone()) * dy;
        let term1 = -tdy.clone() / (c(gm1_sq.clone()) * y.clone());
        let term2 = -(tdy.clone() * tdy)
            / (c(&gm1_sq * &Rational::from(2)) * y.clone() * y.clone() * (one.clone() - y.clone()));
        let term3 = c(alpha2 / (&gm1_sq * &Rational::from(2))) / (one.clone() - y.clone());
        let poly_part = &g * &(&g - &Rational::from(2));
        let term4 = -(c(poly_part) * (y + one) + RatFun1::from_int(2))
            / c(&gm1_sq * &Rational::from(2));
        term1 + term2 + term3 + term4
    }

    /// a_n per the closed form; singular at n = 1 when gamma_0 = 0.
    ///
    /// a_n = -(gamma_n - 1)^2 u_n (2 v_n y_n + u_n) / (4 gamma_{n-1} gamma_n y_n^2).
    pub fn a(&self, n: usize) -> Result<RatFun1> {
        if n == 0 {
            return Ok(RatFun1::zero());
        }
        let gp = self.gamma(n - 1);
        if gp.is_zero() {
            return Err(Error::SingularClosedForm(
                "Krall-Jacobi a_1 display at alpha + beta + 1 = 0".into(),
            ));
        }
        let g = self.gamma(n);
        let gm1 = &g - &Rational::one();
        let y = self.y(n)?;
        let u = self.u_unchecked(n);
        let v = self.v_unchecked(n);
        let num = -c(&gm1 * &gm1) * u.clone() * (RatFun1::from_int(2) * v * y.clone() + u);
        let den = c(&(&gp * &g) * &Rational::from(4)) * y.clone() * y;
        Ok(num / den)
    }

    /// b_n = ((1 - gamma_n) v_n + 1 - gamma_n y_n) / (gamma_n + 1), total
    /// via the products: (2 jv_n + 1 - gy_n) / (gamma_n + 1).
    pub fn b(&self, n: usize) -> RatFun1 {
        let g1 = self.gamma(n) + Rational::one();
        (self.jv(n) * RatFun1::from_int(2) + RatFun1::one() - self.gy(n)) * c(g1.inv())
    }

    /// Theta_n = -gamma_n (x - y_n) = -gamma_n x + gy_n.
    pub fn theta(&self, n: usize) -> Poly<RatFun1> {
        Poly::new(vec![self.gy(n), c(-self.gamma(n))])
    }

    /// Omega_n = (1-gamma_n)/2 x^2 + jv_n x + ju_n.
    pub fn omega(&self, n: usize) -> Poly<RatFun1> {
        let lead = (Rational::one() - self.gamma(n)) / Rational::from(2);
        Poly::new(vec![self.ju(n), self.jv(n), c(lead)])
    }

    /// The explicit second-order equation (A2, A1, A0):
    ///
    ///   A2 = x (x-1) (x - y_n),
    ///   A1 = (beta+2)(x-1)(x-y_n) + (alpha+1) x (x-y_n) - x (x-1),
    ///   A0 = [(beta+1)(t y_n'/y_n + 1) + ((2n-1)(alpha+beta+1) + 2n^2) y_n
    ///         - 2n (alpha+beta+n+1) x] / 2.
    pub fn ode(&self, n: usize) -> Result<[Poly<RatFun1>; 3]> {
        let y = self.y(n)?;
        let x = Poly::<RatFun1>::var();
        let one = Poly::<RatFun1>::one();
        let yc = Poly::constant(y.clone());
        let a2 = x.clone() * (x.clone() - one.clone()) * (x.clone() - yc.clone());
        let a1 = (x.clone() - one.clone()) * (x.clone() - yc.clone())
            .scale(&c(self.beta() + &Rational::from(2)))
            + x.clone() * (x.clone() - yc).scale(&c(self.alpha() + &Rational::one()))
            - x.clone() * (x.clone() - one);
        let t = RatFun1::var();
        let nn = n as i64;
        let abn = self.alpha() + self.beta();
        let lin = (&abn + &Rational::one()) * Rational::from(2 * nn - 1)
            + Rational::from(2 * nn * nn);
        let const_term = (c(self.beta() + &Rational::one())
            * (t * y.derivative() / y.clone() + RatFun1::one())
            + c(lin) * y)
            * c(Rational::new(1, 2));
        let xcoeff = -(&abn + &Rational::from(nn + 1)) * Rational::from(nn);
        let a0 = Poly::new(vec![const_term, c(xcoeff)]);
        Ok([a2, a1, a0])
    }

    /// t -> infinity limits of (a_n, b_n): the monic [0,1] Jacobi
    /// coefficients.  `None` components cannot occur for valid parameters.
    pub fn classical_ab(&self, n: usize) -> Result<(Rational, Rational)> {
        let a = self
            .a(n)?
            .limit_at_infinity()
            .expect("a_n bounded at infinity");
        let b = self.b(n).limit_at_infinity().expect("b_n bounded at infinity");
        Ok((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn kj00() -> KrallJacobi {
        KrallJacobi::new(Rational::from(0), Rational::from(0)).unwrap()
    }

    #[test]
    fn y0_display() {
        // alpha = beta = 0: y_0 = 1/(t+1), so y_0(1) = 1/2 and b_0(1) = 1/4
        let kj = kj00();
        let t = RatFun1::var();
        assert_eq!(kj.y(0).unwrap(), RatFun1::one() / (t + RatFun1::one()));
        assert_eq!(kj.y(0).unwrap().eval(&Rational::from(1)).unwrap(), q(1, 2));
        assert_eq!(kj.b(0).eval(&Rational::from(1)).unwrap(), q(1, 4));
    }

    #[test]
    fn y1_display() {
        // alpha = beta = 0: tau_0 = t+1, tau_1 = t+4, y_1 = t/((t+1)(t+4))
        let kj = kj00();
        let t = RatFun1::var();
        let y1 = t.clone() / ((t.clone() + RatFun1::one()) * (t + RatFun1::from_int(4)));
        assert_eq!(kj.y(1).unwrap(), y1);
    }

    #[test]
    fn matches_symbolic_oracle() {
        let grid = [
            (Rational::from(0), Rational::from(0)),
            (q(1, 2), Rational::from(0)),
            (q(-1, 2), q(3, 2)),
            (q(1, 2), q(-1, 2)),
        ];
        for (alpha, beta) in grid {
            let kj = KrallJacobi::new(alpha, beta).unwrap();
            let o = Oracle::symbolic1(kj.family(), 3).unwrap();
            for n in 0..=3 {
                assert_eq!(kj.a(n).unwrap(), o.a(n), "a_{n}");
                assert_eq!(kj.b(n), o.b(n), "b_{n}");
                assert_eq!(kj.gy(n), super::super::kj_gy_from_oracle(&o, n), "gy_{n}");
                assert_eq!(kj.ju(n), super::super::kj_ju_from_oracle(&o, n), "ju_{n}");
                assert_eq!(kj.jv(n), super::super::kj_jv_from_oracle(&o, n), "jv_{n}");
            }
        }
    }

    #[test]
    fn singular_pair_is_flagged() {
        // alpha + beta + 1 = 0 with both exponents > -1
        let kj = KrallJacobi::new(q(-1, 2), q(-1, 2)).unwrap();
        assert!(kj.y(0).is_err());
        assert!(kj.a(1).is_err());
        // the product form and b_0 still exist and match the oracle
        let o = Oracle::symbolic1(kj.family(), 2).unwrap();
        assert_eq!(kj.b(0), o.b(0));
        assert_eq!(kj.b(1), o.b(1));
        assert_eq!(kj.a(2).unwrap(), o.a(2));
        assert_eq!(kj.gy(0), super::super::kj_gy_from_oracle(&o, 0));
    }

    #[test]
    fn asymptotic_coefficient() {
        // y_n ~ (beta+1)(beta+1)_n (alpha+beta+2)_{n-1} / (n! (alpha+1)_n t)
        use crate::rational::pochhammer_i;
        let alpha = q(1, 2);
        let beta = q(3, 2);
        let kj = KrallJacobi::new(alpha.clone(), beta.clone()).unwrap();
        for n in 0..=3 {
            let c1 = kj.y(n).unwrap().expand_at_infinity(1).unwrap()[0].clone();
            let expect = (&beta + &Rational::one())
                * pochhammer(&(&beta + &Rational::one()), n)
                * pochhammer_i(&(&alpha + &beta + &Rational::from(2)), n as i64 - 1)
                / (Rational::factorial(n) * pochhammer(&(&alpha + &Rational::one()), n));
            assert_eq!(c1, expect, "n = {n}");
        }
    }
}
