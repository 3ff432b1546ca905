//! Koornwinder closed forms: rational solutions of the Schlesinger-type PDE
//! system in the two jump parameters.
//!
//! With k1 = n!(beta+1)(alpha+1)_n / ((beta+1)_n (alpha+beta+2)_n) and k2 its
//! alpha <-> beta swap,
//!
//!   sigma_n = n^2(n-1) + n(beta+n) k1 t1 + n(alpha+n) k2 t2
//!             + (alpha+beta+n+1) k1 k2 t1 t2,
//!   tau_n   = k1 k2 t1 t2 + (alpha+n+1) k1 t1 + (beta+n+1) k2 t2
//!             + n(alpha+beta+n+2),
//!
//!   y_n = 4 (alpha+1)^2 k2 t2 (k1 t1 + n)^2 / (sigma_n tau_n),
//!   z_n(t1, t2, alpha, beta) = y_n(t2, t1, beta, alpha).
//!
//! The auxiliary functions u_n, v_n, w_n are recovered from y_n, z_n and
//! their t1-derivatives; all displays dividing by gamma_n - 1 are total for
//! n >= 1, and at n = 0 the products (gamma_0 - 1) u_0 = alpha - beta and
//! (gamma_0 - 1) v_0 / 2 = (gamma_0 - 1) w_0 / 2 = 0 are used instead.

use crate::bipoly::BiPoly;
use crate::field::{Field, Ring, Var};
use crate::measures::Family;
use crate::poly::Poly;
use crate::ratfun2::RatFun2;
use crate::rational::{pochhammer, pochhammer_i, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Koornwinder {
    family: Family,
}

fn c(q: Rational) -> RatFun2 {
    RatFun2::from_rational(q)
}

impl Koornwinder {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        Ok(Koornwinder {
            family: Family::koornwinder(alpha, beta)?,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn alpha(&self) -> &Rational {
        self.family.alpha()
    }

    pub fn beta(&self) -> &Rational {
        self.family.beta().unwrap()
    }

    pub fn gamma(&self, n: usize) -> Rational {
        self.family.gamma(n)
    }

    fn swapped(&self) -> Koornwinder {
        Koornwinder::new(self.beta().clone(), self.alpha().clone()).expect("valid parameters")
    }

    pub fn k1(&self, n: usize) -> Rational {
        let a1 = self.alpha() + &Rational::one();
        let b1 = self.beta() + &Rational::one();
        Rational::factorial(n) * &b1 * pochhammer(&a1, n)
            / (pochhammer(&b1, n) * pochhammer(&(self.alpha() + self.beta() + &Rational::from(2)), n))
    }

    pub fn k2(&self, n: usize) -> Rational {
        self.swapped().k1(n)
    }

    pub fn sigma(&self, n: usize) -> BiPoly {
        let nn = n as i64;
        let k1 = self.k1(n);
        let k2 = self.k2(n);
        let nq = Rational::from(nn);
        BiPoly::from_terms(&[
            (0, 0, &nq * &nq * (&nq - &Rational::one())),
            (1, 0, &nq * &(self.beta() + &nq) * &k1),
            (0, 1, &nq * &(self.alpha() + &nq) * &k2),
            (
                1,
                1,
                (self.alpha() + self.beta() + &nq + &Rational::one()) * &k1 * &k2,
            ),
        ])
    }

    pub fn tau(&self, n: usize) -> BiPoly {
        let nn = n as i64;
        let k1 = self.k1(n);
        let k2 = self.k2(n);
        let nq = Rational::from(nn);
        BiPoly::from_terms(&[
            (1, 1, &k1 * &k2),
            (1, 0, (self.alpha() + &nq + &Rational::one()) * &k1),
            (0, 1, (self.beta() + &nq + &Rational::one()) * &k2),
            (
                0,
                0,
                &nq * &(self.alpha() + self.beta() + &nq + &Rational::from(2)),
            ),
        ])
    }

    /// y_n; the n = 0 display is singular exactly when gamma_0 = 0.
    pub fn y(&self, n: usize) -> Result<RatFun2> {
        if n == 0 && self.gamma(0).is_zero() {
            return Err(Error::SingularClosedForm(
                "Koornwinder y_0 at alpha + beta + 1 = 0".into(),
            ));
        }
        let k1 = self.k1(n);
        let k2 = self.k2(n);
        let a1 = self.alpha() + &Rational::one();
        let lin = BiPoly::from_terms(&[(1, 0, k1), (0, 0, Rational::from(n as i64))]);
        let num = BiPoly::from_terms(&[(0, 1, &a1 * &a1 * &k2 * &Rational::from(4))])
            * lin.clone()
            * lin;
        Ok(RatFun2::new(num, self.sigma(n) * self.tau(n)))
    }

    /// z_n(t1, t2, alpha, beta) = y_n(t2, t1, beta, alpha).
    pub fn z(&self, n: usize) -> Result<RatFun2> {
        Ok(self.swapped().y(n)?.swap_vars())
    }

    /// gamma_n y_n, total in the parameters (the gamma_0 factor in sigma_0
    /// cancels, leaving gamma_0 y_0 = 4 (alpha+1) t1 / (t1 t2 + t1 + t2)).
    pub fn gy(&self, n: usize) -> RatFun2 {
        if n == 0 {
            let num = BiPoly::from_terms(&[(1, 0, (self.alpha() + &Rational::one()) * &Rational::from(4))]);
            let den = BiPoly::from_terms(&[
                (1, 1, Rational::one()),
                (1, 0, Rational::one()),
                (0, 1, Rational::one()),
            ]);
            return RatFun2::new(num, den);
        }
        self.y(n).expect("n >= 1 is never singular") * c(self.gamma(n))
    }

    pub fn gz(&self, n: usize) -> RatFun2 {
        self.swapped().gy(n).swap_vars()
    }

    /// u_n for n >= 1, from y_n, z_n and their t1-derivatives:
    ///
    ///   u_n = gamma(gamma-2)(y-z)/(4(gamma-1)^2) - 1/(gamma-1)^2
    ///       + 2 t1 (beta+1)(y' - z')/((gamma-1)^2 z)
    ///       + 8 t1^2 (beta+1)^2 y' z' / ((gamma-1)^2 y z^2)
    ///       - 4 t1^2 (beta+1)^2 (y+z-4) y'^2 / ((gamma-1)^2 y^2 z^2),
    ///
    /// with ' = d/dt1.  At n = 0 defined only when gamma_0 != 1, where
    /// u_0 = (alpha - beta)/(gamma_0 - 1).
    pub fn u(&self, n: usize) -> Result<RatFun2> {
        let g = self.gamma(n);
        if n == 0 {
            if g == Rational::one() {
                return Err(Error::SingularClosedForm(
                    "Koornwinder u_0 at alpha + beta = 0".into(),
                ));
            }
            return Ok(c((self.alpha() - self.beta()) / (&g - &Rational::one())));
        }
        let y = self.y(n)?;
        let z = self.z(n)?;
        let dy = y.deriv(Var::T1);
        let dz = z.deriv(Var::T1);
        let t1 = RatFun2::var1();
        let b1 = self.beta() + &Rational::one();
        let gm1sq = (&g - &Rational::one()).pow(2);
        let four = RatFun2::from_int(4);
        let term1 = c(&g * &(&g - &Rational::from(2)) / (&gm1sq * &Rational::from(4)))
            * (y.clone() - z.clone());
        let term2 = -c(gm1sq.clone().inv());
        let term3 = c(&b1 * &Rational::from(2) / &gm1sq) * t1.clone() * (dy.clone() - dz.clone())
            / z.clone();
        let term4 = c(&(&b1 * &b1) * &(Rational::from(8) / &gm1sq))
            * t1.clone()
            * t1.clone()
            * dy.clone()
            * dz
            / (y.clone() * z.clone() * z.clone());
        let term5 = -c(&(&b1 * &b1) * &(Rational::from(4) / &gm1sq))
            * t1.clone()
            * t1
            * (y.clone() + z.clone() - four)
            * dy.clone()
            * dy
            / (y.clone() * y * z.clone() * z);
        Ok(term1 + term2 + term3 + term4 + term5)
    }

    /// v_n for n >= 1:
    ///
    ///   v_n = (4 t1 (beta+1) y' - gamma y z) / (4 (gamma-1)^2 y z^2)
    ///         * { -4 t1 (beta+1)(y+z-4) y' + 8 t1 (beta+1) y z'
    ///             + y z (gamma (y-z) - 4(gamma-2)) }.
    ///
    /// At n = 0 defined only when gamma_0 != 1, where v_0 = 0.
    pub fn v(&self, n: usize) -> Result<RatFun2> {
        let g = self.gamma(n);
        if n == 0 {
            if g == Rational::one() {
                return Err(Error::SingularClosedForm(
                    "Koornwinder v_0 at alpha + beta = 0".into(),
                ));
            }
            return Ok(RatFun2::zero());
        }
        let y = self.y(n)?;
        let z = self.z(n)?;
        let pre_num = self.vw_prefactor(n, &y, &z)?;
        let brace = self.vw_brace_common(n, &y, &z)?
            + y.clone() * z.clone() * (c(g.clone()) * (y.clone() - z.clone())
                - c((&g - &Rational::from(2)) * Rational::from(4)));
        let gm1sq = (&g - &Rational::one()).pow(2);
        Ok(pre_num * brace / (c(&gm1sq * &Rational::from(4)) * y * z.clone() * z))
    }

    /// w_n for n >= 1:
    ///
    ///   w_n = (4 t1 (beta+1) y' - gamma y z) / (4 (gamma-1)^2 y^2 z)
    ///         * { -4 t1 (beta+1)(y+z-4) y' + 8 t1 (beta+1) y z'
    ///             + gamma y z (y - z + 4) }.
    ///
    /// At n = 0 defined only when gamma_0 != 1, where w_0 = 0.
    pub fn w(&self, n: usize) -> Result<RatFun2> {
        let g = self.gamma(n);
        if n == 0 {
            if g == Rational::one() {
                return Err(Error::SingularClosedForm(
                    "Koornwinder w_0 at alpha + beta = 0".into(),
                ));
            }
            return Ok(RatFun2::zero());
        }
        let y = self.y(n)?;
        let z = self.z(n)?;
        let pre_num = self.vw_prefactor(n, &y, &z)?;
        let brace = self.vw_brace_common(n, &y, &z)?
            + c(g.clone()) * y.clone() * z.clone()
                * (y.clone() - z.clone() + RatFun2::from_int(4));
        let gm1sq = (&g - &Rational::one()).pow(2);
        Ok(pre_num * brace / (c(&gm1sq * &Rational::from(4)) * y.clone() * y * z))
    }

    // 4 t1 (beta+1) dy/dt1 - gamma y z, shared by v_n and w_n
    fn vw_prefactor(&self, n: usize, y: &RatFun2, z: &RatFun2) -> Result<RatFun2> {
        let t1 = RatFun2::var1();
        let b1 = self.beta() + &Rational::one();
        Ok(c(&b1 * &Rational::from(4)) * t1 * y.deriv(Var::T1)
            - c(self.gamma(n)) * y.clone() * z.clone())
    }

    // -4 t1 (beta+1)(y+z-4) dy + 8 t1 (beta+1) y dz, shared by v_n and w_n
    fn vw_brace_common(&self, _n: usize, y: &RatFun2, z: &RatFun2) -> Result<RatFun2> {
        let t1 = RatFun2::var1();
        let b1 = self.beta() + &Rational::one();
        Ok(
            -c(&b1 * &Rational::from(4)) * t1.clone() * (y.clone() + z.clone() - RatFun2::from_int(4))
                * y.deriv(Var::T1)
                + c(&b1 * &Rational::from(8)) * t1 * y.clone() * z.deriv(Var::T1),
        )
    }

    /// The product (gamma_n - 1) u_n, total; alpha - beta at n = 0.
    pub fn gu(&self, n: usize) -> Result<RatFun2> {
        if n == 0 {
            return Ok(c(self.alpha() - self.beta()));
        }
        Ok(self.u(n)? * c(self.gamma(n) - Rational::one()))
    }

    /// The product (gamma_n - 1) v_n / 2, total; 0 at n = 0.
    pub fn gv2(&self, n: usize) -> Result<RatFun2> {
        if n == 0 {
            return Ok(RatFun2::zero());
        }
        Ok(self.v(n)? * c((self.gamma(n) - Rational::one()) / Rational::from(2)))
    }

    /// The product (gamma_n - 1) w_n / 2, total; 0 at n = 0.
    pub fn gw2(&self, n: usize) -> Result<RatFun2> {
        if n == 0 {
            return Ok(RatFun2::zero());
        }
        Ok(self.w(n)? * c((self.gamma(n) - Rational::one()) / Rational::from(2)))
    }

    /// a_n for n >= 1 (a_0 = 0):
    ///
    ///   a_n = -(gamma_n - 1)^2 / (gamma_{n-1} gamma_n)
    ///         * { (w-v)(vz - wy)/(16 y z) + v w (1/(vz - wy) - 1/(4 y z)) };
    ///
    /// singular at n = 1 when gamma_0 = 0.
    pub fn a(&self, n: usize) -> Result<RatFun2> {
        if n == 0 {
            return Ok(RatFun2::zero());
        }
        let gp = self.gamma(n - 1);
        if gp.is_zero() {
            return Err(Error::SingularClosedForm(
                "Koornwinder a_1 display at alpha + beta + 1 = 0".into(),
            ));
        }
        let g = self.gamma(n);
        let y = self.y(n)?;
        let z = self.z(n)?;
        let v = self.v(n)?;
        let w = self.w(n)?;
        let vz_wy = v.clone() * z.clone() - w.clone() * y.clone();
        let yz4 = (y.clone() * z.clone()) * RatFun2::from_int(4);
        let inner = (w.clone() - v.clone()) * vz_wy.clone() / (yz4.clone() * RatFun2::from_int(4))
            + v * w * (vz_wy.inv() - yz4.inv());
        let gm1 = &g - &Rational::one();
        Ok(inner * c(-(&gm1 * &gm1) / &(&gp * &g)))
    }

    /// b_n = ((gamma_{n+1} - 1) u_{n+1} - (gamma_n - 1) u_n) / 2, total.
    pub fn b(&self, n: usize) -> Result<RatFun2> {
        Ok((self.gu(n + 1)? - self.gu(n)?) * c(Rational::new(1, 2)))
    }

    /// Theta_n = gamma_n (x^2 - 1) + gy_n (1+x)/2 + gz_n (1-x)/2.
    pub fn theta(&self, n: usize) -> Poly<RatFun2> {
        let gy = self.gy(n);
        let gz = self.gz(n);
        let half = c(Rational::new(1, 2));
        Poly::new(vec![
            (gy.clone() + gz.clone()) * half.clone() - c(self.gamma(n)),
            (gy - gz) * half,
            c(self.gamma(n)),
        ])
    }

    /// Omega_n = (gamma_n-1)/2 (x^2-1)(x + u_n) + gv2_n (1+x)/2 + gw2_n (1-x)/2,
    /// assembled from the total products.
    pub fn omega(&self, n: usize) -> Result<Poly<RatFun2>> {
        let gu = self.gu(n)?;
        let gv2 = self.gv2(n)?;
        let gw2 = self.gw2(n)?;
        let gm1_half = c((self.gamma(n) - Rational::one()) / Rational::from(2));
        let half = c(Rational::new(1, 2));
        Ok(Poly::new(vec![
            -gu.clone() * half.clone() + (gv2.clone() + gw2.clone()) * half.clone(),
            -gm1_half.clone() + (gv2 - gw2) * half.clone(),
            gu * half,
            gm1_half,
        ]))
    }

    /// The explicit second-order equation (A2, A1, A0) of the Koornwinder
    /// polynomials; singular together with y_0/z_0.
    pub fn ode(&self, n: usize) -> Result<[Poly<RatFun2>; 3]> {
        let y = self.y(n)?;
        let z = self.z(n)?;
        let t1 = RatFun2::var1();
        let tdlz = t1.clone() * z.deriv(Var::T1) / z.clone();
        let s = t1 * y.deriv(Var::T1) / (z.clone() * y.clone());
        let alpha = self.alpha().clone();
        let beta = self.beta().clone();
        let ab = &alpha + &beta;
        let nn = n as i64;
        let nq = Rational::from(nn);

        let x = Poly::<RatFun2>::var();
        let one = Poly::<RatFun2>::one();
        let x2m1 = x.clone() * x.clone() - one.clone();
        let half = c(Rational::new(1, 2));
        let yc = Poly::constant(y.clone());
        let zc = Poly::constant(z.clone());
        let half_1px = (one.clone() + x.clone()).scale(&half);
        let half_1mx = (one.clone() - x.clone()).scale(&half);

        let a2 = x2m1.clone()
            * (x2m1.clone() + half_1px.clone() * yc.clone() + half_1mx.clone() * zc.clone());

        let lin = |slope: Rational, offset: Rational| {
            Poly::new(vec![c(offset), c(slope)])
        };
        let a1 = x2m1.clone() * lin(&ab + &Rational::from(2), &alpha - &beta)
            + half_1px.clone() * lin(&ab + &Rational::from(3), &alpha - &beta + &Rational::one()) * yc.clone()
            + half_1mx.clone() * lin(&ab + &Rational::from(3), &alpha - &beta - &Rational::one()) * zc.clone();

        // the coefficient of g_n, as -{ ... } per the display
        let nab = &nq * &(&ab + &nq + &Rational::one());
        let term1 = x2m1.scale(&c(nab.clone()));
        let term2 = (x.clone().scale(&c(Rational::from(4)))
            + Poly::constant(y.clone() - z.clone()))
        .scale(&(c(&beta + &Rational::one()) * (tdlz + RatFun2::one()) * c(Rational::new(-1, 2))));
        let term3_scalar = (s - c((&ab + &Rational::one()) / (&(&beta + &Rational::one()) * &Rational::from(4))))
            * c((&beta + &Rational::one()) / &Rational::from(2));
        let term3 = ((x.clone() + one.clone())
            .scale(&((y.clone() + z.clone() - RatFun2::from_int(4)) * RatFun2::from_int(2)))
            + Poly::constant(z.clone() * (y.clone() - z.clone() + RatFun2::from_int(4))))
        .scale(&term3_scalar);
        let term4 = half_1px.scale(
            &(c(nab) * y.clone()
                - c(&(&nq - &Rational::one()) * &ab + &(&nq * &nq) + &nq - &Rational::one()) * z.clone()),
        );
        let term5_scalar = z.clone()
            * ((y - z) * c(&ab + &Rational::one())
                + c(((&ab * &(&nq * &Rational::from(2) - &Rational::one()))
                    + &(&nq * &nq) * &Rational::from(2)
                    + &nq * &Rational::from(2)
                    - &Rational::one())
                    * Rational::from(4)))
            * c(Rational::new(1, 8));
        let term5 = Poly::constant(term5_scalar);
        let a0 = -(term1 + term2 + term3 + term4 + term5);
        Ok([a2, a1, a0])
    }

    /// (t1, t2) -> (infinity, infinity) limits of (a_n, b_n): the monic
    /// [-1,1] Jacobi recurrence coefficients.
    pub fn classical_ab(&self, n: usize) -> Result<(Rational, Rational)> {
        let a = self.a(n)?.limit_at_infinity()?;
        let b = self.b(n)?.limit_at_infinity()?;
        Ok((a, b))
    }

    /// The leading asymptotic constants (a, b) with
    /// a = 4(alpha+1)(alpha+1)_n (alpha+beta+2)_{n-1} / (n! (beta+1)_n) and
    /// b its alpha <-> beta swap.
    pub fn ab_constants(&self, n: usize) -> (Rational, Rational) {
        let a1 = self.alpha() + &Rational::one();
        let b1 = self.beta() + &Rational::one();
        let common = pochhammer_i(
            &(self.alpha() + self.beta() + &Rational::from(2)),
            n as i64 - 1,
        ) / Rational::factorial(n);
        let a = Rational::from(4) * &a1 * pochhammer(&a1, n) * &common / pochhammer(&b1, n);
        let b = Rational::from(4) * &b1 * pochhammer(&b1, n) * &common / pochhammer(&a1, n);
        (a, b)
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
    fn y0_display() {
        // y_0 = 4(alpha+1) t1 / ((alpha+beta+1)(t1 t2 + t1 + t2))
        let kw = Koornwinder::new(q(1, 2), Rational::from(0)).unwrap();
        let t1 = RatFun2::var1();
        let t2 = RatFun2::var2();
        let expect = c(Rational::from(4) * q(3, 2) / q(3, 2)) * t1.clone()
            / (t1.clone() * t2.clone() + t1 + t2);
        assert_eq!(kw.y(0).unwrap(), expect);
        // alpha = beta = 0, t1 = t2 = 2: y_0 = 8/(4+2+2) = 1
        let kw0 = Koornwinder::new(Rational::from(0), Rational::from(0)).unwrap();
        assert_eq!(
            kw0.y(0).unwrap().eval(&Rational::from(2), &Rational::from(2)).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn swap_symmetry_of_z() {
        let kw = Koornwinder::new(q(1, 2), q(3, 2)).unwrap();
        let swapped = kw.swapped();
        for n in 0..=2 {
            assert_eq!(kw.z(n).unwrap(), swapped.y(n).unwrap().swap_vars());
            assert_eq!(kw.y(n).unwrap(), swapped.z(n).unwrap().swap_vars());
        }
    }

    #[test]
    fn matches_symbolic_oracle() {
        let grid = [
            (Rational::from(0), Rational::from(0)),
            (q(1, 2), Rational::from(0)),
            (q(3, 2), q(-1, 2)),
        ];
        for (alpha, beta) in grid {
            let kw = Koornwinder::new(alpha.clone(), beta.clone()).unwrap();
            let o = Oracle::symbolic2(kw.family(), 3).unwrap();
            for n in 0..=3 {
                assert_eq!(
                    kw.a(n).unwrap(),
                    o.a(n),
                    "a_{n} at ({alpha}, {beta})"
                );
                assert_eq!(
                    kw.b(n).unwrap(),
                    o.b(n),
                    "b_{n} at ({alpha}, {beta})"
                );
                assert_eq!(kw.gy(n), super::super::koorn_gy_from_oracle(&o, n), "gy_{n}");
                assert_eq!(kw.gz(n), super::super::koorn_gz_from_oracle(&o, n), "gz_{n}");
                assert_eq!(
                    kw.gu(n).unwrap(),
                    super::super::koorn_gu_from_oracle(&o, n),
                    "gu_{n}"
                );
                assert_eq!(
                    kw.gv2(n).unwrap(),
                    super::super::koorn_gv2_from_oracle(&o, n),
                    "gv2_{n}"
                );
                assert_eq!(
                    kw.gw2(n).unwrap(),
                    super::super::koorn_gw2_from_oracle(&o, n),
                    "gw2_{n}"
                );
            }
        }
    }

    #[test]
    fn leading_asymptotics() {
        let kw = Koornwinder::new(q(1, 2), Rational::from(0)).unwrap();
        for n in 0..=2 {
            let (a, b) = kw.ab_constants(n);
            let sy = kw.y(n).unwrap().expand_at_infinity2(1).unwrap();
            // y ~ a/t2: coefficient of s2 is a, coefficient of s1 vanishes
            assert_eq!(sy.coeff(0, 1), a, "n = {n}");
            assert_eq!(sy.coeff(1, 0), Rational::zero());
            let sz = kw.z(n).unwrap().expand_at_infinity2(1).unwrap();
            assert_eq!(sz.coeff(1, 0), b);
            assert_eq!(sz.coeff(0, 1), Rational::zero());
        }
    }
}
