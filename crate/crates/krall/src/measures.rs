//! The four Krall-type families and their exact moment sequences.
//!
//! Weights are normalized so the absolutely continuous part has total mass 1;
//! the jumps contribute 1/t (resp. 1/t1 at the left endpoint and 1/t2 at the
//! right one).  With rational parameters every moment is then a rational
//! function of the deformation parameters with denominator dividing t
//! (resp. t1*t2), which keeps the whole pipeline in exact arithmetic.
//!
//! Moments are generated by recurrences, never by quadrature:
//!
//! - Krall-Laguerre: mu_0 = 1 + 1/t, mu_k = (alpha+1)_k for k >= 1;
//! - Krall-Jacobi on [0,1]: (alpha+beta+k+2) mu_{k+1}
//!     = (beta+k+1) mu_k - (beta+1)/t * delta_{k0};
//! - Koornwinder on [-1,1]: nu_0 = 1,
//!   (alpha+beta+k+2) nu_{k+1} = (beta-alpha) nu_k + k nu_{k-1},
//!   mu_k = nu_k + (-1)^k/t1 + 1/t2;
//! - Krall-Gegenbauer: the Koornwinder family at alpha = beta, t1 = t2 = t.

use crate::field::Field;
use crate::poly::Poly;
use crate::rational::{pochhammer, Rational};
use crate::{Error, Result};

/// Which of the four families a measure belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    KrallLaguerre,
    KrallJacobi,
    Koornwinder,
    KrallGegenbauer,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::KrallLaguerre => "krall-laguerre",
            FamilyKind::KrallJacobi => "krall-jacobi",
            FamilyKind::Koornwinder => "koornwinder",
            FamilyKind::KrallGegenbauer => "gegenbauer",
        }
    }
}

/// A family with its rational parameters (the deformation parameters stay
/// separate so they can be symbolic or numeric).
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    kind: FamilyKind,
    alpha: Rational,
    beta: Option<Rational>,
}

impl Family {
    pub fn krall_laguerre(alpha: Rational) -> Result<Self> {
        check_exponent("alpha", &alpha)?;
        Ok(Family {
            kind: FamilyKind::KrallLaguerre,
            alpha,
            beta: None,
        })
    }

    pub fn krall_jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        check_exponent("alpha", &alpha)?;
        check_exponent("beta", &beta)?;
        Ok(Family {
            kind: FamilyKind::KrallJacobi,
            alpha,
            beta: Some(beta),
        })
    }

    pub fn koornwinder(alpha: Rational, beta: Rational) -> Result<Self> {
        check_exponent("alpha", &alpha)?;
        check_exponent("beta", &beta)?;
        Ok(Family {
            kind: FamilyKind::Koornwinder,
            alpha,
            beta: Some(beta),
        })
    }

    /// Equal jumps at +-1 and alpha = beta; internally the Koornwinder
    /// family with t1 = t2 = t.
    pub fn krall_gegenbauer(alpha: Rational) -> Result<Self> {
        check_exponent("alpha", &alpha)?;
        Ok(Family {
            kind: FamilyKind::KrallGegenbauer,
            alpha: alpha.clone(),
            beta: Some(alpha),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    /// Defined for the two-exponent families; equals alpha for Gegenbauer.
    pub fn beta(&self) -> Option<&Rational> {
        self.beta.as_ref()
    }

    /// Number of deformation parameters: 2 for Koornwinder, 1 otherwise.
    pub fn deform_vars(&self) -> usize {
        match self.kind {
            FamilyKind::Koornwinder => 2,
            _ => 1,
        }
    }

    /// gamma_n = alpha + beta + 2n + 1 (Jacobi-side families).
    pub fn gamma(&self, n: usize) -> Rational {
        let beta = self.beta.as_ref().expect("gamma needs two exponents");
        &self.alpha + beta + &Rational::from(2 * n as i64 + 1)
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }
}

fn check_exponent(name: &str, v: &Rational) -> Result<()> {
    if v <= &Rational::from(-1) {
        return Err(Error::InvalidParameter(format!(
            "{name} must be > -1, got {v}"
        )));
    }
    Ok(())
}

/// An exact moment sequence mu_0, mu_1, ... for a family, over any scalar
/// field carrying the deformation parameter values.
#[derive(Clone, Debug)]
pub struct Moments<K> {
    family: Family,
    t: Vec<K>,
    mu: Vec<K>,
}

impl<K: Field> Moments<K> {
    /// Generates `count` moments.  `t` holds the deformation parameter
    /// value(s): one entry except for Koornwinder, which takes (t1, t2).
    pub fn generate(family: &Family, t: &[K], count: usize) -> Result<Self> {
        if t.len() != family.deform_vars() {
            return Err(Error::InvalidParameter(format!(
                "{} takes {} deformation parameter(s), got {}",
                family.name(),
                family.deform_vars(),
                t.len()
            )));
        }
        if t.iter().any(|v| v.is_zero()) {
            return Err(Error::InvalidParameter("t must be nonzero".into()));
        }
        let nu = classical_moments(family, count);
        let mut mu = Vec::with_capacity(count);
        match family.kind {
            FamilyKind::KrallLaguerre | FamilyKind::KrallJacobi => {
                // jump 1/t at x = 0 shifts mu_0 only
                let tinv = t[0].inv();
                for (k, v) in nu.into_iter().enumerate() {
                    let base = K::from_rational(v);
                    mu.push(if k == 0 { base + tinv.clone() } else { base });
                }
            }
            FamilyKind::Koornwinder => {
                let t1inv = t[0].inv();
                let t2inv = t[1].inv();
                for (k, v) in nu.into_iter().enumerate() {
                    let jump = if k % 2 == 0 {
                        t1inv.clone() + t2inv.clone()
                    } else {
                        t2inv.clone() - t1inv.clone()
                    };
                    mu.push(K::from_rational(v) + jump);
                }
            }
            FamilyKind::KrallGegenbauer => {
                // Koornwinder with t1 = t2 = t: odd jumps cancel
                let tinv = t[0].inv();
                for (k, v) in nu.into_iter().enumerate() {
                    let base = K::from_rational(v);
                    mu.push(if k % 2 == 0 {
                        base + tinv.clone() + tinv.clone()
                    } else {
                        base
                    });
                }
            }
        }
        Ok(Moments {
            family: family.clone(),
            t: t.to_vec(),
            mu,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn t(&self) -> &[K] {
        &self.t
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn mu(&self, k: usize) -> &K {
        &self.mu[k]
    }

    pub fn all(&self) -> &[K] {
        &self.mu
    }

    /// Test hook: returns a copy with mu_k replaced by mu_k + 1.  Used by
    /// the negative-control suites to confirm the identities actually bite.
    pub fn perturbed(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.mu[k] = out.mu[k].clone() + K::one();
        out
    }
}

/// The classical (jump-free) normalized moments nu_k of the background
/// weight, always plain rationals.
pub fn classical_moments(family: &Family, count: usize) -> Vec<Rational> {
    let alpha = family.alpha().clone();
    let mut nu = Vec::with_capacity(count);
    match family.kind() {
        FamilyKind::KrallLaguerre => {
            for k in 0..count {
                nu.push(pochhammer(&(&alpha + &Rational::one()), k));
            }
        }
        FamilyKind::KrallJacobi => {
            let beta = family.beta().unwrap().clone();
            let mut cur = Rational::one();
            for k in 0..count {
                nu.push(cur.clone());
                // (alpha+beta+k+2) nu_{k+1} = (beta+k+1) nu_k
                let kq = Rational::from(k as i64);
                cur = (&beta + &kq + &Rational::one()) * cur
                    / (&alpha + &beta + &kq + &Rational::from(2));
            }
        }
        FamilyKind::Koornwinder | FamilyKind::KrallGegenbauer => {
            let beta = family.beta().unwrap().clone();
            let mut prev = Rational::zero();
            let mut cur = Rational::one();
            for k in 0..count {
                nu.push(cur.clone());
                // (alpha+beta+k+2) nu_{k+1} = (beta-alpha) nu_k + k nu_{k-1}
                let kq = Rational::from(k as i64);
                let next = ((&beta - &alpha) * &cur + &kq * &prev)
                    / (&alpha + &beta + &kq + &Rational::from(2));
                prev = cur;
                cur = next;
            }
        }
    }
    nu
}

/// The linear functional realized by the measure: sum of coeff_k * mu_k.
pub fn moment_functional<K: Field>(p: &Poly<K>, m: &Moments<K>) -> Result<K> {
    let needed = p.degree().map_or(0, |d| d + 1);
    if needed > m.len() {
        return Err(Error::InsufficientMoments {
            needed,
            have: m.len(),
        });
    }
    let mut acc = K::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc = acc + c.clone() * m.mu(k).clone();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::RatFun1;
    use crate::ratfun2::RatFun2;
    use crate::Ring;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn krall_laguerre_moments_alpha_zero() {
        let fam = Family::krall_laguerre(Rational::from(0)).unwrap();
        let m = Moments::generate(&fam, &[Rational::from(1)], 5).unwrap();
        // (1 + 1/t, 1, 2, 6, 24) at t = 1
        assert_eq!(m.mu(0), &Rational::from(2));
        assert_eq!(m.mu(1), &Rational::from(1));
        assert_eq!(m.mu(2), &Rational::from(2));
        assert_eq!(m.mu(3), &Rational::from(6));
        assert_eq!(m.mu(4), &Rational::from(24));
    }

    #[test]
    fn krall_jacobi_moments() {
        let fam = Family::krall_jacobi(Rational::from(0), Rational::from(0)).unwrap();
        let m = Moments::generate(&fam, &[Rational::from(1)], 3).unwrap();
        assert_eq!(m.mu(0), &Rational::from(2));
        assert_eq!(m.mu(1), &q(1, 2));
        assert_eq!(m.mu(2), &q(1, 3));
    }

    #[test]
    fn koornwinder_classical_moments() {
        let fam = Family::koornwinder(Rational::from(0), Rational::from(0)).unwrap();
        let nu = classical_moments(&fam, 4);
        assert_eq!(nu[1], Rational::zero());
        assert_eq!(nu[2], q(1, 3));
    }

    #[test]
    fn koornwinder_swap_symmetry() {
        // mu_k(t2, t1, beta, alpha) = (-1)^k mu_k(t1, t2, alpha, beta)
        let fam = Family::koornwinder(q(1, 2), q(3, 1)).unwrap();
        let swapped = Family::koornwinder(q(3, 1), q(1, 2)).unwrap();
        let t1 = RatFun2::var1();
        let t2 = RatFun2::var2();
        let m = Moments::generate(&fam, &[t1.clone(), t2.clone()], 6).unwrap();
        let ms = Moments::generate(&swapped, &[t1, t2], 6).unwrap();
        for k in 0..6 {
            let lhs = ms.mu(k).swap_vars();
            let rhs = if k % 2 == 0 {
                m.mu(k).clone()
            } else {
                -m.mu(k).clone()
            };
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn moments_tend_to_classical() {
        // constant term of the expansion at infinity equals nu_k
        let fam = Family::krall_jacobi(q(1, 2), q(-1, 2)).unwrap();
        let m = Moments::generate(&fam, &[RatFun1::var()], 5).unwrap();
        let nu = classical_moments(&fam, 5);
        for k in 0..5 {
            assert_eq!(m.mu(k).limit_at_infinity().unwrap(), nu[k]);
        }
    }

    #[test]
    fn denominators_divide_t() {
        let fam = Family::koornwinder(q(3, 2), Rational::from(0)).unwrap();
        let m = Moments::generate(&fam, &[RatFun2::var1(), RatFun2::var2()], 6).unwrap();
        let scale = RatFun2::var1() * RatFun2::var2();
        for k in 0..6 {
            assert!((m.mu(k).clone() * scale.clone()).is_polynomial());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Family::krall_laguerre(Rational::from(-1)).is_err());
        assert!(Family::krall_jacobi(Rational::from(0), q(-3, 2)).is_err());
    }
}
