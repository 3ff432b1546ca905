//! Brute-force ground truth from the moment determinants.
//!
//! Everything here is built directly from the Hankel determinants
//! Delta_n = det(mu_{i+j}), 0 <= i,j <= n, with no closed form in sight:
//! the monic polynomials p_n, their norms h_n = Delta_n/Delta_{n-1}, the
//! recurrence coefficients a_n, b_n, the expansion coefficients c_n, d_n,
//! e_n of p_n = x^n + c_n x^{n-1} + d_n x^{n-2} + e_n x^{n-3} + ..., and the
//! numerator polynomials q_n.  The closed-form routes are later required to
//! reproduce these values exactly.
//!
//! Internally the determinants run over the polynomial ring: every moment
//! has denominator dividing t (resp. t1*t2), so scaling the matrix clears
//! all poles and Bareiss elimination applies without fraction blowup.  The
//! same code runs the numeric fast path, where a rational t value is
//! substituted into the moments first.

use crate::bareiss::det_bareiss;
use crate::bipoly::BiPoly;
use crate::field::{Field, Ring};
use crate::measures::{Family, Moments};
use crate::poly::Poly;
use crate::ratfun::RatFun1;
use crate::ratfun2::RatFun2;
use crate::rational::Rational;
use crate::{Error, Result};

/// Scalars on which the oracle can run: the poles in the deformation
/// parameters can be cleared into an integral domain for fraction-free
/// elimination.
pub trait OracleScalar: Field {
    type Cleared: Ring;

    /// Interpret the scalar as an element of the cleared ring; `None` if it
    /// still has a denominator.
    fn clear(&self) -> Option<Self::Cleared>;

    fn embed(c: &Self::Cleared) -> Self;
}

impl OracleScalar for Rational {
    type Cleared = Rational;

    fn clear(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn embed(c: &Rational) -> Rational {
        c.clone()
    }
}

impl OracleScalar for RatFun1 {
    type Cleared = Poly<Rational>;

    fn clear(&self) -> Option<Poly<Rational>> {
        self.as_poly()
    }

    fn embed(c: &Poly<Rational>) -> RatFun1 {
        RatFun1::from_poly(c.clone())
    }
}

impl OracleScalar for RatFun2 {
    type Cleared = BiPoly;

    fn clear(&self) -> Option<BiPoly> {
        self.as_poly()
    }

    fn embed(c: &BiPoly) -> RatFun2 {
        RatFun2::from_poly(c.clone())
    }
}

/// Per-index recurrence record.
#[derive(Clone, Debug)]
pub struct RecurrenceData<K> {
    pub n: usize,
    pub a: K,
    pub b: K,
    pub h: K,
    pub c: K,
    pub d: K,
    pub e: K,
}

/// The moment-determinant oracle, built once up to a maximal index.
///
/// All accessors are valid for n <= `max_n` as passed to the constructor
/// (the internal build goes one index further so that b_n = c_n - c_{n+1}
/// and the numerator polynomials are available at `max_n` itself).
pub struct Oracle<K: OracleScalar> {
    family: Family,
    t: Vec<K>,
    moments: Moments<K>,
    /// delta[n] = Delta_n, n = 0..=max_n+1
    delta: Vec<K>,
    p: Vec<Poly<K>>,
    q: Vec<Poly<K>>,
    h: Vec<K>,
    max_n: usize,
}

impl Oracle<RatFun1> {
    /// Symbolic oracle in t for the one-parameter families.
    pub fn symbolic1(family: &Family, max_n: usize) -> Result<Self> {
        Oracle::build(family, &[RatFun1::var()], max_n, None)
    }
}

impl Oracle<RatFun2> {
    /// Symbolic oracle in (t1, t2) for the Koornwinder family.
    pub fn symbolic2(family: &Family, max_n: usize) -> Result<Self> {
        Oracle::build(family, &[RatFun2::var1(), RatFun2::var2()], max_n, None)
    }
}

impl Oracle<Rational> {
    /// Numeric fast path: the deformation parameters are pinned first.
    pub fn numeric(family: &Family, t: &[Rational], max_n: usize) -> Result<Self> {
        Oracle::build(family, t, max_n, None)
    }
}

impl<K: OracleScalar> Oracle<K> {
    /// Builds the oracle from explicitly supplied moments (the perturbation
    /// hook of the negative-control tests).
    pub fn with_moments(
        family: &Family,
        t: &[K],
        moments: Moments<K>,
        max_n: usize,
    ) -> Result<Self> {
        Oracle::build(family, t, max_n, Some(moments))
    }

    fn build(family: &Family, t: &[K], max_n: usize, moments: Option<Moments<K>>) -> Result<Self> {
        let top = max_n + 1;
        let moments = match moments {
            Some(m) => m,
            None => Moments::generate(family, t, 2 * top + 1)?,
        };
        if moments.len() < 2 * top + 1 {
            return Err(Error::InsufficientMoments {
                needed: 2 * top + 1,
                have: moments.len(),
            });
        }

        // scale = product of deformation parameters; s*mu_k is polynomial
        let scale = t
            .iter()
            .fold(K::one(), |acc, v| acc * v.clone());
        let cleared: Vec<K::Cleared> = moments
            .all()
            .iter()
            .map(|m| {
                (m.clone() * scale.clone())
                    .clear()
                    .ok_or_else(|| Error::InvalidParameter("moment has unexpected poles".into()))
            })
            .collect::<Result<_>>()?;

        // Delta_n for n = 0..=top, with the scaling removed:
        // det(s*mu matrix) = s^{n+1} Delta_n
        let mut delta = Vec::with_capacity(top + 1);
        let mut scale_pow = scale.clone();
        for n in 0..=top {
            let m: Vec<Vec<K::Cleared>> = (0..=n)
                .map(|i| (0..=n).map(|j| cleared[i + j].clone()).collect())
                .collect();
            let det = K::embed(&det_bareiss(m));
            let d = det / scale_pow.clone();
            if d.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "Hankel determinant Delta_{n} vanishes; the moment sequence is degenerate"
                )));
            }
            delta.push(d);
            scale_pow = scale_pow * scale.clone();
        }

        // Monic p_n from the determinant formula; the x-row is unscaled, so
        // the determinant carries s^n which cancels against Delta_{n-1}.
        let mut p: Vec<Poly<K>> = Vec::with_capacity(top + 1);
        p.push(Poly::one());
        let mut scale_pow = scale.clone();
        for n in 1..=top {
            let mut m: Vec<Vec<Poly<K::Cleared>>> = (0..n)
                .map(|i| {
                    (0..=n)
                        .map(|j| Poly::constant(cleared[i + j].clone()))
                        .collect()
                })
                .collect();
            m.push(
                (0..=n)
                    .map(|j| Poly::monomial(<K::Cleared as Ring>::one(), j))
                    .collect(),
            );
            let det: Poly<K::Cleared> = det_bareiss(m);
            let denom = scale_pow.clone() * delta[n - 1].clone();
            let poly = det.map(|c| K::embed(c) / denom.clone());
            debug_assert!(poly.is_monic(), "hankel polynomial must be monic");
            p.push(poly);
            scale_pow = scale_pow * scale.clone();
        }

        // h_n = Delta_n / Delta_{n-1}, h_0 = Delta_0 = mu_0
        let mut h = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let prev = if n == 0 { K::one() } else { delta[n - 1].clone() };
            h.push(delta[n].clone() / prev);
        }

        let mut oracle = Oracle {
            family: family.clone(),
            t: t.to_vec(),
            moments,
            delta,
            p,
            q: Vec::new(),
            h,
            max_n,
        };

        // numerator polynomials share the recurrence, q_0 = 0, q_1 = mu_0
        let mut q = vec![Poly::zero(), Poly::constant(oracle.moments.mu(0).clone())];
        for n in 1..top {
            let x_minus_b = Poly::new(vec![-oracle.b(n), K::one()]);
            let next = x_minus_b * q[n].clone() - q[n - 1].scale(&oracle.a(n));
            q.push(next);
        }
        oracle.q = q;

        oracle.check_internal_consistency()?;
        Ok(oracle)
    }

    /// Three-way agreement inside the oracle: the determinant polynomials
    /// satisfy the recurrence built from a_n, b_n, and the coefficient
    /// read-offs match the sum formulas for c_n, d_n, e_n.
    fn check_internal_consistency(&self) -> Result<()> {
        for n in 1..=self.max_n {
            let x_minus_b = Poly::new(vec![-self.b(n), K::one()]);
            let rhs = x_minus_b * self.p[n].clone() - self.p[n - 1].scale(&self.a(n));
            if rhs != self.p[n + 1] {
                return Err(Error::InvalidParameter(format!(
                    "determinant route and recurrence route disagree at n = {}",
                    n + 1
                )));
            }
        }
        for n in 0..=self.max_n + 1 {
            let b = |i: usize| self.b_raw(i);
            let a = |i: usize| self.a(i);
            // c_n = -sum b_i
            let mut c = K::zero();
            for i in 0..n {
                c = c - b(i);
            }
            // d_n = -sum_{i=1}^{n-1} a_i + sum_{i<j} b_i b_j
            let mut d = K::zero();
            for i in 1..n {
                d = d - a(i);
            }
            for i in 0..n {
                for j in i + 1..n {
                    d = d + b(i) * b(j);
                }
            }
            // e_n = sum a_i (sum_{j<=i-2} b_j + sum_{j>i} b_j) - sum_{i<j<k} b_i b_j b_k
            let mut e = K::zero();
            for i in 1..n {
                let mut s = K::zero();
                for j in 0..i.saturating_sub(1) {
                    s = s + b(j);
                }
                for j in i + 1..n {
                    s = s + b(j);
                }
                e = e + a(i) * s;
            }
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        e = e - b(i) * b(j) * b(k);
                    }
                }
            }
            if c != self.c(n) || d != self.d(n) || e != self.e(n) {
                return Err(Error::InvalidParameter(format!(
                    "sum formulas for c, d, e fail at n = {n}"
                )));
            }
        }
        Ok(())
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn t(&self) -> &[K] {
        &self.t
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn moments(&self) -> &Moments<K> {
        &self.moments
    }

    pub fn delta(&self, n: usize) -> &K {
        &self.delta[n]
    }

    /// The monic orthogonal polynomial of degree n (valid to max_n + 1).
    pub fn p(&self, n: usize) -> &Poly<K> {
        &self.p[n]
    }

    /// The numerator polynomial q_n (q_0 = 0, q_1 = mu_0).
    pub fn q(&self, n: usize) -> &Poly<K> {
        &self.q[n]
    }

    /// h_n = Delta_n / Delta_{n-1}.
    pub fn h(&self, n: usize) -> K {
        self.h[n].clone()
    }

    /// a_n = h_n / h_{n-1} for n >= 1; a_0 = 0 by convention.
    pub fn a(&self, n: usize) -> K {
        if n == 0 {
            K::zero()
        } else {
            self.h[n].clone() / self.h[n - 1].clone()
        }
    }

    /// b_n = c_n - c_{n+1}.
    pub fn b(&self, n: usize) -> K {
        self.c(n) - self.c(n + 1)
    }

    /// b_n with b_{-1} = 0 padding would go negative; this variant treats
    /// indices past the window as unreachable.
    fn b_raw(&self, n: usize) -> K {
        if n + 1 < self.p.len() {
            self.b(n)
        } else {
            K::zero()
        }
    }

    /// Coefficient of x^{n-1} in p_n (0 for n = 0).
    pub fn c(&self, n: usize) -> K {
        if n == 0 {
            K::zero()
        } else {
            self.p[n].coeff(n - 1)
        }
    }

    /// Coefficient of x^{n-2} in p_n (0 for n <= 1).
    pub fn d(&self, n: usize) -> K {
        if n <= 1 {
            K::zero()
        } else {
            self.p[n].coeff(n - 2)
        }
    }

    /// Coefficient of x^{n-3} in p_n (0 for n <= 2).
    pub fn e(&self, n: usize) -> K {
        if n <= 2 {
            K::zero()
        } else {
            self.p[n].coeff(n - 3)
        }
    }

    pub fn recurrence(&self, n: usize) -> RecurrenceData<K> {
        RecurrenceData {
            n,
            a: self.a(n),
            b: self.b(n),
            h: self.h(n),
            c: self.c(n),
            d: self.d(n),
            e: self.e(n),
        }
    }

    /// Checks <p_m, p_n> = h_n delta_{mn} exactly for all m, n <= max.
    /// Returns the offending pair and the nonzero value on failure.
    pub fn verify_orthogonality(&self, max: usize) -> std::result::Result<(), (usize, usize, K)> {
        self.verify_orthogonality_against(&self.moments, max)
    }

    /// As `verify_orthogonality`, but pairing this oracle's polynomials with
    /// an externally supplied moment functional.  The negative-control tests
    /// use this to pair a perturbed oracle with the clean measure.
    pub fn verify_orthogonality_against(
        &self,
        moments: &Moments<K>,
        max: usize,
    ) -> std::result::Result<(), (usize, usize, K)> {
        for m in 0..=max {
            for n in m..=max {
                let prod = self.p[m].clone() * self.p[n].clone();
                let val = crate::measures::moment_functional(&prod, moments)
                    .expect("enough moments by construction");
                let expect = if m == n { self.h(n) } else { K::zero() };
                if val != expect {
                    return Err((m, n, val - expect));
                }
            }
        }
        Ok(())
    }

    /// The polynomial analogue of det Z: p_n q_{n-1} - p_{n-1} q_n, which
    /// equals -h_{n-1} (sign fixed empirically at n = 1 where it reads
    /// -mu_0 = -h_0, and propagated by the shared recurrence).
    pub fn wronskian_shadow(&self, n: usize) -> Poly<K> {
        self.p[n].clone() * self.q[n - 1].clone() - self.p[n - 1].clone() * self.q[n].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn kl_oracle() -> Oracle<Rational> {
        let fam = Family::krall_laguerre(Rational::from(0)).unwrap();
        Oracle::numeric(&fam, &[Rational::from(1)], 3).unwrap()
    }

    #[test]
    fn worked_chain_krall_laguerre() {
        // the full worked chain at alpha = 0, t = 1
        let o = kl_oracle();
        assert_eq!(o.delta(0), &Rational::from(2));
        assert_eq!(o.delta(1), &Rational::from(3));
        assert_eq!(o.delta(2), &Rational::from(16));
        assert_eq!(o.h(0), Rational::from(2));
        assert_eq!(o.h(1), q(3, 2));
        assert_eq!(o.a(1), q(3, 4));
        assert_eq!(o.b(0), q(1, 2));
        assert_eq!(o.b(1), q(17, 6));
        assert_eq!(o.c(1), q(-1, 2));
        assert_eq!(o.c(2), q(-10, 3));
        // p_2 = x^2 - 10x/3 + 2/3
        let p2 = Poly::new(vec![q(2, 3), q(-10, 3), Rational::one()]);
        assert_eq!(o.p(2), &p2);
    }

    #[test]
    fn hankel_polynomial_low_cases() {
        let o = kl_oracle();
        assert_eq!(o.p(0), &Poly::one());
        // p_1 = x - mu_1/mu_0 = x - 1/2
        assert_eq!(o.p(1), &Poly::new(vec![q(-1, 2), Rational::one()]));
    }

    #[test]
    fn krall_jacobi_first_polynomial() {
        let fam = Family::krall_jacobi(Rational::from(0), Rational::from(0)).unwrap();
        let o = Oracle::numeric(&fam, &[Rational::from(1)], 2).unwrap();
        assert_eq!(o.p(1), &Poly::new(vec![q(-1, 4), Rational::one()]));
        assert_eq!(o.b(1), q(11, 20));
        assert_eq!(o.h(1), q(5, 24));
    }

    #[test]
    fn orthogonality_and_worked_values() {
        let o = kl_oracle();
        o.verify_orthogonality(3).unwrap();
        // <p_2, p_2> = Delta_2/Delta_1 = 16/3
        assert_eq!(o.h(2), q(16, 3));
        // p_1 p_2 integrates to zero: worked cubic x^3 - 23x^2/6 + 7x/3 - 1/3
        let prod = o.p(1).clone() * o.p(2).clone();
        assert_eq!(
            prod,
            Poly::new(vec![q(-1, 3), q(7, 3), q(-23, 6), Rational::one()])
        );
    }

    #[test]
    fn numerator_polynomials() {
        let o = kl_oracle();
        assert!(o.q(0).is_zero());
        assert_eq!(o.q(1), &Poly::constant(Rational::from(2)));
        for n in 1..=3 {
            assert_eq!(o.q(n).degree(), Some(n - 1));
            // leading coefficient mu_0
            assert_eq!(o.q(n).leading_coeff(), Rational::from(2));
        }
        // p_n q_{n-1} - p_{n-1} q_n = -h_{n-1}
        for n in 1..=3 {
            let shadow = o.wronskian_shadow(n);
            assert_eq!(shadow, Poly::constant(-o.h(n - 1)), "n = {n}");
        }
    }

    #[test]
    fn symbolic_oracle_matches_numeric() {
        let fam = Family::krall_laguerre(Rational::from(0)).unwrap();
        let sym = Oracle::symbolic1(&fam, 2).unwrap();
        let num = Oracle::numeric(&fam, &[q(7, 2)], 2).unwrap();
        for n in 0..=2 {
            assert_eq!(sym.h(n).eval(&q(7, 2)).unwrap(), num.h(n));
            assert_eq!(sym.b(n).eval(&q(7, 2)).unwrap(), num.b(n));
        }
    }

    #[test]
    fn perturbed_moments_break_orthogonality() {
        let fam = Family::krall_laguerre(Rational::from(0)).unwrap();
        let t = [Rational::from(1)];
        let clean = Moments::generate(&fam, &t, 9).unwrap();
        let o = Oracle::with_moments(&fam, &t, clean.perturbed(2), 3).unwrap();
        // a perturbed oracle is self-consistent, but fails against the
        // clean measure
        o.verify_orthogonality(3).unwrap();
        let (m, n, _) = o.verify_orthogonality_against(&clean, 3).unwrap_err();
        assert!(m < n || m == n);
    }

    #[test]
    fn gegenbauer_is_symmetric() {
        let fam = Family::krall_gegenbauer(q(1, 2)).unwrap();
        let o = Oracle::symbolic1(&fam, 3).unwrap();
        for n in 0..=3 {
            assert!(o.b(n).is_zero(), "b_{n} must vanish for an even measure");
        }
    }
}
