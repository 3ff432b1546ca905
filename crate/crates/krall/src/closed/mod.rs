//! Tau-function closed forms for the recurrence data.
//!
//! Each family is completely described by a short list of rational functions
//! of the deformation parameter(s): y_n(t) for Krall-Laguerre and
//! Krall-Jacobi, the pair (y_n, z_n)(t1, t2) for Koornwinder, and x_n(t) for
//! Krall-Gegenbauer.  These are rational solutions of integrable Painlevé
//! III/V cases (resp. of a Schlesinger-type PDE system), built from explicit
//! tau-function factors.  From them the auxiliary functions u_n, v_n, w_n
//! and the recurrence coefficients a_n, b_n follow by closed formulas; the
//! Hankel oracle must reproduce every one of them exactly.
//!
//! Displays that divide by gamma_n - 1 (or by gamma_n) degenerate at n = 0
//! for special exponent sums; the scheme here stores the products
//! (gamma_n - 1) u_n etc. as the primary quantities, which are total and are
//! exactly the combinations entering the Laguerre-equation data.

mod gegenbauer;
mod jacobi;
mod koornwinder;
mod laguerre;

pub use gegenbauer::Gegenbauer;
pub use jacobi::KrallJacobi;
pub use koornwinder::Koornwinder;
pub use laguerre::KrallLaguerre;

use crate::field::Field;
use crate::oracle::{Oracle, OracleScalar};
use crate::poly::Poly;
use crate::rational::Rational;

/// Monic polynomials from the three-term recurrence
/// p_{n+1} = (x - b_n) p_n - a_n p_{n-1}, p_{-1} = 0, p_0 = 1.
///
/// `a` and `b` are indexed by n; `a[0]` is ignored (a_0 = 0 by convention).
pub fn polynomials_from_recurrence<K: Field>(a: &[K], b: &[K], count: usize) -> Vec<Poly<K>> {
    assert!(count <= b.len() + 1 && count <= a.len() + 1, "window too short");
    let mut out: Vec<Poly<K>> = Vec::with_capacity(count + 1);
    out.push(Poly::one());
    for n in 0..count {
        let x_minus_b = Poly::new(vec![-b[n].clone(), K::one()]);
        let mut next = x_minus_b * out[n].clone();
        if n >= 1 {
            next = next - out[n - 1].scale(&a[n]);
        }
        out.push(next);
    }
    out
}

// ---- Reconstruction of the tau-function data from oracle output ----
//
// The same y_n, u_n, ... admit expressions purely in terms of the oracle's
// a_i, b_i and the expansion coefficients c_n, d_n.  These are the formulas
// by which the functions were identified in the first place, and they give a
// second, determinant-driven route to each quantity.

/// Krall-Laguerre: y_n = -b_n + 2n + 1 + alpha.
pub fn kl_y_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let shift = Rational::from(2 * n as i64 + 1) + o.family().alpha().clone();
    -o.b(n) + K::from_rational(shift)
}

/// Krall-Laguerre: u_n = -a_n + sum_{i<n} b_i = -a_n - c_n.
pub fn kl_u_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    -o.a(n) - o.c(n)
}

/// Krall-Jacobi: gamma_n y_n = -(1 + gamma_n) b_n + beta + 2 c_n + 2n + 1.
pub fn kj_gy_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let gamma = o.family().gamma(n);
    let shift = o.family().beta().unwrap().clone() + Rational::from(2 * n as i64 + 1);
    -o.b(n) * K::from_rational(&gamma + &Rational::one()) + o.c(n) * K::from_int(2)
        + K::from_rational(shift)
}

/// Krall-Jacobi: (1 - gamma_n) v_n / 2 = beta/2 + c_n + n.
pub fn kj_jv_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let shift = o.family().beta().unwrap() / &Rational::from(2) + Rational::from(n as i64);
    o.c(n) + K::from_rational(shift)
}

/// Krall-Jacobi: (1 - gamma_n) u_n / 2 = -gamma_n a_n - c_n (c_n + 1) + 2 d_n.
pub fn kj_ju_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let gamma = o.family().gamma(n);
    let c = o.c(n);
    -o.a(n) * K::from_rational(gamma) - c.clone() * (c + K::one()) + o.d(n) * K::from_int(2)
}

/// Koornwinder: gamma_n y_n from the recurrence data,
///
///   gamma_n y_n = (alpha+beta+2n+3)(a_n + a_{n+1} + b_n^2) - 2 b_n c_n
///               + 4 sum_{i=1}^{n-1} a_i + 2 sum_{i=0}^{n-1} b_i^2
///               + 2 (alpha+n) b_n - 2 c_{n+1} + alpha - beta - 2n - 1.
pub fn koorn_gy_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let fam = o.family();
    let alpha = fam.alpha().clone();
    let beta = fam.beta().unwrap().clone();
    let nn = n as i64;
    let mut acc = (o.a(n) + o.a(n + 1) + o.b(n) * o.b(n))
        * K::from_rational(&alpha + &beta + &Rational::from(2 * nn + 3));
    acc = acc - o.b(n) * o.c(n) * K::from_int(2);
    for i in 1..n {
        acc = acc + o.a(i) * K::from_int(4);
    }
    for i in 0..n {
        acc = acc + o.b(i) * o.b(i) * K::from_int(2);
    }
    acc = acc + o.b(n) * K::from_rational((&alpha + &Rational::from(nn)) * Rational::from(2));
    acc = acc - o.c(n + 1) * K::from_int(2);
    acc + K::from_rational(&alpha - &beta - &Rational::from(2 * nn + 1))
}

/// Koornwinder: gamma_n z_n = gamma_n y_n + 2(beta - alpha - (alpha+beta+2n) b_n + 2 c_{n+1}).
pub fn koorn_gz_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let fam = o.family();
    let alpha = fam.alpha().clone();
    let beta = fam.beta().unwrap().clone();
    let diff = (-o.b(n) * K::from_rational(&alpha + &beta + &Rational::from(2 * n as i64))
        + o.c(n + 1) * K::from_int(2)
        + K::from_rational(&beta - &alpha))
        * K::from_int(2);
    koorn_gy_from_oracle(o, n) + diff
}

/// Koornwinder: (gamma_n - 1) u_n = alpha - beta - 2 c_n.
pub fn koorn_gu_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let fam = o.family();
    K::from_rational(fam.alpha() - fam.beta().unwrap()) - o.c(n) * K::from_int(2)
}

/// Koornwinder: (gamma_n - 1) v_n / 2 from the recurrence data,
///
///   (alpha+beta) a_n (b_{n-1}+b_n) + 2 alpha a_n + 2 sum_{i=1}^{n-1} a_i
///   + 3 sum_{i=1}^{n-1} a_i (b_{i-1}+b_i) + 2 a_n sum_{i=0}^{n-2} b_i
///   + sum_{i=0}^{n-1} (b_i^3 + b_i^2 - b_i)
///   + a_n ((2n+3) b_{n-1} + (2n+2) b_n + 2n+1) - n,
///
/// with a_0 = 0 and b_{-1} = 0.
pub fn koorn_gv2_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let fam = o.family();
    let alpha = fam.alpha().clone();
    let beta = fam.beta().unwrap().clone();
    let nn = n as i64;
    let b_prev = if n == 0 { K::zero() } else { o.b(n - 1) };
    let mut acc = o.a(n) * (b_prev.clone() + o.b(n)) * K::from_rational(&alpha + &beta);
    acc = acc + o.a(n) * K::from_rational(&alpha * &Rational::from(2));
    for i in 1..n {
        acc = acc + o.a(i) * K::from_int(2);
        acc = acc + o.a(i) * (o.b(i - 1) + o.b(i)) * K::from_int(3);
    }
    if n >= 2 {
        let mut s = K::zero();
        for i in 0..=n - 2 {
            s = s + o.b(i);
        }
        acc = acc + o.a(n) * s * K::from_int(2);
    }
    for i in 0..n {
        let b = o.b(i);
        acc = acc + b.clone() * b.clone() * b.clone() + b.clone() * b.clone() - b;
    }
    acc = acc
        + o.a(n)
            * (b_prev * K::from_int(2 * nn + 3)
                + o.b(n) * K::from_int(2 * nn + 2)
                + K::from_int(2 * nn + 1));
    acc - K::from_int(nn)
}

/// Koornwinder: (gamma_n - 1) w_n / 2 via
/// (gamma_n - 1)(w_n - v_n) = 4 (n - gamma_n a_n - 2 sum_{i=1}^{n-1} a_i - sum_{i=0}^{n-1} b_i^2).
pub fn koorn_gw2_from_oracle<K: OracleScalar>(o: &Oracle<K>, n: usize) -> K {
    let gamma = o.family().gamma(n);
    let mut s = K::from_int(n as i64) - o.a(n) * K::from_rational(gamma);
    for i in 1..n {
        s = s - o.a(i) * K::from_int(2);
    }
    for i in 0..n {
        s = s - o.b(i) * o.b(i);
    }
    koorn_gv2_from_oracle(o, n) + s * K::from_int(2)
}
