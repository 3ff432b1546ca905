//! Fraction-free determinants by Bareiss elimination.
//!
//! The Hankel determinants are computed over the polynomial ring (entries
//! scaled to clear the 1/t poles) rather than over the fraction field, so no
//! gcd reduction happens inside the elimination; every intermediate entry is
//! a genuine minor and every division is exact.

use crate::field::Ring;

/// Determinant of a square matrix over an integral domain.
///
/// Panics if an exact division fails, which cannot happen for true minors.
pub fn det_bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot by a row swap; a fully zero column means det = 0
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact on minors");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rational::Rational;

    #[test]
    fn rational_determinants() {
        let q = |n: i64| Rational::from(n);
        // det [[2,1],[1,2]] = 3
        assert_eq!(det_bareiss(vec![vec![q(2), q(1)], vec![q(1), q(2)]]), q(3));
        // det [[2,1,2],[1,2,6],[2,6,24]] = 16 (the worked Krall-Laguerre
        // moment determinant at alpha = 0, t = 1)
        let m = vec![
            vec![q(2), q(1), q(2)],
            vec![q(1), q(2), q(6)],
            vec![q(2), q(6), q(24)],
        ];
        assert_eq!(det_bareiss(m), q(16));
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let q = |n: i64| Rational::from(n);
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(det_bareiss(m), q(-1));
    }

    #[test]
    fn polynomial_determinant() {
        // det [[t, 1], [1, t]] = t^2 - 1
        let t: Poly<Rational> = Poly::var();
        let one = Poly::one();
        let m = vec![vec![t.clone(), one.clone()], vec![one, t]];
        assert_eq!(det_bareiss(m), Poly::from_ints(&[-1, 0, 1]));
    }
}
