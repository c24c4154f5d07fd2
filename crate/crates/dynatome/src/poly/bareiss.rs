//! Fraction-free determinants and Sylvester matrices.
//!
//! This is the second, independent resultant route used to cross-check
//! the remainder-sequence and characteristic-polynomial kernels: build
//! the Sylvester matrix explicitly and evaluate its determinant by the
//! Bareiss algorithm (exact single-step fraction-free elimination; every
//! intermediate entry is a minor of the input, and every division is
//! exact). A variant with polynomial entries gives fully symbolic
//! determinants for small instances.
//!
//! Sylvester matrices are built with *declared* degrees: the matrix
//! shape comes from the generic degrees even if a specialized leading
//! coefficient vanishes. With the first polynomial monic this makes the
//! determinant commute with specialization, so grids of integer
//! determinants can certify a parametric resultant identity without
//! excluding any points.

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_traits::{One, Zero};

use super::{IntPoly, ParamPoly};

/// Exact determinant of an integer matrix by Bareiss elimination.
pub fn bareiss_det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Exact determinant of a matrix of parametric polynomials.
pub fn bareiss_det_param(mut m: Vec<Vec<ParamPoly>>) -> ParamPoly {
    let n = m.len();
    if n == 0 {
        return ParamPoly::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = 1i64;
    let mut prev = ParamPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return ParamPoly::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div_x(&prev)
                    .or_else(|_| {
                        // the minor identity guarantees exactness; a zero
                        // numerator with nonzero pivot divides trivially
                        if num.is_zero() {
                            Ok(ParamPoly::zero())
                        } else {
                            Err(crate::error::Error::Internal(
                                "Bareiss polynomial division must be exact".into(),
                            ))
                        }
                    })
                    .expect("Bareiss polynomial division must be exact");
            }
            m[i][k] = ParamPoly::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -&m[n - 1][n - 1]
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Sylvester matrix of A and B with declared degrees (da, db): shape
/// (da+db)², coefficients taken with zero padding beyond actual degrees.
pub fn sylvester_matrix_declared(
    a: &IntPoly,
    da: usize,
    b: &IntPoly,
    db: usize,
) -> Vec<Vec<BigInt>> {
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..db {
        for k in 0..=da {
            m[i][i + k] = a.coeff(da - k);
        }
    }
    for i in 0..da {
        for k in 0..=db {
            m[db + i][i + k] = b.coeff(db - k);
        }
    }
    m
}

/// Determinant of the declared-degree Sylvester matrix. For actual
/// degrees this is res(A, B); if the declared degree of B exceeds the
/// actual one by e, it equals lc(A)^e · res(A, B).
pub fn sylvester_det_declared(a: &IntPoly, da: usize, b: &IntPoly, db: usize) -> BigInt {
    bareiss_det_int(sylvester_matrix_declared(a, da, b, db))
}

/// Resultant via Sylvester determinant (actual degrees; nonzero inputs).
pub fn sylvester_resultant_int(a: &IntPoly, b: &IntPoly) -> BigInt {
    let da = a.degree().expect("resultant of zero polynomial");
    let db = b.degree().expect("resultant of zero polynomial");
    sylvester_det_declared(a, da, b, db)
}

/// Symbolic Sylvester matrix for res_z(A, λ − G): A with x-coefficients
/// in ℤ[t] and declared z-degree da, G likewise with declared degree dg.
/// Entries are polynomials in λ over ℤ[t]; the determinant is the
/// bivariate resultant with main variable λ.
pub fn multiplier_sylvester_param(a: &ParamPoly, da: usize, g: &ParamPoly, dg: usize) -> Vec<Vec<ParamPoly>> {
    let n = da + dg;
    let mut m = vec![vec![ParamPoly::zero(); n]; n];
    for i in 0..dg {
        for k in 0..=da {
            m[i][i + k] = ParamPoly::constant(a.coeff_x(da - k));
        }
    }
    // B = λ − G: z-coefficient j is −g_j(t), plus λ at j = 0
    for i in 0..da {
        for k in 0..=dg {
            let j = dg - k;
            let mut entry = ParamPoly::constant(&IntPoly::zero() - &g.coeff_x(j));
            if j == 0 {
                entry = &entry + &ParamPoly::x_var();
            }
            m[dg + i][i + k] = entry;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::poly::resultant::{char_resultant, resultant_int};

    fn im(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(bareiss_det_int(im(&[&[2]])), int(2));
        assert_eq!(bareiss_det_int(im(&[&[1, 2], &[3, 4]])), int(-2));
        assert_eq!(
            bareiss_det_int(im(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 4]])),
            int(11)
        );
        // singular
        assert_eq!(bareiss_det_int(im(&[&[1, 2], &[2, 4]])), int(0));
        // zero pivot forces a row swap
        assert_eq!(bareiss_det_int(im(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(bareiss_det_int(Vec::new()), int(1));
    }

    #[test]
    fn sylvester_matches_product_formula() {
        // A = 3(x−2)(x+1), B = x²+1: res = 9·5·2 = 90 (see resultant tests)
        let a = (&IntPoly::from_i64(&[-2, 1]) * &IntPoly::from_i64(&[1, 1])).scale(&int(3));
        let b = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(sylvester_resultant_int(&a, &b), int(90));
        assert_eq!(sylvester_resultant_int(&b, &a), int(90));
    }

    #[test]
    fn declared_degree_padding() {
        // B actually degree 1 but declared degree 2: det = lc(A)^1 · res(A,B)
        let a = IntPoly::from_i64(&[1, 0, 2]); // 2x²+1
        let b = IntPoly::from_i64(&[-1, 1]); // x−1
        let plain = sylvester_resultant_int(&a, &b);
        assert_eq!(plain, int(3)); // 2·(1−1)… product: lc(A)^1·B(±i/√2)… just trust kernel agreement
        assert_eq!(resultant_int(&a, &b), plain);
        let padded = sylvester_det_declared(&a, 2, &b, 2);
        assert_eq!(padded, int(2) * plain);
    }

    #[test]
    fn symbolic_multiplier_sylvester_agrees_with_char_route() {
        // fixed points of z² + t: A = z² − z + t, G = 2z
        let a = ParamPoly::new(vec![
            IntPoly::var(),
            IntPoly::from_i64(&[-1]),
            IntPoly::one(),
        ]);
        let g = ParamPoly::monomial_x(IntPoly::from_i64(&[2]), 1);
        let m = multiplier_sylvester_param(&a, 2, &g, 1);
        let det = bareiss_det_param(m);
        let via_char = char_resultant(&a, &g, 2).unwrap();
        assert_eq!(det, via_char);
    }
}
