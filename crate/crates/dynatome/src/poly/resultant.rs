//! Resultants, characteristic polynomials and discriminants.
//!
//! Three exact routes are provided and cross-checked against each other
//! in the test suite:
//!
//! * [`resultant_int`] — univariate integer resultant by the subresultant
//!   polynomial remainder sequence (content extraction, Collins/Brown
//!   coefficient reduction, sign bookkeeping by degree parities);
//! * [`resultant_x`] — resultant in the main variable of two parametric
//!   polynomials, by specializing the parameter at integer points,
//!   running the univariate kernel, and interpolating under an a-priori
//!   degree bound (points where a leading coefficient vanishes are
//!   skipped, since specialization does not commute with the resultant
//!   there);
//! * [`char_resultant`] — for A monic in x, the resultant
//!   res_x(A, λ − g) computed as the characteristic polynomial of
//!   multiplication by g on ℤ[x]/(A), via power sums and Newton's
//!   identities. This never degenerates under specialization, so it
//!   needs no bad-point handling, and two extra sample points verify
//!   the caller's degree bound after interpolation.

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_rational::BigRational;
use num_traits::{pow::pow, One, Zero};

use super::gcd::pseudo_rem;
use super::{IntPoly, ParamPoly};
use crate::arith::int;
use crate::error::{Error, Result};

fn exact_int_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    assert!(r.is_zero(), "inexact division {n} / {d} in resultant kernel");
    q
}

/// Resultant of two integer polynomials, convention
/// res(A, B) = lc(A)^deg(B) · ∏ B(α) over the roots α of A.
/// Degenerate inputs: res = 0 if either polynomial is zero, 1 if both are
/// nonzero constants.
pub fn resultant_int(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    if da == 0 && db == 0 {
        return BigInt::one();
    }
    if da == 0 {
        return pow(a.leading_coeff(), db);
    }
    if db == 0 {
        return pow(b.leading_coeff(), da);
    }
    let mut sign = 1i64;
    let (mut aa, mut bb) = (a.clone(), b.clone());
    if da < db {
        std::mem::swap(&mut aa, &mut bb);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    // res(u·A, v·B) = u^degB · v^degA · res(A, B)
    let (ca, cb) = (aa.signed_content(), bb.signed_content());
    let content_factor = pow(ca, bb.degree().unwrap()) * pow(cb, aa.degree().unwrap());
    let mut p = aa.primitive_part();
    let mut q = bb.primitive_part();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let dp = p.degree().unwrap();
        let dq = q.degree().unwrap();
        if dp % 2 == 1 && dq % 2 == 1 {
            sign = -sign;
        }
        let delta = dp - dq;
        let r = pseudo_rem(&p, &q);
        p = q;
        let denom = &g * pow(h.clone(), delta);
        q = r
            .exact_div_scalar(&denom)
            .expect("subresultant reduction divides exactly");
        g = p.leading_coeff();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => exact_int_div(&pow(g.clone(), delta), &pow(h, delta - 1)),
        };
        if q.is_zero() {
            // common factor of positive degree
            return BigInt::zero();
        }
        if q.degree() == Some(0) {
            break;
        }
    }
    let dp = p.degree().unwrap();
    let val = exact_int_div(&pow(q.leading_coeff(), dp), &pow(h, dp - 1));
    int(sign) * content_factor * val
}

/// Discriminant of a univariate integer polynomial of degree ≥ 1:
/// (−1)^(m(m−1)/2) · res(p, p′) / lc(p); degree 1 gives 1.
pub fn discriminant_int(p: &IntPoly) -> BigInt {
    let m = p.degree().expect("discriminant of zero polynomial");
    assert!(m >= 1, "discriminant needs degree >= 1");
    if m == 1 {
        return BigInt::one();
    }
    let r = resultant_int(p, &p.derivative());
    let val = exact_int_div(&r, &p.leading_coeff());
    if (m * (m - 1) / 2) % 2 == 1 {
        -val
    } else {
        val
    }
}

/// Integer sample points 0, 1, −1, 2, −2, … (deterministic order).
pub fn centered_ints() -> impl Iterator<Item = BigInt> {
    (0u64..).map(|k| {
        if k == 0 {
            BigInt::zero()
        } else if k % 2 == 1 {
            int(((k + 1) / 2) as i64)
        } else {
            int(-((k / 2) as i64))
        }
    })
}

/// Interpolates the unique integer polynomial of degree < points.len()
/// through the given (x, y) pairs (distinct x), by Newton divided
/// differences; errors if the interpolant is not integral, which callers
/// treat as a violated degree bound.
pub fn interpolate_integer(points: &[(BigInt, BigInt)]) -> Result<IntPoly> {
    assert!(!points.is_empty());
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    let mut dd: Vec<BigRational> = points
        .iter()
        .map(|(_, y)| BigRational::from(y.clone()))
        .collect();
    let mut newton = vec![dd[0].clone()];
    for level in 1..n {
        for i in 0..n - level {
            let num = &dd[i + 1] - &dd[i];
            let den = &xs[i + level] - &xs[i];
            dd[i] = num / den;
        }
        newton.push(dd[0].clone());
    }
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()]; // ∏_{j<level} (x − x_j), ascending
    for (level, c) in newton.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        if level + 1 < n {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &xs[level];
            }
            basis = next;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::Internal(
                "interpolation produced a non-integral coefficient (degree bound violated)".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(IntPoly::new(out))
}

/// Resultant in the main variable of two parametric polynomials, as an
/// element of ℤ[t]. Uses the a-priori bound
/// deg_t(A)·deg_x(B) + deg_t(B)·deg_x(A) on the t-degree.
pub fn resultant_x(a: &ParamPoly, b: &ParamPoly) -> Result<IntPoly> {
    let (Some(da), Some(db)) = (a.degree_x(), b.degree_x()) else {
        return Ok(IntPoly::zero());
    };
    if da == 0 && db == 0 {
        return Ok(IntPoly::one());
    }
    if da == 0 {
        return Ok(a.coeff_x(0).pow(db as u32));
    }
    if db == 0 {
        return Ok(b.coeff_x(0).pow(da as u32));
    }
    let bound = a.degree_t().unwrap_or(0) * db + b.degree_t().unwrap_or(0) * da;
    let need = bound + 1;
    let la = a.leading_coeff_x();
    let lb = b.leading_coeff_x();
    let mut samples = Vec::with_capacity(need);
    for t0 in centered_ints() {
        if la.eval(&t0).is_zero() || lb.eval(&t0).is_zero() {
            continue;
        }
        let r = resultant_int(&a.specialize_t(&t0), &b.specialize_t(&t0));
        samples.push((t0, r));
        if samples.len() == need {
            break;
        }
    }
    interpolate_integer(&samples)
}

/// Discriminant in the main variable of a parametric polynomial, as an
/// element of ℤ[t]; errors with [`Error::DegenerateDegree`] if the
/// x-degree is below 1, and returns 1 for x-degree exactly 1.
pub fn discriminant_x(p: &ParamPoly) -> Result<IntPoly> {
    let m = p
        .degree_x()
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::DegenerateDegree("discriminant needs main-variable degree >= 1".into()))?;
    if m == 1 {
        return Ok(IntPoly::one());
    }
    let r = resultant_x(p, &p.derivative_x())?;
    let q = r.exact_div(&p.leading_coeff_x())?;
    if (m * (m - 1) / 2) % 2 == 1 {
        Ok(&IntPoly::zero() - &q)
    } else {
        Ok(q)
    }
}

fn poly_mod_monic(p: &IntPoly, a: &IntPoly) -> IntPoly {
    let nu = a.degree().expect("modulus must be nonzero");
    let mut r = p.clone();
    while let Some(d) = r.degree() {
        if d < nu {
            break;
        }
        let top = r.leading_coeff();
        r = &r - &a.scale(&top).shift(d - nu);
    }
    r
}

/// Characteristic polynomial (in λ) of multiplication by g on ℤ[z]/(A)
/// for A monic of degree ν ≥ 1: equals ∏ (λ − g(αᵢ)) = res_z(A, λ − g).
/// Computed from traces of powers of g via Newton's identities; every
/// division is exact because the coefficients are integers by symmetry.
pub fn char_poly_of_map(a: &IntPoly, g: &IntPoly) -> IntPoly {
    assert!(a.is_monic(), "characteristic polynomial needs a monic modulus");
    let nu = a.degree().unwrap();
    assert!(nu >= 1);
    // power sums of the roots of A, p_0 .. p_(ν−1)
    let mut psums = vec![int(nu as i64)];
    for m in 1..nu {
        let mut s = int(-(m as i64)) * a.coeff(nu - m);
        for i in 1..m {
            s -= a.coeff(nu - i) * &psums[m - i];
        }
        psums.push(s);
    }
    let gr = poly_mod_monic(g, a);
    // traces P_k = Σ g(αᵢ)^k for k = 1..ν
    let mut traces = Vec::with_capacity(nu);
    let mut h = gr.clone();
    for k in 1..=nu {
        let mut tr = BigInt::zero();
        for (j, c) in h.coeffs().iter().enumerate() {
            if !c.is_zero() {
                tr += c * &psums[j];
            }
        }
        traces.push(tr);
        if k < nu {
            h = poly_mod_monic(&(&h * &gr), a);
        }
    }
    // elementary symmetric functions of the g(αᵢ)
    let mut esym = vec![BigInt::one()];
    for k in 1..=nu {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &esym[k - i] * &traces[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        esym.push(exact_int_div(&acc, &int(k as i64)));
    }
    let mut coeffs = vec![BigInt::zero(); nu + 1];
    for (k, e) in esym.into_iter().enumerate() {
        coeffs[nu - k] = if k % 2 == 1 { -e } else { e };
    }
    IntPoly::new(coeffs)
}

/// res_x(A, λ − g) ∈ ℤ[t][λ] for A monic in x, returned with main
/// variable λ and parameter t. `deg_t_bound` is the caller's bound on the
/// t-degree of every λ-coefficient; two extra sample points beyond the
/// interpolation grid independently verify it.
pub fn char_resultant(a: &ParamPoly, g: &ParamPoly, deg_t_bound: usize) -> Result<ParamPoly> {
    assert!(a.is_monic_x(), "char_resultant needs A monic in x");
    let nu = a.degree_x().unwrap();
    let need = deg_t_bound + 1;
    let mut samples = Vec::with_capacity(need + 2);
    for t0 in centered_ints().take(need + 2) {
        let az = a.specialize_t(&t0);
        let gz = g.specialize_t(&t0);
        samples.push((t0, char_poly_of_map(&az, &gz)));
    }
    let mut lam_coeffs = Vec::with_capacity(nu + 1);
    for k in 0..=nu {
        let pts: Vec<(BigInt, BigInt)> = samples[..need]
            .iter()
            .map(|(t0, cp)| (t0.clone(), cp.coeff(k)))
            .collect();
        lam_coeffs.push(interpolate_integer(&pts)?);
    }
    let result = ParamPoly::new(lam_coeffs);
    for (t0, cp) in &samples[need..] {
        if &result.specialize_t(t0) != cp {
            return Err(Error::Internal(format!(
                "characteristic resultant fails verification at t = {t0}: degree bound {deg_t_bound} too small"
            )));
        }
    }
    Ok(result)
}
