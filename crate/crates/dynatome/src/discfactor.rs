//! Discriminants of multiplier polynomials and their structured
//! factorization.
//!
//! With Mₙ monic in λ over ℤ[t], the discriminant Δₙ = disc_λ Mₙ is an
//! element of ℤ[t]. It factors as
//!
//!   Δₙ = aₙ · Qₙ · Rₙ²
//!
//! where aₙ is a squarefree integer carrying the sign, Qₙ is the
//! "new-parameter" factor obtained by dividing Mₙ(t, 1) by the
//! cyclotomic resultants P_{k,l} = res_λ(C_l, M_k) over the proper
//! divisors k of n (with l = n/k), and Rₙ has positive leading
//! coefficient. The factorization routine computes each piece
//! independently and verifies the reassembly exactly; failures are
//! internal falsifications, not recoverable conditions.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{divisors, squarefree_part, DEFAULT_FACTOR_BOUND};
use crate::dynatomic::{cyclotomic, ParamFamily};
use crate::error::{Error, Result};
use crate::multiplier::multiplier_poly;
use crate::poly::resultant::{discriminant_x, resultant_x};
use crate::poly::{gcd, IntPoly, ParamPoly};

/// A discriminant Δₙ = disc_λ Mₙ.
#[derive(Debug, Clone)]
pub struct DeltaN {
    pub family: String,
    pub period: u32,
    pub delta: IntPoly,
    /// True when deg_λ Mₙ ≤ 1, so the discriminant is 1 by convention.
    pub degenerate: bool,
}

/// The factorization Δₙ = a · Q · R².
#[derive(Debug, Clone)]
pub struct DeltaFactorization {
    pub family: String,
    pub period: u32,
    pub delta: IntPoly,
    /// Squarefree integer carrying the sign of the content.
    pub a: BigInt,
    /// New-parameter factor (separable in all verified cases).
    pub q: IntPoly,
    /// Square part, leading coefficient positive.
    pub r: IntPoly,
    /// Sign of the primitive cofactor whose square root succeeded.
    pub primitive_sign: i8,
    pub degenerate: bool,
}

/// Computes Δₙ = disc_λ Mₙ.
pub fn delta_n(fam: &ParamFamily, n: u32) -> Result<DeltaN> {
    let m = multiplier_poly(fam, n)?;
    let degenerate = m.poly.degree_x() == Some(1);
    let delta = match discriminant_x(&m.poly) {
        Ok(d) => d,
        Err(Error::DegenerateDegree(_)) => IntPoly::one(),
        Err(e) => return Err(e),
    };
    Ok(DeltaN {
        family: fam.id(),
        period: n,
        delta,
        degenerate,
    })
}

/// P_{k,l} = res_λ(C_l, M_k): the factor of Mₙ(t, 1) accounting for
/// period-k cycles whose multiplier is a primitive l-th root of unity.
pub fn p_kl(fam: &ParamFamily, k: u32, l: u32) -> Result<IntPoly> {
    let m = multiplier_poly(fam, k)?;
    let c = cyclotomic(l)?;
    resultant_x(&ParamPoly::from_x_poly(&c), &m.poly)
}

/// Qₙ = Mₙ(t, 1) / ∏_{k|n, k≠n} P_{k, n/k}; the division failing would
/// falsify the factorization of Mₙ(t, 1) and is reported as an internal
/// error.
pub fn q_n(fam: &ParamFamily, n: u32) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::BadParam("period must be >= 1".into()));
    }
    let m = multiplier_poly(fam, n)?;
    let at_one = m.poly.specialize_x(&BigInt::one());
    let mut divisor = IntPoly::one();
    for k in divisors(n as u64) {
        if k == n as u64 {
            continue;
        }
        divisor = &divisor * &p_kl(fam, k as u32, n / k as u32)?;
    }
    at_one.exact_div(&divisor).map_err(|e| {
        Error::Internal(format!(
            "M_n(t,1) not divisible by the cyclotomic resultant product for {} period {n}: {e}",
            fam.id()
        ))
    })
}

/// Factors Δₙ = a · Qₙ · R² and verifies the reassembly exactly.
pub fn factor_delta(fam: &ParamFamily, n: u32) -> Result<DeltaFactorization> {
    factor_delta_with_bound(fam, n, DEFAULT_FACTOR_BOUND)
}

/// [`factor_delta`] with an explicit trial-division bound for the
/// squarefree split of the constant content.
pub fn factor_delta_with_bound(
    fam: &ParamFamily,
    n: u32,
    factor_bound: u64,
) -> Result<DeltaFactorization> {
    let dn = delta_n(fam, n)?;
    let q = q_n(fam, n)?;
    let cofactor = dn.delta.exact_div(&q).map_err(|e| {
        Error::Internal(format!(
            "discriminant not divisible by Q for {} period {n}: {e}",
            fam.id()
        ))
    })?;
    let content = cofactor.signed_content();
    let prim = cofactor.primitive_part();
    let (mut a, r0) = squarefree_part(&content.abs(), factor_bound)?;
    if content.is_negative() {
        a = -a;
    }
    let (r_prim, primitive_sign) = match prim.sqrt_exact() {
        Ok(r) => (r, 1i8),
        Err(_) => match (&IntPoly::zero() - &prim).sqrt_exact() {
            Ok(r) => (r, -1i8),
            Err(_) => {
                return Err(Error::Internal(format!(
                    "discriminant cofactor is not a perfect square for {} period {n}",
                    fam.id()
                )))
            }
        },
    };
    if primitive_sign < 0 {
        a = -a;
    }
    let r = r_prim.scale(&r0);
    assert!(
        !r.leading_coeff().is_negative(),
        "square part must have positive leading coefficient"
    );
    let reassembled = (&q * &(&r * &r)).scale(&a);
    assert_eq!(
        reassembled, dn.delta,
        "a·Q·R² must reassemble the discriminant exactly"
    );
    Ok(DeltaFactorization {
        family: fam.id(),
        period: n,
        delta: dn.delta,
        a,
        q,
        r,
        primitive_sign,
        degenerate: dn.degenerate,
    })
}

/// Whether Qₙ and Rₙ share a common root (a polynomial common factor of
/// positive degree). Expected false for all verified instances.
pub fn common_root_check(fam: &ParamFamily, n: u32) -> Result<bool> {
    let f = factor_delta(fam, n)?;
    Ok(gcd::gcd(&f.q, &f.r).degree().is_some_and(|d| d >= 1))
}

/// The period-3 data of the odd cubic family z³ + a·z: M₃ is a perfect
/// square N₃², and disc_λ N₃ factors with a degree-8 irreducible part D₃.
#[derive(Debug, Clone)]
pub struct SymcubicN3 {
    /// N₃ = √M₃, monic of λ-degree 4.
    pub n3: ParamPoly,
    /// disc_λ N₃ ∈ ℤ[a].
    pub disc: IntPoly,
    /// D₃(a) = disc_λ N₃ / (2¹²·3¹²·(4a³+12a²−3a−27)²·(a−3)⁴·(a+3)⁴·a¹²).
    pub d3: IntPoly,
}

/// Computes N₃, its discriminant, and extracts D₃ by exact division by
/// the structural cofactors.
pub fn symcubic_n3_factorization() -> Result<SymcubicN3> {
    let fam = ParamFamily::symcubic();
    let m3 = multiplier_poly(&fam, 3)?;
    let n3 = m3.poly.nth_root(2).map_err(|e| {
        Error::Internal(format!("period-3 multiplier polynomial of z³+az must be a square: {e}"))
    })?;
    let disc = discriminant_x(&n3)?;
    let mut rest = disc.clone();
    let constant = num_traits::pow(crate::arith::int(6), 12);
    rest = rest.exact_div_scalar(&constant)?;
    let cubic = IntPoly::from_i64(&[-27, -3, 12, 4]);
    rest = rest.exact_div(&cubic.pow(2))?;
    rest = rest.exact_div(&IntPoly::from_i64(&[-3, 1]).pow(4))?;
    rest = rest.exact_div(&IntPoly::from_i64(&[3, 1]).pow(4))?;
    rest = rest.exact_div(&IntPoly::monomial(BigInt::one(), 12))?;
    Ok(SymcubicN3 {
        n3,
        disc,
        d3: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn uni(d: u32) -> ParamFamily {
        ParamFamily::unicritical(d).unwrap()
    }

    #[test]
    fn quadratic_discriminants() {
        // Δ₁ = −2²(4c−1), Δ₂ = 1, Δ₃ = −2⁶(4c+7)c²
        assert_eq!(delta_n(&uni(2), 1).unwrap().delta, p(&[4, -16]));
        let d2 = delta_n(&uni(2), 2).unwrap();
        assert_eq!(d2.delta, IntPoly::one());
        assert!(d2.degenerate);
        assert_eq!(delta_n(&uni(2), 3).unwrap().delta, p(&[0, 0, -448, -256]));
        // Δ₄ = −2²⁴(64c³+144c²+108c+135)(c+2)²c⁶
        let expected = (&(&p(&[135, 108, 144, 64]) * &p(&[2, 1]).pow(2))
            * &IntPoly::monomial(int(1), 6))
            .scale(&int(-(1i64 << 24)));
        assert_eq!(delta_n(&uni(2), 4).unwrap().delta, expected);
    }

    #[test]
    fn cubic_discriminants() {
        // Δ₁ = −3⁶(27c²−4)c², Δ₂ = −3¹²(27c²+32)c⁶
        let d1 = (&p(&[-4, 0, 27]) * &IntPoly::monomial(int(1), 2)).scale(&int(-729));
        assert_eq!(delta_n(&uni(3), 1).unwrap().delta, d1);
        let d2 = (&p(&[32, 0, 27]) * &IntPoly::monomial(int(1), 6)).scale(&int(-531441));
        assert_eq!(delta_n(&uni(3), 2).unwrap().delta, d2);
    }

    #[test]
    fn cyclotomic_resultants() {
        assert_eq!(p_kl(&uni(2), 1, 2).unwrap(), p(&[3, 4]));
        assert_eq!(p_kl(&uni(2), 1, 3).unwrap(), p(&[7, 4, 16]));
        assert_eq!(p_kl(&uni(2), 1, 4).unwrap(), p(&[5, -8, 16]));
        assert_eq!(p_kl(&uni(2), 2, 2).unwrap(), p(&[-5, -4]));
    }

    #[test]
    fn new_parameter_factors() {
        assert_eq!(q_n(&uni(2), 1).unwrap(), p(&[-1, 4]));
        assert_eq!(q_n(&uni(2), 2).unwrap(), p(&[-1]));
        assert_eq!(q_n(&uni(2), 3).unwrap(), p(&[7, 4]));
        assert_eq!(q_n(&uni(2), 4).unwrap(), p(&[135, 108, 144, 64]));
        assert_eq!(q_n(&uni(3), 1).unwrap(), p(&[4, 0, -27]));
        assert_eq!(q_n(&uni(3), 2).unwrap(), p(&[32, 0, 27]));
        // closed form (−1)^d (d^d c^(d−1) − (d−1)^(d−1)) at d = 5
        assert_eq!(q_n(&uni(5), 1).unwrap(), p(&[256, 0, 0, 0, -3125]));
    }

    #[test]
    fn quadratic_factorizations() {
        let f1 = factor_delta(&uni(2), 1).unwrap();
        assert_eq!((f1.a.clone(), f1.q.clone(), f1.r.clone()), (int(-1), p(&[-1, 4]), p(&[2])));
        let f2 = factor_delta(&uni(2), 2).unwrap();
        assert_eq!((f2.a.clone(), f2.q.clone(), f2.r.clone()), (int(-1), p(&[-1]), p(&[1])));
        assert!(f2.degenerate);
        let f3 = factor_delta(&uni(2), 3).unwrap();
        assert_eq!((f3.a.clone(), f3.q.clone(), f3.r.clone()), (int(-1), p(&[7, 4]), p(&[0, 8])));
        let f4 = factor_delta(&uni(2), 4).unwrap();
        assert_eq!(f4.a, int(-1));
        assert_eq!(f4.q, p(&[135, 108, 144, 64]));
        // R₄ = 2¹²(c+2)c³
        assert_eq!(f4.r, (&p(&[2, 1]) * &IntPoly::monomial(int(1), 3)).scale(&int(4096)));
        for f in [&f1, &f2, &f3, &f4] {
            assert_eq!(f.primitive_sign, 1);
        }
    }

    #[test]
    fn cubic_and_quintic_factorizations() {
        let f1 = factor_delta(&uni(3), 1).unwrap();
        assert_eq!(f1.a, int(1));
        assert_eq!(f1.q, p(&[4, 0, -27]));
        assert_eq!(f1.r, p(&[0, 27]));
        let f5 = factor_delta(&uni(5), 1).unwrap();
        // a₁ = (−1)^(d(d+1)/2) = −1, R₁ = 5¹⁰c⁶, Q₁ = 256 − 3125c⁴
        assert_eq!(f5.a, int(-1));
        assert_eq!(f5.q, p(&[256, 0, 0, 0, -3125]));
        assert_eq!(f5.r, IntPoly::monomial(int(9_765_625), 6));
    }

    #[test]
    fn closed_form_delta1_all_degrees() {
        // Δ₁ = (−1)^(d(d−1)/2) d^(d(d−1)) c^((d−1)(d−2)) (d^d c^(d−1) − (d−1)^(d−1))
        for d in 2..=5u32 {
            let delta = delta_n(&uni(d), 1).unwrap().delta;
            let du = d as usize;
            let sign = if (du * (du - 1) / 2) % 2 == 1 { -1 } else { 1 };
            let scale = num_traits::pow(int(d as i64), du * (du - 1)) * int(sign);
            let mut inner = IntPoly::monomial(num_traits::pow(int(d as i64), du), du - 1);
            inner = &inner - &IntPoly::constant(num_traits::pow(int(d as i64 - 1), du - 1));
            let expected = (&IntPoly::monomial(int(1), (du - 1) * (du - 2)) * &inner).scale(&scale);
            assert_eq!(delta, expected, "closed form Δ₁ for d={d}");
        }
    }

    #[test]
    fn no_common_roots() {
        for n in 1..=4 {
            assert!(!common_root_check(&uni(2), n).unwrap(), "d=2 n={n}");
        }
        for n in 1..=2 {
            assert!(!common_root_check(&uni(3), n).unwrap(), "d=3 n={n}");
        }
    }

    #[test]
    fn separability_and_odd_multiplicity_structure() {
        // Q is separable, and the odd-multiplicity part of Δ matches the
        // primitive part of Q in every verified case
        for (fam, n) in [
            (uni(2), 1u32),
            (uni(2), 3),
            (uni(2), 4),
            (uni(3), 1),
            (uni(3), 2),
        ] {
            let f = factor_delta(&fam, n).unwrap();
            assert!(gcd::is_separable(&f.q), "{} n={n}", fam.id());
            let (_, factors) = gcd::squarefree_decomposition(&f.delta);
            let mut odd = IntPoly::one();
            for (g, m) in &factors {
                if m % 2 == 1 {
                    odd = &odd * g;
                }
            }
            assert_eq!(odd, f.q.primitive_part(), "{} n={n}", fam.id());
        }
    }

    #[test]
    fn symcubic_period3_square_root_and_d3() {
        let s = symcubic_n3_factorization().unwrap();
        let expected_n3 = ParamPoly::new(vec![
            p(&[
                531441, 354294, 236196, -196830, -131220, -34992, -23328, 36936, 24624, -6912,
                -4608, 384, 256,
            ]),
            p(&[-78732, -39366, -8748, -7290, 5832, 5832, -432, -792, 0, 32]),
            p(&[4374, 1458, -324, 486, 396, -72, -48]),
            p(&[-108, -18, 12, 2]),
            p(&[1]),
        ]);
        assert_eq!(s.n3, expected_n3);
        let expected_d3 = p(&[2197, 1690, 715, 376, -113, -206, -35, 16, 4]);
        assert_eq!(s.d3, expected_d3);
        // D₃(1) = 4644, strictly between 68² and 69²
        assert_eq!(s.d3.eval(&int(1)), int(4644));
        // reassemble the discriminant from the extracted pieces
        let rebuilt = (&(&(&s.d3 * &IntPoly::from_i64(&[-27, -3, 12, 4]).pow(2))
            * &(&p(&[-3, 1]).pow(4) * &p(&[3, 1]).pow(4)))
            * &IntPoly::monomial(int(1), 12))
            .scale(&num_traits::pow(int(6), 12));
        assert_eq!(rebuilt, s.disc);
    }
}
