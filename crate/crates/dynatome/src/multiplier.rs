//! Multiplier polynomials of periodic cycles.
//!
//! For a family f and period n, the multiplier of a period-n cycle
//! through z₀ is (f^∘n)′(z₀). The polynomial whose roots are exactly the
//! cycle multipliers (with multiplicity, one root per cycle) is
//!
//!   Mₙ = res_z(Φₙ, λ − (f^∘n)′)^(1/n),
//!
//! monic in λ of degree ν(n)/n, with coefficients in ℤ[t]. The resultant
//! is computed by the characteristic-polynomial route (Φₙ is monic in z,
//! so specialization never degenerates) under a rigorous parameter-degree
//! bound derived from the escape radius of the family; the n-th root is
//! extracted by coefficient matching and re-verified by exponentiation.
//!
//! [`verify_coefficient_structure`] checks the integrality and degree
//! pattern of Mₙ for the one-critical-orbit families z^d + t, including
//! membership of all coefficients in the subring ℤ[d^d·t^(d−1)] and the
//! relation between Mₙ(t, 0) and the critical-point value of Φₙ.
//!
//! Irreducibility of Mₙ over ℂ is deliberately not decided here; the
//! checks certify separability of the one-variable slices, nothing more.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{int, rat};
use crate::dynatomic::{FamilyKind, ParamFamily};
use crate::error::{Error, Result};
use crate::poly::resultant::char_resultant;
use crate::poly::{gcd, IntPoly, ParamPoly};

/// A multiplier polynomial Mₙ, monic in λ over ℤ[t].
#[derive(Debug, Clone)]
pub struct MultiplierPoly {
    pub family: String,
    pub period: u32,
    /// Main variable λ, parameter t.
    pub poly: ParamPoly,
}

/// Rigorous bound on the t-degree of res_z(Φₙ, λ − (f^∘n)′).
///
/// Every periodic point of f stays inside the escape radius
/// 1 + 2·max_j |a_j(t)|^(1/(d−j)), which grows like t^(e_z) with
/// e_z = max_j w_j/(d−j) over the nonzero lower coefficients
/// (w_j = deg_t a_j). One application of f′ then grows at most like
/// t^(e′) with e′ = max((d−1)·e_z, max_{j≥1}(w_j + (j−1)·e_z)), a cycle
/// multiplier like t^(n·e′), and the resultant — a product over the ν(n)
/// roots of Φₙ — like t^(ν·n·e′). The bound is exact for the families of
/// interest and is re-verified at two fresh points after interpolation.
pub fn mult_degree_bound(fam: &ParamFamily, n: u32) -> Result<usize> {
    let d = fam.degree() as usize;
    let nu = fam.nu_usize(n)?;
    let mut e_z = BigRational::zero();
    for (j, a) in fam.lower_coeffs().iter().enumerate() {
        if let Some(w) = a.degree() {
            e_z = e_z.max(rat(w as i64, (d - j) as i64));
        }
    }
    let mut e_prime = rat((d - 1) as i64, 1) * &e_z;
    for (j, a) in fam.lower_coeffs().iter().enumerate().skip(1) {
        if let Some(w) = a.degree() {
            let candidate = rat(w as i64, 1) + rat((j - 1) as i64, 1) * &e_z;
            e_prime = e_prime.max(candidate);
        }
    }
    let total = rat((nu * n as usize) as i64, 1) * e_prime;
    Ok(total
        .floor()
        .to_integer()
        .to_usize()
        .expect("degree bound fits in usize"))
}

/// The n-th multiplier polynomial of the family.
pub fn multiplier_poly(fam: &ParamFamily, n: u32) -> Result<MultiplierPoly> {
    if n == 0 {
        return Err(Error::BadParam("period must be >= 1".into()));
    }
    let phi = fam.dynatomic_poly(n)?;
    let g = fam.iterate(n)?.derivative_x();
    let bound = mult_degree_bound(fam, n)?;
    let res = char_resultant(&phi, &g, bound)?;
    let m = res.nth_root(n).map_err(|e| {
        Error::Internal(format!(
            "multiplier resultant for {} period {n} is not an n-th power: {e}",
            fam.id()
        ))
    })?;
    let nu = fam.nu_usize(n)?;
    assert!(m.is_monic_x(), "multiplier polynomial must be monic in λ");
    assert_eq!(
        m.degree_x(),
        Some(nu / n as usize),
        "multiplier degree must be nu(n)/n"
    );
    Ok(MultiplierPoly {
        family: fam.id(),
        period: n,
        poly: m,
    })
}

/// Closed form of M₁ for z^d + t:
/// M₁ = λ·(λ−d)^(d−1) + (−d)^d·t^(d−1).
pub fn closed_form_m1(d: u32) -> Result<MultiplierPoly> {
    let fam = ParamFamily::unicritical(d)?;
    let lam = ParamPoly::x_var();
    let shifted = &lam - &ParamPoly::constant(IntPoly::constant(int(d as i64)));
    let main = &lam * &shifted.pow(d - 1);
    let coeff = num_traits::pow(int(-(d as i64)), d as usize);
    let tail = ParamPoly::constant(IntPoly::monomial(coeff, d as usize - 1));
    Ok(MultiplierPoly {
        family: fam.id(),
        period: 1,
        poly: &main + &tail,
    })
}

/// Result of the coefficient-structure verification for z^d + t.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub family: String,
    pub period: u32,
    /// deg_λ Mₙ = ν(n)/n.
    pub lambda_degree_ok: bool,
    /// deg_t Mₙ = (d−1)·ν(n)/d.
    pub param_degree_ok: bool,
    /// The t-leading coefficient of Mₙ is the constant ±d^ν.
    pub leading_coeff_ok: bool,
    /// Sign observed in the leading coefficient.
    pub leading_sign: i8,
    /// Mₙ(t, λ=0) = ±d^ν · Φₙ(t, z=0)^(d−1).
    pub constant_term_ok: bool,
    pub constant_term_sign: i8,
    /// Every λ-coefficient lies in ℤ[d^d·t^(d−1)].
    pub subring_ok: bool,
    /// Φₙ(t, z=0) is separable.
    pub phi_critical_separable: bool,
    /// Mₙ(t, λ=1) is separable.
    pub m_at_one_separable: bool,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.lambda_degree_ok
            && self.param_degree_ok
            && self.leading_coeff_ok
            && self.constant_term_ok
            && self.subring_ok
            && self.phi_critical_separable
            && self.m_at_one_separable
    }
}

/// Verifies the coefficient structure of Mₙ for the family z^d + t.
pub fn verify_coefficient_structure(fam: &ParamFamily, n: u32) -> Result<StructureReport> {
    if fam.kind() != FamilyKind::Unicritical {
        return Err(Error::WrongFamily(format!(
            "coefficient structure is specific to z^d + t, got {}",
            fam.id()
        )));
    }
    let d = fam.degree() as usize;
    let nu = fam.nu_usize(n)?;
    let m = multiplier_poly(fam, n)?.poly;
    let phi = fam.dynatomic_poly(n)?;

    let lambda_degree_ok = m.degree_x() == Some(nu / n as usize);
    let expected_t_deg = (d - 1) * nu / d;
    let param_degree_ok = m.degree_t() == Some(expected_t_deg);

    // t-leading coefficient across all λ-coefficients
    let d_pow_nu = num_traits::pow(int(d as i64), nu);
    let mut lead = IntPoly::zero(); // polynomial in λ of the t^max coefficients
    let mut lead_coeffs = Vec::new();
    for (k, a) in m.coeffs_x().iter().enumerate() {
        let c = a.coeff(expected_t_deg);
        if !c.is_zero() {
            lead_coeffs.push((k, c.clone()));
        }
        lead = &lead + &IntPoly::monomial(c, k);
    }
    let (leading_coeff_ok, leading_sign) = if lead.degree() == Some(0) {
        let v = lead.coeff(0);
        if v == d_pow_nu {
            (true, 1i8)
        } else if v == -&d_pow_nu {
            (true, -1i8)
        } else {
            (false, 0)
        }
    } else {
        (false, 0)
    };

    // Mₙ(t, 0) = ±d^ν · Φₙ(t, z=0)^(d−1)
    let m_at_zero = m.coeff_x(0);
    let phi_crit = phi.specialize_x(&BigInt::zero());
    let rhs = phi_crit.pow(d as u32 - 1).scale(&d_pow_nu);
    let (constant_term_ok, constant_term_sign) = if m_at_zero == rhs {
        (true, 1i8)
    } else if m_at_zero == (&IntPoly::zero() - &rhs) {
        (true, -1i8)
    } else {
        (false, 0)
    };

    // subring ℤ[d^d·t^(d−1)]: support in multiples of d−1 and the
    // coefficient at t^(k(d−1)) divisible by d^(dk)
    let d_pow_d = num_traits::pow(int(d as i64), d);
    let mut subring_ok = true;
    'outer: for a in m.coeffs_x() {
        for (i, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % (d - 1) != 0 {
                subring_ok = false;
                break 'outer;
            }
            let k = i / (d - 1);
            let modulus = num_traits::pow(d_pow_d.clone(), k);
            if !(c % &modulus).is_zero() {
                subring_ok = false;
                break 'outer;
            }
        }
    }

    let phi_critical_separable = gcd::is_separable(&phi_crit);
    let m_at_one = m.specialize_x(&BigInt::one());
    let m_at_one_separable = gcd::is_separable(&m_at_one);

    Ok(StructureReport {
        family: fam.id(),
        period: n,
        lambda_degree_ok,
        param_degree_ok,
        leading_coeff_ok,
        leading_sign,
        constant_term_ok,
        constant_term_sign,
        subring_ok,
        phi_critical_separable,
        m_at_one_separable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::bareiss;

    fn pp(coeffs: &[&[i64]]) -> ParamPoly {
        ParamPoly::new(coeffs.iter().map(|c| IntPoly::from_i64(c)).collect())
    }

    fn mult(fam: &ParamFamily, n: u32) -> ParamPoly {
        multiplier_poly(fam, n).unwrap().poly
    }

    #[test]
    fn quadratic_multiplier_polynomials() {
        let f = ParamFamily::unicritical(2).unwrap();
        // M₁ = λ² − 2λ + 4c
        assert_eq!(mult(&f, 1), pp(&[&[0, 4], &[-2], &[1]]));
        // M₂ = λ − 4c − 4
        assert_eq!(mult(&f, 2), pp(&[&[-4, -4], &[1]]));
        // M₃ = λ² + (−8c−16)λ + 64c³ + 128c² + 64c + 64
        assert_eq!(mult(&f, 3), pp(&[&[64, 64, 128, 64], &[-16, -8], &[1]]));
        // M₄ = λ³ + (16c²−48)λ² + (−256c⁴−256c³+256c²+768)λ
        //      − 4096c⁶ − 12288c⁵ − 12288c⁴ − 12288c³ − 8192c² − 4096
        assert_eq!(
            mult(&f, 4),
            pp(&[
                &[-4096, 0, -8192, -12288, -12288, -12288, -4096],
                &[768, 0, 256, -256, -256],
                &[-48, 0, 16],
                &[1],
            ])
        );
    }

    #[test]
    fn cubic_multiplier_polynomials() {
        let f = ParamFamily::unicritical(3).unwrap();
        // M₁ = λ³ − 6λ² + 9λ − 27c²
        assert_eq!(mult(&f, 1), pp(&[&[0, 0, -27], &[9], &[-6], &[1]]));
        // M₂ = λ³ − 27λ² + (162c²+243)λ − 729c⁴ − 1458c² − 729
        assert_eq!(
            mult(&f, 2),
            pp(&[&[-729, 0, -1458, 0, -729], &[243, 0, 162], &[-27], &[1]])
        );
    }

    #[test]
    fn odd_cubic_low_periods_factor() {
        let f = ParamFamily::symcubic();
        // M₁ = (λ − a)(λ + 2a − 3)²
        let lam = ParamPoly::x_var();
        let a = ParamPoly::t_var();
        let m1 = &(&lam - &a) * &(&(&lam + &a.scale_int(&int(2))) - &ParamPoly::constant(IntPoly::from_i64(&[3]))).pow(2);
        assert_eq!(mult(&f, 1), m1);
        // M₂ = (λ − 4a² − 12a − 9)(λ + 2a² − 9)²
        let q1 = &lam - &ParamPoly::constant(IntPoly::from_i64(&[9, 12, 4]));
        let q2 = &lam + &ParamPoly::constant(IntPoly::from_i64(&[-9, 0, 2]));
        assert_eq!(mult(&f, 2), &q1 * &q2.pow(2));
    }

    #[test]
    fn closed_form_matches_computed_m1() {
        for d in 2..=6u32 {
            let fam = ParamFamily::unicritical(d).unwrap();
            let computed = mult(&fam, 1);
            let closed = closed_form_m1(d).unwrap().poly;
            assert_eq!(computed, closed, "closed form of M1 for d={d}");
        }
    }

    #[test]
    fn degree_bounds_are_the_frozen_values() {
        let q = ParamFamily::unicritical(2).unwrap();
        assert_eq!(mult_degree_bound(&q, 4).unwrap(), 24);
        let c = ParamFamily::unicritical(3).unwrap();
        assert_eq!(mult_degree_bound(&c, 2).unwrap(), 8);
        assert_eq!(mult_degree_bound(&c, 3).unwrap(), 48);
        assert_eq!(mult_degree_bound(&ParamFamily::symcubic(), 3).unwrap(), 72);
    }

    #[test]
    fn agrees_with_symbolic_sylvester_determinant() {
        // fully symbolic cross-check of the characteristic route on the
        // small instances where the polynomial Bareiss determinant is fast
        for (fam, n) in [
            (ParamFamily::unicritical(2).unwrap(), 1u32),
            (ParamFamily::unicritical(2).unwrap(), 2),
            (ParamFamily::unicritical(3).unwrap(), 1),
            (ParamFamily::symcubic(), 1),
        ] {
            let phi = fam.dynatomic_poly(n).unwrap();
            let g = fam.iterate(n).unwrap().derivative_x();
            let da = phi.degree_x().unwrap();
            let dg = g.degree_x().unwrap();
            let det = bareiss::bareiss_det_param(bareiss::multiplier_sylvester_param(
                &phi, da, &g, dg,
            ));
            let res = char_resultant(&phi, &g, mult_degree_bound(&fam, n).unwrap()).unwrap();
            assert_eq!(det, res, "family {} period {n}", fam.id());
        }
    }

    #[test]
    fn structure_report_quadratic() {
        let f = ParamFamily::unicritical(2).unwrap();
        for n in 1..=3 {
            let rep = verify_coefficient_structure(&f, n).unwrap();
            assert!(rep.pass(), "structure check failed for n={n}: {rep:?}");
        }
        assert!(matches!(
            verify_coefficient_structure(&ParamFamily::symcubic(), 1),
            Err(Error::WrongFamily(_))
        ));
    }

    #[test]
    fn structure_and_slices_period_four() {
        let f = ParamFamily::unicritical(2).unwrap();
        let rep = verify_coefficient_structure(&f, 4).unwrap();
        assert!(rep.pass(), "structure check failed for n=4: {rep:?}");
        // deg_c M₄ = (d−1)ν/d = 6 with coefficient −2¹² at c⁶
        let m4 = mult(&f, 4);
        assert_eq!(m4.degree_t(), Some(6));
        assert_eq!(m4.coeff_x(0).coeff(6), int(-4096));
        // the one-variable slices at λ₀ ∈ {1, −1} stay separable in c
        for n in 1..=4u32 {
            let m = mult(&f, n);
            for lam0 in [1i64, -1] {
                let slice = m.specialize_x(&int(lam0));
                assert!(gcd::is_separable(&slice), "M_{n}(c, {lam0})");
            }
        }
    }
}
