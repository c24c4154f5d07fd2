//! Parametric polynomial families and dynatomic polynomials.
//!
//! A family is a monic map f(z) = z^d + a_{d−1}(t)·z^(d−1) + … + a_0(t)
//! with coefficients in ℤ[t]. The two families of primary interest are
//! z^d + t (one critical orbit) and z³ + t·z (odd cubics); arbitrary
//! lower coefficients are accepted for cross-checks with fixed maps.
//!
//! The n-th dynatomic polynomial is the Möbius product
//! Φₙ = ∏_{k|n} (f^∘k − z)^{μ(n/k)}, computed as one exact division of
//! the μ=+1 product by the μ=−1 product. That division is a theorem;
//! if it ever fails the library state is inconsistent and we panic
//! rather than return a value. Φₙ is monic in z of degree
//! ν(n) = Σ_{k|n} μ(n/k)·d^k, and n divides ν(n).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{divisors, int, moebius};
use crate::error::{Error, Result};
use crate::poly::{IntPoly, ParamPoly};

/// Hard cap on the z-degree of any iterate this crate will expand.
pub const DEGREE_CAP: u64 = 100_000;

/// Which family a [`ParamFamily`] represents (drives classification
/// conventions and report labels).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// z^d + t
    Unicritical,
    /// z³ + t·z
    Symcubic,
    /// arbitrary monic map with ℤ[t] lower coefficients
    Custom,
}

/// A monic one-parameter family f(z) = z^d + Σ_{j<d} a_j(t)·z^j.
#[derive(Debug, Clone)]
pub struct ParamFamily {
    kind: FamilyKind,
    degree: u32,
    /// a_0(t) … a_{d−1}(t), ascending in z.
    lower: Vec<IntPoly>,
}

impl ParamFamily {
    /// The family z^d + t, d ≥ 2.
    pub fn unicritical(d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadParam(format!(
                "unicritical family needs degree >= 2, got {d}"
            )));
        }
        let mut lower = vec![IntPoly::zero(); d as usize];
        lower[0] = IntPoly::var();
        Ok(ParamFamily {
            kind: FamilyKind::Unicritical,
            degree: d,
            lower,
        })
    }

    /// The family z³ + t·z.
    pub fn symcubic() -> Self {
        ParamFamily {
            kind: FamilyKind::Symcubic,
            degree: 3,
            lower: vec![IntPoly::zero(), IntPoly::var(), IntPoly::zero()],
        }
    }

    /// A custom monic family with the given lower coefficients
    /// (ascending; exactly d of them), d ≥ 2.
    pub fn custom(d: u32, lower: Vec<IntPoly>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadParam(format!(
                "family degree must be >= 2, got {d}"
            )));
        }
        if lower.len() != d as usize {
            return Err(Error::BadParam(format!(
                "expected {d} lower coefficients, got {}",
                lower.len()
            )));
        }
        Ok(ParamFamily {
            kind: FamilyKind::Custom,
            degree: d,
            lower,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Lower coefficients a_0 … a_{d−1}.
    pub fn lower_coeffs(&self) -> &[IntPoly] {
        &self.lower
    }

    /// Identifier used in reports and serialized output.
    pub fn id(&self) -> String {
        match self.kind {
            FamilyKind::Unicritical => format!("unicritical({})", self.degree),
            FamilyKind::Symcubic => "symcubic".to_string(),
            FamilyKind::Custom => format!("custom(degree {})", self.degree),
        }
    }

    /// The map itself as a polynomial in z over ℤ[t].
    pub fn map(&self) -> ParamPoly {
        let mut coeffs = self.lower.clone();
        coeffs.push(IntPoly::one());
        ParamPoly::new(coeffs)
    }

    /// k-fold composition f^∘k (k ≥ 1), degree-capped.
    pub fn iterate(&self, k: u32) -> Result<ParamPoly> {
        if k == 0 {
            return Err(Error::BadParam("iterate needs k >= 1".into()));
        }
        let mut total: u64 = 1;
        for _ in 0..k {
            total = total.saturating_mul(self.degree as u64);
            if total > DEGREE_CAP {
                return Err(Error::SizeLimit(format!(
                    "iterate degree {}^{k} exceeds cap {DEGREE_CAP}",
                    self.degree
                )));
            }
        }
        let f = self.map();
        let mut acc = f.clone();
        for _ in 1..k {
            acc = acc.compose_x(&f);
        }
        Ok(acc)
    }

    /// ν(n) = Σ_{k|n} μ(n/k)·d^k, the z-degree of Φₙ. Checks n | ν(n).
    pub fn nu(&self, n: u32) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::BadParam("period must be >= 1".into()));
        }
        let d = int(self.degree as i64);
        let mut acc = BigInt::zero();
        for k in divisors(n as u64) {
            let term = num_traits::pow(d.clone(), k as usize);
            let mu = moebius(n as u64 / k);
            acc += int(mu) * term;
        }
        assert!(
            (&acc % int(n as i64)).is_zero(),
            "period {n} must divide nu = {acc}"
        );
        Ok(acc)
    }

    /// ν(n) as a usize, respecting the degree cap.
    pub fn nu_usize(&self, n: u32) -> Result<usize> {
        use num_traits::ToPrimitive;
        let nu = self.nu(n)?;
        nu.to_usize()
            .filter(|&v| v as u64 <= DEGREE_CAP)
            .ok_or_else(|| Error::SizeLimit(format!("nu({n}) = {nu} exceeds cap")))
    }

    /// The n-th dynatomic polynomial Φₙ ∈ ℤ[t][z], monic in z of degree
    /// ν(n).
    pub fn dynatomic_poly(&self, n: u32) -> Result<ParamPoly> {
        if n == 0 {
            return Err(Error::BadParam("period must be >= 1".into()));
        }
        let expected_deg = self.nu_usize(n)?;
        let z = ParamPoly::x_var();
        let mut num = ParamPoly::one();
        let mut den = ParamPoly::one();
        for k in divisors(n as u64) {
            let factor = &self.iterate(k as u32)? - &z;
            match moebius(n as u64 / k) {
                1 => num = &num * &factor,
                -1 => den = &den * &factor,
                _ => {}
            }
        }
        let phi = num
            .exact_div_x(&den)
            .expect("dynatomic Möbius product must divide exactly");
        assert_eq!(
            phi.degree_x(),
            Some(expected_deg),
            "dynatomic degree must equal nu(n)"
        );
        assert!(phi.is_monic_x(), "dynatomic polynomial must be monic");
        Ok(phi)
    }
}

/// The l-th cyclotomic polynomial, by the Möbius product
/// ∏_{k|l} (x^k − 1)^{μ(l/k)} with one exact division.
pub fn cyclotomic(l: u32) -> Result<IntPoly> {
    if l == 0 {
        return Err(Error::BadParam("cyclotomic index must be >= 1".into()));
    }
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for k in divisors(l as u64) {
        let mut factor = IntPoly::monomial(BigInt::one(), k as usize);
        factor = &factor - &IntPoly::one();
        match moebius(l as u64 / k) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    let c = num
        .exact_div(&den)
        .expect("cyclotomic Möbius product must divide exactly");
    assert_eq!(
        c.degree(),
        Some(crate::arith::euler_phi(l as u64) as usize),
        "cyclotomic degree must equal phi(l)"
    );
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn family_constructors() {
        assert!(ParamFamily::unicritical(1).is_err());
        let f = ParamFamily::unicritical(2).unwrap();
        assert_eq!(f.id(), "unicritical(2)");
        assert_eq!(f.map().display_with("z", "c"), "z^2 + c");
        let g = ParamFamily::symcubic();
        assert_eq!(g.map().display_with("z", "a"), "z^3 + a·z");
        assert!(ParamFamily::custom(3, vec![IntPoly::zero()]).is_err());
    }

    #[test]
    fn nu_values() {
        let q = ParamFamily::unicritical(2).unwrap();
        for (n, expected) in [(1, 2), (2, 2), (3, 6), (4, 12), (6, 54)] {
            assert_eq!(q.nu(n).unwrap(), int(expected));
        }
        let c = ParamFamily::unicritical(3).unwrap();
        for (n, expected) in [(1, 3), (2, 6), (3, 24)] {
            assert_eq!(c.nu(n).unwrap(), int(expected));
        }
        assert_eq!(ParamFamily::symcubic().nu(2).unwrap(), int(6));
        assert!(q.nu(0).is_err());
    }

    #[test]
    fn quadratic_dynatomic_closed_forms() {
        let f = ParamFamily::unicritical(2).unwrap();
        // Φ₁ = z² − z + c
        assert_eq!(
            f.dynatomic_poly(1).unwrap().display_with("z", "c"),
            "z^2 - z + c"
        );
        // Φ₂ = z² + z + c + 1
        assert_eq!(
            f.dynatomic_poly(2).unwrap().display_with("z", "c"),
            "z^2 + z + c + 1"
        );
    }

    #[test]
    fn dynatomic_product_recovers_iterates() {
        let families = [
            (ParamFamily::unicritical(2).unwrap(), 4u32),
            (ParamFamily::unicritical(3).unwrap(), 3),
            (ParamFamily::symcubic(), 3),
        ];
        for (f, max_n) in families {
            for n in 1..=max_n {
                let mut prod = ParamPoly::one();
                for k in divisors(n as u64) {
                    prod = &prod * &f.dynatomic_poly(k as u32).unwrap();
                }
                let target = &f.iterate(n).unwrap() - &ParamPoly::x_var();
                assert_eq!(prod, target, "divisor product for {} n={n}", f.id());
            }
        }
    }

    #[test]
    fn parabolic_quadratic_specialization() {
        // at c = −3/4 the period-2 dynatomic polynomial is (z + 1/2)²
        let f = ParamFamily::unicritical(2).unwrap();
        let phi2 = f.dynatomic_poly(2).unwrap();
        let (cleared, _) = phi2.specialize_t_rat_cleared(&rat(-3, 4));
        assert_eq!(cleared, IntPoly::from_i64(&[1, 4, 4])); // (2z+1)²
    }

    #[test]
    fn degree_cap_enforced() {
        let f = ParamFamily::unicritical(2).unwrap();
        assert!(matches!(f.iterate(17), Err(Error::SizeLimit(_))));
        assert!(matches!(f.dynatomic_poly(0), Err(Error::BadParam(_))));
    }

    #[test]
    fn cyclotomic_table() {
        let cases: [(u32, &[i64]); 6] = [
            (1, &[-1, 1]),
            (2, &[1, 1]),
            (3, &[1, 1, 1]),
            (4, &[1, 0, 1]),
            (6, &[1, -1, 1]),
            (12, &[1, 0, -1, 0, 1]),
        ];
        for (l, coeffs) in cases {
            assert_eq!(cyclotomic(l).unwrap(), IntPoly::from_i64(coeffs), "C_{l}");
        }
        assert!(cyclotomic(0).is_err());
    }
}
