//! Dense exact polynomial arithmetic.
//!
//! Two representations cover everything the crate computes with:
//!
//! * [`IntPoly`] — univariate polynomials over ℤ, used for elements of
//!   ℤ[c] (discriminants, factor polynomials, search targets) and for
//!   specialized univariate polynomials in z or λ;
//! * [`ParamPoly`] — polynomials in a main variable x over ℤ[t]
//!   (see [`param`]), used for iterates, dynatomic polynomials and
//!   multiplier polynomials.
//!
//! Submodules provide gcd/separability ([`gcd`]), resultants and
//! discriminants ([`resultant`]), Sylvester/Bareiss determinants
//! ([`bareiss`]) and exact rational root finding ([`roots`]).
//!
//! Coefficients are stored densely in ascending degree with no trailing
//! zeros; the zero polynomial is the empty sequence. All operations are
//! exact; any internal division that could fail is checked.

pub mod bareiss;
pub mod gcd;
pub mod param;
pub mod resultant;
pub mod roots;

pub use param::ParamPoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::int;
use crate::error::{Error, Result};

/// Dense univariate polynomial over ℤ, coefficients ascending in degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from small integers, ascending degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself (t, c, z or λ depending on context).
    pub fn var() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// c · x^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly { coeffs: v }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a rational.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        )
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    /// Multiplication by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content carrying the sign of the leading coefficient, so that
    /// `self = signed_content · primitive_part` with lc(primitive) > 0.
    pub fn signed_content(&self) -> BigInt {
        let c = self.content();
        if self.leading_coeff().is_negative() {
            -c
        } else {
            c
        }
    }

    /// self / signed_content (positive leading coefficient; 0 stays 0).
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.signed_content();
        self.exact_div_scalar(&c)
            .expect("content divides every coefficient")
    }

    /// Divides every coefficient by an integer, failing if not exact.
    pub fn exact_div_scalar(&self, c: &BigInt) -> Result<IntPoly> {
        if c.is_zero() {
            return Err(Error::DivByZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {a} not divisible by {c}"
                )));
            }
            out.push(q);
        }
        Ok(IntPoly::new(out))
    }

    /// Exact division in ℤ[x]: returns q with q·den = self.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly> {
        if den.is_zero() {
            return Err(Error::DivByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = den.degree().unwrap();
        if dd == 0 {
            return self.exact_div_scalar(&den.coeffs[0]);
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::NotDivisible(format!(
                "degree {nd} < divisor degree {dd}"
            )));
        }
        let lc = den.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "leading coefficient {lc} does not divide {top}"
                )));
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                let prod = &q * d;
                rem[k + i] -= prod;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("nonzero remainder".into()));
        }
        Ok(IntPoly::new(quot))
    }

    /// Exact square root in ℤ[x] (for polynomials with square leading
    /// coefficient), by top-down coefficient matching with a final
    /// re-squaring check.
    pub fn sqrt_exact(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let d = self.degree().unwrap();
        let fail = || Error::NotAPower {
            n: 2,
            context: "univariate square root".into(),
        };
        if d % 2 != 0 {
            return Err(fail());
        }
        let m = d / 2;
        let lc_root = crate::arith::int_sqrt_exact(&self.leading_coeff()).ok_or_else(fail)?;
        let mut r = vec![BigInt::zero(); m + 1];
        r[m] = lc_root.clone();
        let two_lc = int(2) * &lc_root;
        for j in 1..=m {
            // coefficient of x^(2m−j) in r²: 2·r[m]·r[m−j] + Σ known products
            let mut known = BigInt::zero();
            for i in (m - j + 1)..=m {
                let other = 2 * m - j - i;
                if other > i {
                    continue; // counted once below with factor 2
                }
                if other == i {
                    known += &r[i] * &r[i];
                } else if other > m - j {
                    known += int(2) * &r[i] * &r[other];
                }
            }
            let target = self.coeff(2 * m - j) - known;
            let (q, rem) = target.div_rem(&two_lc);
            if !rem.is_zero() {
                return Err(fail());
            }
            r[m - j] = q;
        }
        let root = IntPoly::new(r);
        if &(&root * &root) == self {
            Ok(root)
        } else {
            Err(fail())
        }
    }

    /// Evaluates a polynomial supported on exponents divisible by `step`
    /// at a value u standing for x^step; errors if the support violates
    /// the divisibility (which would make the substitution meaningless).
    pub fn eval_at_power(&self, u: &BigRational, step: usize) -> Result<BigRational> {
        assert!(step >= 1);
        let mut acc = BigRational::zero();
        let mut upow = BigRational::one();
        let mut next = 0usize;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % step != 0 {
                return Err(Error::Internal(format!(
                    "support exponent {i} not divisible by {step}"
                )));
            }
            while next < i / step {
                upow *= u;
                next += 1;
            }
            acc += BigRational::from(c.clone()) * &upow;
        }
        Ok(acc)
    }

    /// Rewrites p(x) = q(x^step) as q; errors if the support violates
    /// divisibility by `step`.
    pub fn compress_support(&self, step: usize) -> Result<IntPoly> {
        assert!(step >= 1);
        let mut out = vec![BigInt::zero(); self.coeffs.len() / step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % step != 0 {
                return Err(Error::Internal(format!(
                    "support exponent {i} not divisible by {step}"
                )));
            }
            out[i / step] = c.clone();
        }
        Ok(IntPoly::new(out))
    }

    /// Coefficients as base-10 strings, ascending degree (wire format).
    pub fn to_dec_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Conventional descending-degree rendering with the given variable.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                s.push_str(&mag.to_string());
            }
            if i > 0 {
                if show_coeff {
                    s.push('·');
                }
                s.push_str(var);
                if i > 1 {
                    s.push_str(&format!("^{i}"));
                }
            }
        }
        s
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c += d;
            }
            out.push(c);
        }
        IntPoly::new(out)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c -= d;
            }
            out.push(c);
        }
        IntPoly::new(out)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn basic_arithmetic() {
        let a = p(&[1, 2, 3]); // 3x²+2x+1
        let b = p(&[-1, 1]); // x−1
        assert_eq!(&a + &b, p(&[0, 3, 3]));
        assert_eq!(&a - &b, p(&[2, 1, 3]));
        assert_eq!(&a * &b, p(&[-1, -1, -1, 3]));
        assert_eq!(a.degree(), Some(2));
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(a.eval(&int(2)), int(17));
        assert_eq!(a.derivative(), p(&[2, 6]));
        assert_eq!(b.pow(2), p(&[1, -2, 1]));
    }

    #[test]
    fn content_and_primitive() {
        let a = p(&[-6, 0, -9]);
        assert_eq!(a.content(), int(3));
        assert_eq!(a.signed_content(), int(-3));
        assert_eq!(a.primitive_part(), p(&[2, 0, 3]));
        assert_eq!(IntPoly::zero().content(), int(0));
    }

    #[test]
    fn exact_division() {
        let q = p(&[2, 0, 5]);
        let d = p(&[-1, 3]);
        let n = &q * &d;
        assert_eq!(n.exact_div(&d).unwrap(), q);
        // remainder 2 ≠ 0
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[-1, 1])),
            Err(Error::NotDivisible(_))
        ));
        // coefficient-level failure: (2x) / 3 has no integer quotient
        assert!(p(&[0, 2]).exact_div(&p(&[3])).is_err());
        assert!(p(&[1]).exact_div(&IntPoly::zero()).is_err());
    }

    #[test]
    fn square_roots() {
        let r = p(&[-3, 2, 7]);
        assert_eq!((&r * &r).sqrt_exact().unwrap(), r);
        // sign convention: the returned root has positive leading coefficient
        let neg = &IntPoly::zero() - &r;
        assert_eq!((&neg * &neg).sqrt_exact().unwrap(), r);
        assert!(p(&[1, 0, 1, 0, 1]).sqrt_exact().is_err());
        assert!(p(&[0, 1]).sqrt_exact().is_err());
    }

    #[test]
    fn support_compression() {
        let a = p(&[4, 0, -1, 0, 9]); // 9x⁴ − x² + 4 = q(x²)
        assert_eq!(a.compress_support(2).unwrap(), p(&[4, -1, 9]));
        assert!(p(&[0, 1]).compress_support(2).is_err());
        let u = crate::arith::rat(1, 3);
        assert_eq!(
            a.eval_at_power(&u, 2).unwrap(),
            crate::arith::rat(4 * 9 - 3 + 9, 9)
        );
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[-4, -4, 1]).display_with("λ"), "λ^2 - 4·λ - 4");
        assert_eq!(p(&[0, 1]).display_with("c"), "c");
        assert_eq!(IntPoly::zero().display_with("c"), "0");
        assert_eq!(p(&[7]).display_with("c"), "7");
    }

    prop_compose! {
        fn small_poly(max_deg: usize)(coeffs in prop::collection::vec(-10i64..=10, 0..=max_deg + 1)) -> IntPoly {
            IntPoly::from_i64(&coeffs)
        }
    }

    proptest! {
        #[test]
        fn mul_div_roundtrip(a in small_poly(6), b in small_poly(6)) {
            prop_assume!(!b.is_zero());
            let n = &a * &b;
            prop_assert_eq!(n.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn sqrt_roundtrip(a in small_poly(5)) {
            prop_assume!(!a.is_zero());
            let sq = &a * &a;
            let r = sq.sqrt_exact().unwrap();
            prop_assert!(r == a.clone() || r == (&IntPoly::zero() - &a));
            prop_assert!(!r.leading_coeff().is_negative());
        }

        #[test]
        fn eval_is_ring_hom(a in small_poly(5), b in small_poly(5), x in -20i64..=20) {
            let x = int(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
