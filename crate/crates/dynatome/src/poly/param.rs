//! Polynomials in a main variable over ℤ[t].
//!
//! [`ParamPoly`] is dense in the main variable x (ascending), with each
//! coefficient an [`IntPoly`] in the parameter t. Concretely x is z or λ
//! and t is the family parameter (c or a). Everything here is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Polynomial in x over ℤ[t], coefficients ascending in x.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamPoly {
    coeffs: Vec<IntPoly>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().is_some_and(IntPoly::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs }
    }

    pub fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(IntPoly::one())
    }

    /// Embeds an element of ℤ[t] as a degree-0 polynomial in x.
    pub fn constant(c: IntPoly) -> Self {
        Self::new(vec![c])
    }

    /// The main variable x.
    pub fn x_var() -> Self {
        Self::new(vec![IntPoly::zero(), IntPoly::one()])
    }

    /// The parameter t, embedded as a constant in x.
    pub fn t_var() -> Self {
        Self::constant(IntPoly::var())
    }

    /// c(t) · x^k.
    pub fn monomial_x(c: IntPoly, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![IntPoly::zero(); k + 1];
        v[k] = c;
        ParamPoly { coeffs: v }
    }

    /// Lifts a univariate polynomial into the main variable (integer
    /// coefficients become constants in t).
    pub fn from_x_poly(p: &IntPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| IntPoly::constant(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the main variable, or `None` if zero.
    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest t-degree over all coefficients, or `None` if zero.
    pub fn degree_t(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(IntPoly::degree).max()
    }

    pub fn coeffs_x(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// Coefficient of x^i as an element of ℤ[t].
    pub fn coeff_x(&self, i: usize) -> IntPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn leading_coeff_x(&self) -> IntPoly {
        self.coeffs.last().cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn is_monic_x(&self) -> bool {
        self.coeffs.last().is_some_and(IntPoly::is_one)
    }

    pub fn derivative_x(&self) -> ParamPoly {
        if self.coeffs.len() <= 1 {
            return ParamPoly::zero();
        }
        ParamPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&crate::arith::int(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn scale_int(&self, c: &BigInt) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn scale_poly(&self, c: &IntPoly) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> ParamPoly {
        let mut base = self.clone();
        let mut acc = ParamPoly::one();
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

    /// Substitutes `inner` for the main variable (Horner scheme); the
    /// parameter t is left untouched.
    pub fn compose_x(&self, inner: &ParamPoly) -> ParamPoly {
        let mut acc = ParamPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &ParamPoly::constant(c.clone());
        }
        acc
    }

    /// Specializes t ↦ t0, producing a univariate polynomial in x.
    pub fn specialize_t(&self, t0: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.eval(t0)).collect())
    }

    /// Specializes x ↦ x0, producing a univariate polynomial in t.
    pub fn specialize_x(&self, x0: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x0) + c;
        }
        acc
    }

    /// Specializes t to a rational, returning ascending x-coefficients.
    pub fn specialize_t_rat(&self, t0: &BigRational) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| c.eval_rat(t0)).collect()
    }

    /// Specializes t = p/q and clears denominators: returns (P, e) with
    /// P ∈ ℤ[x] equal to q^e times the specialized polynomial, where e is
    /// the largest t-degree of any coefficient. The x-roots are unchanged.
    pub fn specialize_t_rat_cleared(&self, t0: &BigRational) -> (IntPoly, usize) {
        let e = self.degree_t().unwrap_or(0);
        let p = t0.numer();
        let q = t0.denom();
        let mut qpow = vec![BigInt::one()];
        for _ in 0..e {
            let last = qpow.last().unwrap() * q;
            qpow.push(last);
        }
        let mut ppow = vec![BigInt::one()];
        for _ in 0..e {
            let last = ppow.last().unwrap() * p;
            ppow.push(last);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let mut acc = BigInt::zero();
                for (k, a) in c.coeffs().iter().enumerate() {
                    if !a.is_zero() {
                        acc += a * &ppow[k] * &qpow[e - k];
                    }
                }
                acc
            })
            .collect();
        (IntPoly::new(coeffs), e)
    }

    /// Evaluates at an integer point (x0, t0).
    pub fn eval_at(&self, x0: &BigInt, t0: &BigInt) -> BigInt {
        self.specialize_t(t0).eval(x0)
    }

    /// Evaluates at a rational point (x0, t0).
    pub fn eval_at_rat(&self, x0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c.eval_rat(t0);
        }
        acc
    }

    /// Exact division in (ℤ[t])[x]: returns q with q·den = self.
    pub fn exact_div_x(&self, den: &ParamPoly) -> Result<ParamPoly> {
        if den.is_zero() {
            return Err(Error::DivByZero);
        }
        if self.is_zero() {
            return Ok(ParamPoly::zero());
        }
        let dd = den.degree_x().unwrap();
        let nd = self.degree_x().unwrap();
        if nd < dd {
            return Err(Error::NotDivisible(format!(
                "x-degree {nd} < divisor x-degree {dd}"
            )));
        }
        let lc = den.leading_coeff_x();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![IntPoly::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(&lc)?;
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&q * d);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("nonzero remainder in x".into()));
        }
        Ok(ParamPoly::new(quot))
    }

    /// Divides every coefficient by an integer, failing if not exact.
    pub fn exact_div_scalar(&self, c: &BigInt) -> Result<ParamPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.exact_div_scalar(c)?);
        }
        Ok(ParamPoly::new(out))
    }

    /// Exact n-th root of a polynomial monic in x, by top-down coefficient
    /// matching followed by re-exponentiation as a mandatory check.
    pub fn nth_root(&self, n: u32) -> Result<ParamPoly> {
        if n == 0 {
            return Err(Error::BadParam("0-th root requested".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        if !self.is_monic_x() {
            return Err(Error::BadParam(
                "n-th root requires a polynomial monic in the main variable".into(),
            ));
        }
        let numeric_n = crate::arith::int(n as i64);
        let deg = self.degree_x().unwrap();
        let fail = || Error::NotAPower {
            n,
            context: "main-variable root extraction".into(),
        };
        if deg % (n as usize) != 0 {
            return Err(fail());
        }
        let m = deg / n as usize;
        let mut root = vec![IntPoly::zero(); m + 1];
        root[m] = IntPoly::one();
        for j in 1..=m {
            // In R^n the coefficient of x^(deg−j) is n·root[m−j] plus terms
            // involving only the already-determined root[m−j+1..=m].
            let partial = ParamPoly::new(root.clone()).pow(n);
            let target = &self.coeff_x(deg - j) - &partial.coeff_x(deg - j);
            root[m - j] = target.exact_div_scalar(&numeric_n).map_err(|_| fail())?;
        }
        let root = ParamPoly::new(root);
        if root.pow(n) == *self {
            Ok(root)
        } else {
            Err(fail())
        }
    }

    /// Nested wire format: outer index = main-variable degree ascending,
    /// inner = ascending t-coefficients as base-10 strings.
    pub fn to_dec_strings(&self) -> Vec<Vec<String>> {
        self.coeffs.iter().map(IntPoly::to_dec_strings).collect()
    }

    /// Descending main-variable rendering with parenthesized coefficients.
    pub fn display_with(&self, main_var: &str, param_var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if i == 0 {
                // the constant term splices in with its own interior signs
                parts.push(c.display_with(param_var));
                continue;
            }
            let var_part = match i {
                1 => main_var.to_string(),
                _ => format!("{main_var}^{i}"),
            };
            let single_term = c.coeffs().iter().filter(|a| !a.is_zero()).count() == 1;
            let term = if c.is_one() {
                var_part
            } else if c.degree() == Some(0) && c.coeff(0) == crate::arith::int(-1) {
                format!("-{var_part}")
            } else if single_term {
                format!("{}·{var_part}", c.display_with(param_var))
            } else if c.leading_coeff().is_negative() {
                format!("-({})·{var_part}", (-c).display_with(param_var))
            } else {
                format!("({})·{var_part}", c.display_with(param_var))
            };
            parts.push(term);
        }
        let mut s = String::new();
        for (k, term) in parts.iter().enumerate() {
            if k == 0 {
                s.push_str(term);
            } else if let Some(rest) = term.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(term);
            }
        }
        s
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", "t"))
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(IntPoly::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c = &c + d;
            }
            out.push(c);
        }
        ParamPoly::new(out)
    }
}

impl Sub<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(IntPoly::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c = &c - d;
            }
            out.push(c);
        }
        ParamPoly::new(out)
    }
}

impl Mul<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ParamPoly::new(out)
    }
}
