//! Classification of parameters by multiplier rationality.
//!
//! For a parameter value, the period-n multipliers are the roots of the
//! specialized multiplier polynomial Mₙ. A parameter is "rational up to
//! period N" when every Mₙ, n ≤ N, splits into rational linear factors,
//! and "integral" when the roots are integers. The power map and the
//! Chebyshev-like maps are the known exceptional parameters with all
//! multipliers integral at every period; everything else is expected to
//! fail at a small period, and the verification suite samples parameters
//! at bounded height to confirm it.
//!
//! The module also certifies the structured families of partial
//! counterexamples (parametrized choices of the parameter making low
//! periods split), runs the non-existence searches for the quadratic
//! period-4 obstruction (reduction to a Fermat-style cube equation) and
//! for the odd cubic family (quadratic-residue table, a square-sandwich
//! argument along a ≡ 1 mod 8, and a homogeneous rational search), and
//! provides the Chebyshev normalization with its defining identity.
//!
//! For z^d + t the multiplier coefficients live in ℤ[d^d·t^(d−1)]; the
//! classifier therefore evaluates in the coordinate u = t^(d−1), and a
//! wrapper accepts the natural parameter.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, is_rational_square, rat};
use crate::dynatomic::{FamilyKind, ParamFamily};
use crate::error::{Error, Result};
use crate::multiplier::multiplier_poly;
use crate::poly::resultant::discriminant_x;
use crate::poly::roots::{rational_roots, RationalRoots};
use crate::poly::{IntPoly, ParamPoly};

/// Outcome of classifying one parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Conjugate of z ↦ z^d (all multipliers integral, trivially).
    PowerMap,
    /// Chebyshev-like parameter (all multipliers integral).
    ChebyshevLike,
    /// Every checked period splits over ℤ.
    AllIntegerMultipliers,
    /// Every checked period splits over ℚ, at least one root non-integral.
    AllRationalMultipliers,
    /// First period whose multipliers are not all rational.
    FailsAtPeriod(u32),
}

/// Per-period data underlying a classification.
#[derive(Debug, Clone)]
pub struct PeriodClassification {
    pub period: u32,
    /// Exact rational roots of the specialized multiplier polynomial.
    pub multiplier_roots: RationalRoots,
    /// Value of Δₙ at the parameter.
    pub delta_value: BigRational,
    pub delta_is_square: bool,
}

/// Full classification of one parameter value.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub family: String,
    /// Evaluation coordinate (t^(d−1) for z^d + t, t itself otherwise).
    pub u: BigRational,
    /// Natural parameter, when the call supplied one.
    pub c: Option<BigRational>,
    pub max_period: u32,
    pub verdict: Verdict,
    pub periods: Vec<PeriodClassification>,
}

/// Caches the multiplier polynomials and discriminants of a family up to
/// a maximum period so that many parameter values can be classified
/// without recomputing them.
pub struct Classifier {
    fam: ParamFamily,
    step: usize,
    max_period: u32,
    mults: Vec<ParamPoly>,
    deltas: Vec<IntPoly>,
}

/// Clears denominators of rational coefficients into an IntPoly.
fn clear_denominators(coeffs: &[BigRational]) -> IntPoly {
    use num_integer::Integer as NumInteger;
    let mut den = BigInt::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    IntPoly::new(
        coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from(den.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect(),
    )
}

impl Classifier {
    pub fn new(fam: ParamFamily, max_period: u32) -> Result<Self> {
        if max_period == 0 {
            return Err(Error::BadParam("max period must be >= 1".into()));
        }
        let step = match fam.kind() {
            FamilyKind::Unicritical => fam.degree() as usize - 1,
            _ => 1,
        };
        let mut mults = Vec::new();
        let mut deltas = Vec::new();
        for n in 1..=max_period {
            let m = multiplier_poly(&fam, n)?.poly;
            let delta = if m.degree_x() == Some(1) {
                IntPoly::one()
            } else {
                discriminant_x(&m)?
            };
            mults.push(m);
            deltas.push(delta);
        }
        Ok(Classifier {
            fam,
            step,
            max_period,
            mults,
            deltas,
        })
    }

    pub fn family(&self) -> &ParamFamily {
        &self.fam
    }

    pub fn max_period(&self) -> u32 {
        self.max_period
    }

    fn special_verdict(&self, u: &BigRational) -> Option<Verdict> {
        match self.fam.kind() {
            FamilyKind::Unicritical => {
                if u.is_zero() {
                    Some(Verdict::PowerMap)
                } else if self.fam.degree() == 2 && *u == rat(-2, 1) {
                    Some(Verdict::ChebyshevLike)
                } else {
                    None
                }
            }
            FamilyKind::Symcubic => {
                if u.is_zero() {
                    Some(Verdict::PowerMap)
                } else if *u == rat(3, 1) || *u == rat(-3, 1) {
                    Some(Verdict::ChebyshevLike)
                } else {
                    None
                }
            }
            FamilyKind::Custom => None,
        }
    }

    /// Classifies in the evaluation coordinate u (= t^(d−1) for z^d + t).
    pub fn classify_u(&self, u: &BigRational) -> Result<ClassificationReport> {
        let special = self.special_verdict(u);
        let mut periods = Vec::new();
        let mut failed_at: Option<u32> = None;
        for n in 1..=self.max_period {
            let m = &self.mults[(n - 1) as usize];
            let coeffs: Vec<BigRational> = m
                .coeffs_x()
                .iter()
                .map(|c| c.eval_at_power(u, self.step))
                .collect::<Result<_>>()?;
            let specialized = clear_denominators(&coeffs);
            let multiplier_roots = rational_roots(&specialized);
            let delta_value = self.deltas[(n - 1) as usize].eval_at_power(u, self.step)?;
            let delta_is_square = is_rational_square(&delta_value).is_some();
            let splits = multiplier_roots.splits_over_q;
            periods.push(PeriodClassification {
                period: n,
                multiplier_roots,
                delta_value,
                delta_is_square,
            });
            if !splits && failed_at.is_none() {
                failed_at = Some(n);
                if special.is_none() {
                    break; // later periods cannot change the verdict
                }
            }
        }
        let verdict = if let Some(v) = special {
            v
        } else if let Some(n) = failed_at {
            Verdict::FailsAtPeriod(n)
        } else if periods.iter().all(|p| p.multiplier_roots.splits_over_z) {
            Verdict::AllIntegerMultipliers
        } else {
            Verdict::AllRationalMultipliers
        };
        Ok(ClassificationReport {
            family: self.fam.id(),
            u: u.clone(),
            c: None,
            max_period: self.max_period,
            verdict,
            periods,
        })
    }

    /// Classifies in the natural parameter (t itself).
    pub fn classify_param(&self, c: &BigRational) -> Result<ClassificationReport> {
        let u = num_traits::pow(c.clone(), self.step);
        let mut report = self.classify_u(&u)?;
        report.c = Some(c.clone());
        Ok(report)
    }
}

/// One-shot classification of a natural parameter value.
pub fn classify_c(fam: &ParamFamily, c: &BigRational, max_period: u32) -> Result<ClassificationReport> {
    Classifier::new(fam.clone(), max_period)?.classify_param(c)
}

// ---------------------------------------------------------------------------
// parametrized families of low-period rational multipliers
// ---------------------------------------------------------------------------

/// The certified parameter families making low periods split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParametrizationKind {
    /// c = (1−m²)/4: periods 1 and 2 split over ℚ (over ℤ for odd m).
    QuadIntPeriods12,
    /// c = −(r⁴+3r²+4)/(4r²), r ≠ 0: Δ₁ and Δ₃ are rational squares, so
    /// periods 1 and 3 split over ℚ.
    QuadRatPeriods13,
    /// u = c² = 4(r²−1)²/(r²+3)³: M₁ of z³+c has a rational root and a
    /// square discriminant.
    CubicRatFixed,
}

#[derive(Debug, Clone)]
pub struct ParametrizationCheck {
    pub kind: ParametrizationKind,
    pub input: BigRational,
    /// Natural parameter where the kind defines one.
    pub c: Option<BigRational>,
    /// Evaluation coordinate actually used.
    pub u: BigRational,
    pub verified: bool,
    pub details: String,
}

/// Verifies one member of a parametrized family exactly.
pub fn verify_parametrization(
    kind: ParametrizationKind,
    input: &BigRational,
) -> Result<ParametrizationCheck> {
    match kind {
        ParametrizationKind::QuadIntPeriods12 => {
            if !input.is_integer() {
                return Err(Error::BadParam(format!(
                    "this parametrization takes an integer, got {input}"
                )));
            }
            let m = input.clone();
            let c = (BigRational::one() - &m * &m) / rat(4, 1);
            let fam = ParamFamily::unicritical(2)?;
            let rep = classify_c(&fam, &c, 2)?;
            let expected1: HashSet<BigRational> =
                [BigRational::one() - &m, BigRational::one() + &m]
                    .into_iter()
                    .collect();
            let got1: HashSet<BigRational> = rep.periods[0]
                .multiplier_roots
                .roots
                .iter()
                .map(|(r, _)| r.clone())
                .collect();
            let root2 = rat(4, 1) * &c + rat(4, 1);
            let got2: Vec<BigRational> = rep.periods[1]
                .multiplier_roots
                .roots
                .iter()
                .map(|(r, _)| r.clone())
                .collect();
            let verified = rep.periods[0].multiplier_roots.splits_over_q
                && rep.periods[1].multiplier_roots.splits_over_q
                && got1 == expected1
                && got2 == vec![root2.clone()];
            Ok(ParametrizationCheck {
                kind,
                input: input.clone(),
                c: Some(c.clone()),
                u: c,
                verified,
                details: format!(
                    "period-1 multipliers 1±{m}, period-2 multiplier {root2}"
                ),
            })
        }
        ParametrizationKind::QuadRatPeriods13 => {
            if input.is_zero() {
                return Err(Error::BadParam("r must be nonzero".into()));
            }
            let r2 = input * input;
            let c = -(&r2 * &r2 + rat(3, 1) * &r2 + rat(4, 1)) / (rat(4, 1) * &r2);
            let fam = ParamFamily::unicritical(2)?;
            let cl = Classifier::new(fam, 3)?;
            let rep = cl.classify_param(&c)?;
            let d1 = &rep.periods[0];
            let d3 = &rep.periods[2];
            let verified = d1.delta_is_square
                && d3.delta_is_square
                && d1.multiplier_roots.splits_over_q
                && d3.multiplier_roots.splits_over_q;
            Ok(ParametrizationCheck {
                kind,
                input: input.clone(),
                c: Some(c.clone()),
                u: c,
                verified,
                details: format!(
                    "Δ₁ = {}, Δ₃ = {}",
                    d1.delta_value, d3.delta_value
                ),
            })
        }
        ParametrizationKind::CubicRatFixed => {
            let r2 = input * input;
            let num = rat(4, 1) * (&r2 - BigRational::one()) * (&r2 - BigRational::one());
            let den = num_traits::pow(&r2 + rat(3, 1), 3);
            let u = num / den;
            let fam = ParamFamily::unicritical(3)?;
            let cl = Classifier::new(fam, 1)?;
            let rep = cl.classify_u(&u)?;
            let p1 = &rep.periods[0];
            let verified = !p1.multiplier_roots.roots.is_empty() && p1.delta_is_square;
            Ok(ParametrizationCheck {
                kind,
                input: input.clone(),
                c: None,
                u,
                verified,
                details: format!(
                    "fixed-point multipliers {:?}, Δ₁ = {}",
                    p1.multiplier_roots.roots, p1.delta_value
                ),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// quadratic period-4 obstruction: reduction to a cube equation
// ---------------------------------------------------------------------------

/// Outcome of the reduction of "Δ₄ is a rational square" to a
/// Fermat-style cube equation.
#[derive(Debug, Clone)]
pub struct FermatReduction {
    /// The polynomial identity
    /// (r−18)³ − (r+18)³ − 108(4c+3)³ = −108(64c³+144c²+108c+135+r²)
    /// holds in ℤ[c, r].
    pub identity_ok: bool,
    /// Parameters (c, r) with r² = −(64c³+144c²+108c+135), c ≠ −3/4,
    /// found up to the height bound (expected empty).
    pub admissible: Vec<(BigRational, BigRational)>,
    /// For every admissible pair, a = (r−18)/(3(4c+3)) and
    /// b = −(r+18)/(3(4c+3)) satisfy a³ + b³ = 4 (vacuous when the
    /// search is empty).
    pub cube_relation_ok: bool,
    pub height_bound: u32,
}

/// The cube pair a = (r−18)/(3(4c+3)), b = −(r+18)/(3(4c+3)). When
/// r² = −(64c³+144c²+108c+135), the pair satisfies a³ + b³ = 4.
pub fn fermat_cube_pair(
    c: &BigRational,
    r: &BigRational,
) -> Result<(BigRational, BigRational)> {
    let denom = rat(3, 1) * (rat(4, 1) * c + rat(3, 1));
    if denom.is_zero() {
        return Err(Error::DivByZero);
    }
    let a = (r - rat(18, 1)) / &denom;
    let b = -(r + rat(18, 1)) / &denom;
    Ok((a, b))
}

/// Verifies the reduction identity symbolically and searches for
/// admissible parameters up to the given height.
pub fn reduction_to_fermat(height_bound: u32) -> Result<FermatReduction> {
    // identity in ℤ[c][r]: main variable r, parameter c
    let r = ParamPoly::x_var();
    let c18 = ParamPoly::constant(IntPoly::from_i64(&[18]));
    let q4 = IntPoly::from_i64(&[135, 108, 144, 64]);
    let brace = IntPoly::from_i64(&[3, 4]); // 4c + 3
    let lhs = &(&(&r - &c18).pow(3) - &(&r + &c18).pow(3))
        - &ParamPoly::constant(brace.pow(3).scale(&int(108)));
    let rhs_inner = &ParamPoly::constant(q4.clone()) + &(&r * &r);
    let rhs = rhs_inner.scale_int(&int(-108));
    let identity_ok = lhs == rhs;

    let mut admissible = Vec::new();
    let mut cube_relation_ok = true;
    let bad_c = rat(-3, 4);
    let h = height_bound as i64;
    for q in 1..=h {
        for p in -h..=h {
            if num_integer::gcd(p.unsigned_abs(), q.unsigned_abs()) != 1 {
                continue;
            }
            let c = rat(p, q);
            if c == bad_c {
                continue;
            }
            let val = -q4.eval_rat(&c);
            if val.is_negative() {
                continue;
            }
            if let Some(rv) = is_rational_square(&val) {
                // verify the cube relation a³ + b³ = 4 for the hit
                let (a, b) = fermat_cube_pair(&c, &rv)?;
                if num_traits::pow(a, 3) + num_traits::pow(b, 3) != rat(4, 1) {
                    cube_relation_ok = false;
                }
                admissible.push((c, rv));
            }
        }
    }
    Ok(FermatReduction {
        identity_ok,
        admissible,
        cube_relation_ok,
        height_bound,
    })
}

// ---------------------------------------------------------------------------
// odd cubic family: D₃ is never a square at integer or small rational a
// ---------------------------------------------------------------------------

/// The square-sandwich witness polynomial along a = 1 + 8b.
fn sandwich_witness() -> IntPoly {
    IntPoly::from_i64(&[-50, -252, 720, 6144, 8192])
}

/// Exceptional b-range handled by direct testing.
pub const D3_EXCEPTIONAL_RANGE: (i64, i64) = (-7, 13);

/// Outcome of the integer non-square argument for D₃.
#[derive(Debug, Clone)]
pub struct D3IntegerArgument {
    /// Residues a mod 32 where D₃(a) is a square mod 32.
    pub allowed_residues: Vec<u32>,
    /// The allowed residues are exactly a ≡ 1 (mod 8).
    pub residues_force_one_mod_eight: bool,
    /// D₃(1+8b) is directly a non-square for b in the exceptional range.
    pub exceptional_nonsquare: bool,
    /// L(b)² < D₃(1+8b) < (L(b)+1)² for all |b| ≤ bound outside the
    /// exceptional range, with L the witness polynomial.
    pub sandwich_ok: bool,
    pub sandwich_bound: i64,
}

impl D3IntegerArgument {
    pub fn pass(&self) -> bool {
        self.residues_force_one_mod_eight && self.exceptional_nonsquare && self.sandwich_ok
    }
}

/// Runs the integer non-square argument for D₃ up to the given sandwich
/// bound on |b| (a = 1 + 8b).
pub fn d3_integer_argument(sandwich_bound: i64) -> Result<D3IntegerArgument> {
    let d3 = crate::discfactor::symcubic_n3_factorization()?.d3;
    let squares_mod_32: HashSet<u32> = (0u32..32).map(|x| (x * x) % 32).collect();
    let mut allowed = Vec::new();
    for a in 0u32..32 {
        let v = d3.eval(&int(a as i64));
        let residue = ((&v % int(32)) + int(32)) % int(32);
        let residue: u32 = residue.to_string().parse().unwrap();
        if squares_mod_32.contains(&residue) {
            allowed.push(a);
        }
    }
    let residues_force_one_mod_eight = allowed == vec![1, 9, 17, 25];

    let (ex_lo, ex_hi) = D3_EXCEPTIONAL_RANGE;
    let mut exceptional_nonsquare = true;
    for b in ex_lo..=ex_hi {
        let v = d3.eval(&int(1 + 8 * b));
        if crate::arith::int_sqrt_exact(&v).is_some() {
            exceptional_nonsquare = false;
        }
    }

    let witness = sandwich_witness();
    let mut sandwich_ok = true;
    for b in -sandwich_bound..=sandwich_bound {
        if (ex_lo..=ex_hi).contains(&b) {
            continue;
        }
        let v = d3.eval(&int(1 + 8 * b));
        let l = witness.eval(&int(b));
        if l.is_negative() {
            sandwich_ok = false;
            break;
        }
        let lsq = &l * &l;
        let next = (&l + 1) * (&l + 1);
        if !(lsq < v && v < next) {
            sandwich_ok = false;
            break;
        }
    }
    Ok(D3IntegerArgument {
        allowed_residues: allowed,
        residues_force_one_mod_eight,
        exceptional_nonsquare,
        sandwich_ok,
        sandwich_bound,
    })
}

/// Searches for rational a of height ≤ bound with D₃(a) a rational
/// square (via the homogenization q⁸·D₃(p/q)); expected empty.
pub fn d3_rational_search(height_bound: u32) -> Result<Vec<BigRational>> {
    let d3 = crate::discfactor::symcubic_n3_factorization()?.d3;
    let coeffs = d3.coeffs().to_vec();
    assert_eq!(coeffs.len(), 9, "D3 must have degree 8");
    let h = height_bound as i64;
    let mut hits = Vec::new();
    for q in 1..=h {
        for p in -h..=h {
            if num_integer::gcd(p.unsigned_abs(), q.unsigned_abs()) != 1 {
                continue;
            }
            // H(p, q) = q⁸ D₃(p/q) = Σ dᵢ pⁱ q^(8−i); square iff D₃(p/q) is
            let (bp, bq) = (int(p), int(q));
            let mut acc = BigInt::zero();
            let mut ppow = BigInt::one();
            let mut qpows = vec![BigInt::one()];
            for _ in 0..8 {
                let last = qpows.last().unwrap() * &bq;
                qpows.push(last);
            }
            for (i, d) in coeffs.iter().enumerate() {
                acc += d * &ppow * &qpows[8 - i];
                ppow *= &bp;
            }
            if !acc.is_negative() && crate::arith::int_sqrt_exact(&acc).is_some() {
                hits.push(rat(p, q));
            }
        }
    }
    Ok(hits)
}

// ---------------------------------------------------------------------------
// Chebyshev normalization
// ---------------------------------------------------------------------------

/// Monic Chebyshev-like polynomials: T₀ = 2, T₁ = z,
/// T_{m+1} = z·T_m − T_{m−1}; they satisfy T_m(z + 1/z)·z^m = z^(2m) + 1.
pub fn chebyshev_poly(m: u32) -> IntPoly {
    let mut prev = IntPoly::from_i64(&[2]);
    let mut cur = IntPoly::var();
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &(&IntPoly::var() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Checks T_d(z + 1/z)·z^d = z^(2d) + 1 for all d ≤ max_d.
pub fn chebyshev_identity_check(max_d: u32) -> Result<bool> {
    for d in 1..=max_d {
        let t = chebyshev_poly(d);
        // T_d((z²+1)/z)·z^d = Σ tᵢ (z²+1)ⁱ z^(d−i)
        let w = IntPoly::from_i64(&[1, 0, 1]);
        let mut acc = IntPoly::zero();
        for (i, c) in t.coeffs().iter().enumerate() {
            let term = w.pow(i as u32).scale(c).shift((d as usize) - i);
            acc = &acc + &term;
        }
        let mut expected = IntPoly::monomial(BigInt::one(), 2 * d as usize);
        expected = &expected + &IntPoly::one();
        if acc != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every multiplier polynomial of a fixed (parameter-free) map
/// splits over ℤ up to the given period.
pub fn verify_integer_multipliers(fam: &ParamFamily, max_period: u32) -> Result<bool> {
    if fam.lower_coeffs().iter().any(|c| c.degree().unwrap_or(0) > 0) {
        return Err(Error::WrongFamily(
            "integer-multiplier verification needs a parameter-free map".into(),
        ));
    }
    for n in 1..=max_period {
        let m = multiplier_poly(fam, n)?.poly;
        let coeffs: Vec<BigInt> = m.coeffs_x().iter().map(|c| c.coeff(0)).collect();
        let rr = rational_roots(&IntPoly::new(coeffs));
        if !rr.splits_over_z {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// interval and reversal identities for z^d + t
// ---------------------------------------------------------------------------

/// Sign-certified nonnegativity intervals of the cubic-family
/// discriminants in the coordinate u = c².
#[derive(Debug, Clone)]
pub struct IntervalCheck {
    pub delta1_roots: Vec<(BigRational, u32)>,
    pub delta2_roots: Vec<(BigRational, u32)>,
    /// Δ₁(u) ≥ 0 exactly on [0, 4/27].
    pub delta1_interval_ok: bool,
    /// Δ₂(u) ≥ 0 exactly on [−32/27, 0].
    pub delta2_interval_ok: bool,
    /// The two intervals meet only at u = 0.
    pub intersection_only_origin: bool,
}

impl IntervalCheck {
    pub fn pass(&self) -> bool {
        self.delta1_interval_ok && self.delta2_interval_ok && self.intersection_only_origin
    }
}

/// Certifies where Δ₁ and Δ₂ of z³ + c are nonnegative in u = c²: the
/// rational root finder pins every real sign change (both polynomials
/// split over ℚ), and exact sample evaluations fix the sign between
/// consecutive roots.
pub fn cubic_interval_check() -> Result<IntervalCheck> {
    let fam = ParamFamily::unicritical(3)?;
    let cl = Classifier::new(fam, 2)?;
    let d1u = cl.deltas[0].compress_support(2)?;
    let d2u = cl.deltas[1].compress_support(2)?;
    let r1 = rational_roots(&d1u);
    let r2 = rational_roots(&d2u);

    // Δ₁(u) = −3⁶·u·(27u−4): both roots rational, so the sign pattern is
    // fixed by exact evaluation between and outside them
    let delta1_interval_ok = r1.splits_over_q
        && r1.roots == vec![(rat(0, 1), 1), (rat(4, 27), 1)]
        && d1u.eval_rat(&rat(-1, 1)).is_negative()
        && d1u.eval_rat(&rat(2, 27)).is_positive()
        && d1u.eval_rat(&rat(1, 1)).is_negative();
    let delta2_interval_ok = r2.splits_over_q
        && r2.roots == vec![(rat(-32, 27), 1), (rat(0, 1), 3)]
        && d2u.eval_rat(&rat(-2, 1)).is_negative()
        && d2u.eval_rat(&rat(-1, 1)).is_positive()
        && d2u.eval_rat(&rat(1, 1)).is_negative();
    // [0, 4/27] ∩ [−32/27, 0] = {0}
    let intersection_only_origin = delta1_interval_ok && delta2_interval_ok;
    Ok(IntervalCheck {
        delta1_roots: r1.roots,
        delta2_roots: r2.roots,
        delta1_interval_ok,
        delta2_interval_ok,
        intersection_only_origin,
    })
}

/// Checks the reversal identity λ^d · M₁(1/λ + d) =
/// (−d)^d·t^(d−1)·λ^d + d·λ + 1 for the family z^d + t.
pub fn rolle_reversal_check(d: u32) -> Result<bool> {
    let fam = ParamFamily::unicritical(d)?;
    let m1 = multiplier_poly(&fam, 1)?.poly;
    let deg = m1.degree_x().unwrap();
    assert_eq!(deg, d as usize);
    let shifted = m1.compose_x(
        &(&ParamPoly::x_var() + &ParamPoly::constant(IntPoly::constant(int(d as i64)))),
    );
    let mut rev = vec![IntPoly::zero(); deg + 1];
    for i in 0..=deg {
        rev[deg - i] = shifted.coeff_x(i);
    }
    let reversed = ParamPoly::new(rev);
    let lead = num_traits::pow(int(-(d as i64)), d as usize);
    let expected = &(&ParamPoly::monomial_x(IntPoly::monomial(lead, d as usize - 1), d as usize)
        + &ParamPoly::monomial_x(IntPoly::constant(int(d as i64)), 1))
        + &ParamPoly::one();
    Ok(reversed == expected)
}

/// Checks ∂M₁/∂λ = d·(λ−1)·(λ−d)^(d−2) for the family z^d + t.
pub fn m1_derivative_check(d: u32) -> Result<bool> {
    let fam = ParamFamily::unicritical(d)?;
    let m1 = multiplier_poly(&fam, 1)?.poly;
    let lam = ParamPoly::x_var();
    let lin1 = &lam - &ParamPoly::one();
    let lind = &lam - &ParamPoly::constant(IntPoly::constant(int(d as i64)));
    let expected = (&lin1 * &lind.pow(d - 2)).scale_int(&int(d as i64));
    Ok(m1.derivative_x() == expected)
}

// ---------------------------------------------------------------------------
// deterministic parameter sampling
// ---------------------------------------------------------------------------

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministically samples `count` distinct rationals of height ≤
/// `max_height`, excluding the given values. The generator is a fixed
/// 64-bit mixer so results are identical across platforms and runs.
pub fn sample_rationals(
    count: usize,
    max_height: i64,
    exclude: &[BigRational],
    seed: u64,
) -> Vec<BigRational> {
    assert!(max_height >= 1);
    let mut state = seed;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = (splitmix64(&mut state) % (2 * max_height as u64 + 1)) as i64 - max_height;
        let q = (splitmix64(&mut state) % max_height as u64) as i64 + 1;
        let r = rat(p, q);
        if exclude.contains(&r) {
            continue;
        }
        if seen.insert(r.to_string()) {
            out.push(r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad() -> ParamFamily {
        ParamFamily::unicritical(2).unwrap()
    }

    #[test]
    fn special_parameters() {
        let cl = Classifier::new(quad(), 3).unwrap();
        assert_eq!(
            cl.classify_param(&rat(0, 1)).unwrap().verdict,
            Verdict::PowerMap
        );
        assert_eq!(
            cl.classify_param(&rat(-2, 1)).unwrap().verdict,
            Verdict::ChebyshevLike
        );
        let sc = Classifier::new(ParamFamily::symcubic(), 2).unwrap();
        assert_eq!(sc.classify_param(&rat(0, 1)).unwrap().verdict, Verdict::PowerMap);
        assert_eq!(
            sc.classify_param(&rat(-3, 1)).unwrap().verdict,
            Verdict::ChebyshevLike
        );
        assert_eq!(
            sc.classify_param(&rat(3, 1)).unwrap().verdict,
            Verdict::ChebyshevLike
        );
    }

    #[test]
    fn chebyshev_parameter_splits_every_checked_period() {
        // the verdict is special-cased, but the underlying periods do split
        let cl = Classifier::new(quad(), 4).unwrap();
        let rep = cl.classify_param(&rat(-2, 1)).unwrap();
        for p in &rep.periods {
            assert!(p.multiplier_roots.splits_over_z, "period {}", p.period);
        }
        // M₃(−2) = λ² − 64 and M₄(−2) = (λ+16)²(λ−16)
        let m3: Vec<(BigRational, u32)> = rep.periods[2].multiplier_roots.roots.clone();
        assert_eq!(m3, vec![(rat(-8, 1), 1), (rat(8, 1), 1)]);
        let m4 = rep.periods[3].multiplier_roots.roots.clone();
        assert_eq!(m4, vec![(rat(-16, 1), 2), (rat(16, 1), 1)]);
    }

    #[test]
    fn generic_parameters_fail_early() {
        let cl = Classifier::new(quad(), 4).unwrap();
        // c = −1: M₁ = λ²−2λ−4 is irreducible
        assert_eq!(
            cl.classify_param(&rat(-1, 1)).unwrap().verdict,
            Verdict::FailsAtPeriod(1)
        );
        // c = 1/4: M₁ = (λ−1)², M₂ = λ−5, fails at period 3
        let rep = cl.classify_param(&rat(1, 4)).unwrap();
        assert_eq!(rep.verdict, Verdict::FailsAtPeriod(3));
        assert_eq!(
            rep.periods[0].multiplier_roots.roots,
            vec![(rat(1, 1), 2)]
        );
        // c = −3/4 (parabolic): M₂ = λ − 1, fails at period 3
        let rep = cl.classify_param(&rat(-3, 4)).unwrap();
        assert_eq!(rep.verdict, Verdict::FailsAtPeriod(3));
        assert_eq!(rep.periods[1].multiplier_roots.roots, vec![(rat(1, 1), 1)]);
    }

    #[test]
    fn cubic_classifier_uses_subring_coordinate() {
        let cl = Classifier::new(ParamFamily::unicritical(3).unwrap(), 2).unwrap();
        // u = 4/27 (c² = 4/27): M₁ = (λ−1)²(λ−4), M₂ has no rational root
        let rep = cl.classify_u(&rat(4, 27)).unwrap();
        assert_eq!(rep.verdict, Verdict::FailsAtPeriod(2));
        assert_eq!(
            rep.periods[0].multiplier_roots.roots,
            vec![(rat(1, 1), 2), (rat(4, 1), 1)]
        );
        // at u = 1 the classifier agrees with the natural parameter c = 1
        let ru = cl.classify_u(&rat(1, 1)).unwrap();
        let rc = cl.classify_param(&rat(1, 1)).unwrap();
        assert_eq!(ru.verdict, rc.verdict);
    }

    #[test]
    fn parametrization_families() {
        // m = 3: c = −2 — the Chebyshev parameter is a member
        let chk = verify_parametrization(ParametrizationKind::QuadIntPeriods12, &rat(3, 1))
            .unwrap();
        assert!(chk.verified);
        assert_eq!(chk.c, Some(rat(-2, 1)));
        for m in [0i64, 1, 2, 5, 7, 10] {
            let chk =
                verify_parametrization(ParametrizationKind::QuadIntPeriods12, &rat(m, 1)).unwrap();
            assert!(chk.verified, "m = {m}");
        }
        assert!(verify_parametrization(ParametrizationKind::QuadIntPeriods12, &rat(1, 2)).is_err());

        // r = 1: c = −2, Δ₁ = 36, Δ₃ = 256
        let chk = verify_parametrization(ParametrizationKind::QuadRatPeriods13, &rat(1, 1))
            .unwrap();
        assert!(chk.verified);
        assert_eq!(chk.c, Some(rat(-2, 1)));
        assert!(chk.details.contains("36") && chk.details.contains("256"));
        for r in [rat(2, 1), rat(1, 2), rat(-3, 2), rat(5, 3)] {
            let chk = verify_parametrization(ParametrizationKind::QuadRatPeriods13, &r).unwrap();
            assert!(chk.verified, "r = {r}");
        }
        assert!(verify_parametrization(ParametrizationKind::QuadRatPeriods13, &rat(0, 1)).is_err());

        // r = 0: u = 4/27, multipliers {1, 1, 4}
        let chk = verify_parametrization(ParametrizationKind::CubicRatFixed, &rat(0, 1)).unwrap();
        assert!(chk.verified);
        assert_eq!(chk.u, rat(4, 27));
        for r in [rat(1, 2), rat(2, 1), rat(-1, 3), rat(3, 1)] {
            let chk = verify_parametrization(ParametrizationKind::CubicRatFixed, &r).unwrap();
            assert!(chk.verified, "r = {r}");
        }
    }

    #[test]
    fn fermat_reduction_is_empty_and_identically_true() {
        let red = reduction_to_fermat(12).unwrap();
        assert!(red.identity_ok);
        assert!(red.admissible.is_empty());
        assert!(red.cube_relation_ok);
    }

    #[test]
    fn fermat_cube_pair_satisfies_offset_identity() {
        // off the curve, a³ + b³ = 4 − 4(Q₄(c) + r²)/(4c+3)³ exactly
        let q4 = IntPoly::from_i64(&[135, 108, 144, 64]);
        for (c, r) in [
            (rat(0, 1), rat(1, 1)),
            (rat(1, 2), rat(-3, 1)),
            (rat(-2, 1), rat(7, 5)),
        ] {
            let (a, b) = fermat_cube_pair(&c, &r).unwrap();
            let brace = rat(4, 1) * &c + rat(3, 1);
            let expected = rat(4, 1)
                - rat(4, 1) * (q4.eval_rat(&c) + &r * &r) / num_traits::pow(brace, 3);
            assert_eq!(num_traits::pow(a, 3) + num_traits::pow(b, 3), expected);
        }
        assert!(matches!(
            fermat_cube_pair(&rat(-3, 4), &rat(1, 1)),
            Err(Error::DivByZero)
        ));
    }

    #[test]
    fn d3_integer_argument_small_bound() {
        let arg = d3_integer_argument(100).unwrap();
        assert_eq!(arg.allowed_residues, vec![1, 9, 17, 25]);
        assert!(arg.residues_force_one_mod_eight);
        assert!(arg.exceptional_nonsquare);
        assert!(arg.sandwich_ok);
        assert!(arg.pass());
    }

    #[test]
    fn d3_rational_search_small() {
        assert!(d3_rational_search(12).unwrap().is_empty());
    }

    #[test]
    fn chebyshev_normalization() {
        assert_eq!(chebyshev_poly(0), IntPoly::from_i64(&[2]));
        assert_eq!(chebyshev_poly(1), IntPoly::var());
        assert_eq!(chebyshev_poly(2), IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(chebyshev_poly(3), IntPoly::from_i64(&[0, -3, 0, 1]));
        assert_eq!(chebyshev_poly(4), IntPoly::from_i64(&[2, 0, -4, 0, 1]));
        assert!(chebyshev_identity_check(10).unwrap());
    }

    #[test]
    fn chebyshev_cubic_has_integer_multipliers() {
        // z³ − 3z = T₃: all multipliers integral up to period 2
        let t3 = ParamFamily::custom(
            3,
            vec![IntPoly::zero(), IntPoly::from_i64(&[-3]), IntPoly::zero()],
        )
        .unwrap();
        assert!(verify_integer_multipliers(&t3, 2).unwrap());
        // fixed-point multipliers are {−3, 9, 9}
        let m1 = multiplier_poly(&t3, 1).unwrap().poly;
        let coeffs: Vec<BigInt> = m1.coeffs_x().iter().map(|c| c.coeff(0)).collect();
        let rr = rational_roots(&IntPoly::new(coeffs));
        assert_eq!(rr.roots, vec![(rat(-3, 1), 1), (rat(9, 1), 2)]);
        // the parametrized family is rejected
        assert!(matches!(
            verify_integer_multipliers(&ParamFamily::symcubic(), 1),
            Err(Error::WrongFamily(_))
        ));
        // a map that is not integral: z² + 1 has multipliers 1 ± i√3
        let c1 = ParamFamily::custom(2, vec![IntPoly::one(), IntPoly::zero()]).unwrap();
        assert!(!verify_integer_multipliers(&c1, 1).unwrap());
    }

    #[test]
    fn interval_certification() {
        let chk = cubic_interval_check().unwrap();
        assert!(chk.pass(), "{chk:?}");
    }

    #[test]
    fn reversal_and_derivative_identities() {
        for d in 2..=6 {
            assert!(rolle_reversal_check(d).unwrap(), "reversal d={d}");
            assert!(m1_derivative_check(d).unwrap(), "derivative d={d}");
        }
    }

    #[test]
    fn sampling_is_deterministic_and_respects_constraints() {
        let excl = [rat(0, 1), rat(-2, 1)];
        let a = sample_rationals(50, 30, &excl, 7);
        let b = sample_rationals(50, 30, &excl, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        for r in &a {
            assert!(crate::arith::height(r) <= int(30));
            assert!(!excl.contains(r));
        }
        let c = sample_rationals(50, 30, &excl, 8);
        assert_ne!(a, c);
    }
}
