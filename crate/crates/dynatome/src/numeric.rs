//! Floating-point oracle: locate periodic cycles of a concrete member
//! of a family, compute their multipliers numerically, and compare
//! against the numeric roots of the exact multiplier polynomial.
//!
//! The root finder is an Aberth-style simultaneous iteration on the
//! exactly expanded polynomial f^∘n(z) − z, whose coefficients are
//! specialized from the symbolic iterate (one rounding per
//! coefficient). Near-coincident roots — which occur exactly at
//! parabolic parameters — are merged into clusters; the cluster
//! centroid cancels the leading error term of a multiple root, so
//! multipliers evaluated there are accurate to near machine precision,
//! and the cluster size recovers the root multiplicity.
//!
//! The comparison implements the parabolic accounting of the multiplier
//! polynomial literally: a period-n cycle of multiplier 1 is a double
//! root λ = 1 of Mₙ, and a period-k cycle (k a proper divisor of n)
//! whose multiplier is a primitive (n/k)-th root of unity contributes
//! one root λ = 1.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::dynatomic::{FamilyKind, ParamFamily};
use crate::error::{Error, Result};
use crate::multiplier::multiplier_poly;
use crate::poly::roots::rational_roots;
use crate::poly::IntPoly;

/// Residual ceiling accepted after the iteration ends (loose on purpose:
/// it detects non-convergence, accuracy comes from the step criterion).
const ABERTH_RESIDUAL: f64 = 1e-8;
/// Per-root step threshold that also counts as converged.
const ABERTH_STEP: f64 = 1e-13;
/// Iteration cap before reporting non-convergence.
const ABERTH_CAP: usize = 500;
/// Distance below which numeric roots are merged into one point. A
/// root of multiplicity m is only locatable to about eps^(1/m) from the
/// expanded polynomial (~5e−6 for the triple roots that parabolic
/// parameters produce), so this sits above that noise floor and well
/// below genuine cycle separations.
const CLUSTER_TOL: f64 = 1e-4;
/// Tolerance for recognizing parabolic configurations (multiplier at a
/// root of unity); multipliers at clustered multiple roots inherit the
/// eps^(1/m) noise floor.
const PARABOLIC_TOL: f64 = 1e-3;

/// One cycle of exact period n located numerically.
#[derive(Debug, Clone)]
pub struct CycleRecord {
    pub period: u32,
    /// Deterministic representative (lexicographically smallest point).
    pub representative: Complex64,
    /// Product of f′ along the cycle.
    pub multiplier: Complex64,
    /// max |f^∘n(z) − z| over the cycle.
    pub residual: f64,
    /// Root multiplicity of the cycle's points in f^∘n(z) − z
    /// (cluster size; > 1 exactly in parabolic configurations).
    pub multiplicity: u32,
}

/// Simultaneous (Aberth-style) root refinement of a complex-coefficient
/// polynomial. Returns all roots (with multiplicity, as near-coincident
/// values).
pub fn aberth_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c = coeffs.to_vec();
    while let Some(last) = c.last() {
        if last.norm() == 0.0 && c.len() > 1 {
            c.pop();
        } else {
            break;
        }
    }
    let deg = c.len() - 1;
    if c.last().map_or(true, |l| l.norm() == 0.0) {
        return Err(Error::BadParam("zero polynomial has no root set".into()));
    }
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = *c.last().unwrap();
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let deriv: Vec<Complex64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| x * (i as f64))
        .collect();
    let radius = 1.0 + monic[..deg].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let eval = |p: &[Complex64], x: Complex64| -> Complex64 {
        p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a)
    };
    let scale = |x: Complex64| -> f64 { 1.0f64.max(x.norm()).powi(deg as i32) };
    for _ in 0..ABERTH_CAP {
        let mut done = true;
        for i in 0..deg {
            // no early residual exit: a multiple root converges only
            // linearly and must keep halving until the step criterion,
            // or its copies end up too far apart to cluster
            let p = eval(&monic, z[i]);
            let dp = eval(&deriv, z[i]);
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 0.0 {
                        sum += 1.0 / diff;
                    }
                }
            }
            let denom = 1.0 - newton * sum;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[i] -= step;
            if step.norm() > ABERTH_STEP * (1.0 + z[i].norm()) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    for &zi in &z {
        let p = eval(&monic, zi);
        if p.norm() > ABERTH_RESIDUAL * scale(zi) {
            return Err(Error::NonConvergence(format!(
                "residual {:.3e} at root estimate {zi}",
                p.norm()
            )));
        }
    }
    Ok(z)
}

/// Merges near-coincident roots; returns (centroid, multiplicity) per
/// cluster.
fn cluster_roots(roots: &[Complex64]) -> Vec<(Complex64, u32)> {
    let mut clusters: Vec<(Complex64, Vec<Complex64>)> = Vec::new();
    for &r in roots {
        match clusters
            .iter_mut()
            .find(|(center, _)| (*center - r).norm() <= CLUSTER_TOL)
        {
            Some((center, members)) => {
                members.push(r);
                let sum: Complex64 = members.iter().sum();
                *center = sum / members.len() as f64;
            }
            None => clusters.push((r, vec![r])),
        }
    }
    let mut out: Vec<(Complex64, u32)> = clusters
        .into_iter()
        .map(|(c, members)| (c, members.len() as u32))
        .collect();
    out.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .unwrap()
    });
    out
}

/// The complex parameter value for a family evaluated at the rational
/// coordinate u: for z^d + t this is t = u^(1/(d−1)) (principal
/// branch), matching the subring coordinate used by the exact layer.
fn param_from_u(fam: &ParamFamily, u: &BigRational) -> Result<Complex64> {
    if fam.kind() != FamilyKind::Unicritical {
        return Err(Error::WrongFamily(format!(
            "numeric oracle handles z^d + t families, got {}",
            fam.id()
        )));
    }
    let uf = u.to_f64().ok_or_else(|| {
        Error::BadParam(format!("parameter {u} does not fit in double precision"))
    })?;
    let e = 1.0 / (fam.degree() as f64 - 1.0);
    if fam.degree() == 2 {
        return Ok(Complex64::new(uf, 0.0));
    }
    Ok(Complex64::new(uf, 0.0).powf(e))
}

/// Specializes an integer polynomial at a complex point.
fn eval_int_poly_c(p: &IntPoly, x: Complex64) -> Complex64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, a| {
            acc * x + Complex64::new(a.to_f64().unwrap(), 0.0)
        })
}

/// Complex coefficient vector of f^∘k − z at parameter value c.
fn iterate_minus_z(fam: &ParamFamily, c: Complex64, k: u32) -> Result<Vec<Complex64>> {
    let it = fam.iterate(k)?;
    let mut coeffs: Vec<Complex64> = it
        .coeffs_x()
        .iter()
        .map(|a| eval_int_poly_c(a, c))
        .collect();
    coeffs[1] -= 1.0;
    Ok(coeffs)
}

/// All distinct periodic points of period dividing n with their minimal
/// periods and multiplicities, plus the cycle partition.
fn periodic_points(
    fam: &ParamFamily,
    c: Complex64,
    n: u32,
    tol: f64,
) -> Result<Vec<CycleRecord>> {
    let poly = iterate_minus_z(fam, c, n)?;
    let raw = aberth_roots(&poly)?;
    let points = cluster_roots(&raw);
    let fmap: Vec<Complex64> = {
        let m = fam.map();
        m.coeffs_x().iter().map(|a| eval_int_poly_c(a, c)).collect()
    };
    let fprime: Vec<Complex64> = fmap
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| x * (i as f64))
        .collect();
    let evalc = |p: &[Complex64], x: Complex64| -> Complex64 {
        p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a)
    };
    let nearest = |x: Complex64| -> usize {
        let mut best = 0;
        let mut bd = f64::INFINITY;
        for (i, (p, _)) in points.iter().enumerate() {
            let d = (*p - x).norm();
            if d < bd {
                bd = d;
                best = i;
            }
        }
        best
    };
    let mut assigned = vec![false; points.len()];
    let mut records = Vec::new();
    for start in 0..points.len() {
        if assigned[start] {
            continue;
        }
        // follow the orbit through nearest located points
        let mut orbit = vec![start];
        assigned[start] = true;
        let mut cur = points[start].0;
        loop {
            let next = evalc(&fmap, cur);
            let idx = nearest(next);
            if idx == start {
                break;
            }
            if assigned[idx] {
                // numeric pathology: orbit merged into a previous cycle
                break;
            }
            assigned[idx] = true;
            orbit.push(idx);
            cur = points[idx].0;
        }
        let period = orbit.len() as u32;
        if n % period != 0 {
            return Err(Error::Internal(format!(
                "orbit of length {period} among roots of f^∘{n} − z"
            )));
        }
        let mut multiplier = Complex64::new(1.0, 0.0);
        let mut residual = 0.0f64;
        for &i in &orbit {
            let z0 = points[i].0;
            multiplier *= evalc(&fprime, z0);
            let mut w = z0;
            for _ in 0..n {
                w = evalc(&fmap, w);
            }
            residual = residual.max((w - z0).norm());
        }
        let representative = orbit
            .iter()
            .map(|&i| points[i].0)
            .min_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap())
            .unwrap();
        if residual > tol {
            return Err(Error::NonConvergence(format!(
                "cycle residual {residual:.3e} exceeds tolerance {tol:.3e}"
            )));
        }
        records.push(CycleRecord {
            period,
            representative,
            multiplier,
            residual,
            multiplicity: points[orbit[0]].1,
        });
    }
    records.sort_by(|a, b| {
        (a.period, a.representative.re, a.representative.im)
            .partial_cmp(&(b.period, b.representative.re, b.representative.im))
            .unwrap()
    });
    Ok(records)
}

/// Locates every cycle of exact period n of the family member at the
/// coordinate u, by rooting f^∘n − z and grouping orbits.
pub fn find_cycles(
    fam: &ParamFamily,
    u: &BigRational,
    n: u32,
    tol: f64,
) -> Result<Vec<CycleRecord>> {
    if tol <= 0.0 {
        return Err(Error::BadParam("tolerance must be positive".into()));
    }
    let c = param_from_u(fam, u)?;
    Ok(periodic_points(fam, c, n, tol)?
        .into_iter()
        .filter(|r| r.period == n)
        .collect())
}

/// Minimizes, over pairings, the maximum distance between two equally
/// sized lists of complex values; returns that minimal maximum.
fn optimal_pairing_deviation(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    assert!(n <= 8, "pairing search limited to 8 values");
    let mut used = vec![false; n];
    fn go(
        a: &[Complex64],
        b: &[Complex64],
        used: &mut Vec<bool>,
        i: usize,
        cur: f64,
        best: &mut f64,
    ) {
        if cur >= *best {
            return;
        }
        if i == a.len() {
            *best = cur;
            return;
        }
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                go(a, b, used, i + 1, cur.max((a[i] - b[j]).norm()), best);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(a, b, &mut used, 0, 0.0, &mut best);
    best
}

/// Result of comparing exact and numeric period-n multipliers.
#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub family: String,
    pub u: BigRational,
    pub period: u32,
    /// Numeric roots of the exact Mₙ specialized at u.
    pub formal_multipliers: Vec<Complex64>,
    /// Multipliers of located cycles plus parabolic λ = 1 entries.
    pub numeric_multipliers: Vec<Complex64>,
    /// Number of λ = 1 entries added by the parabolic rule.
    pub parabolic_adjustments: usize,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Numeric roots of an integer polynomial: exact rational roots first
/// (kept exact, with multiplicity), then Aberth on the deflated
/// cofactor.
fn int_poly_roots_c(p: &IntPoly) -> Result<Vec<Complex64>> {
    let rr = rational_roots(p);
    let mut out = Vec::new();
    let mut cofactor = p.clone();
    for (root, mult) in &rr.roots {
        let num = root.numer().clone();
        let den = root.denom().clone();
        let lin = IntPoly::new(vec![-num, den]);
        for _ in 0..*mult {
            cofactor = cofactor.exact_div(&lin)?;
            out.push(Complex64::new(root.to_f64().unwrap(), 0.0));
        }
    }
    if cofactor.degree().unwrap_or(0) > 0 {
        let coeffs: Vec<Complex64> = cofactor
            .coeffs()
            .iter()
            .map(|a| Complex64::new(a.to_f64().unwrap(), 0.0))
            .collect();
        out.extend(aberth_roots(&coeffs)?);
    }
    Ok(out)
}

/// Compares the multiset of numerically located period-n multipliers
/// (with parabolic λ = 1 adjustments) against the roots of the exact
/// Mₙ at the coordinate u; passes iff an optimal pairing stays within
/// tol.
pub fn crosscheck_multiplier_poly(
    fam: &ParamFamily,
    u: &BigRational,
    n: u32,
    tol: f64,
) -> Result<CrosscheckReport> {
    let c = param_from_u(fam, u)?;
    let step = fam.degree() as usize - 1;

    // formal side: specialize Mₙ at u and take its roots
    let m = multiplier_poly(fam, n)?.poly;
    let coeffs: Vec<BigRational> = m
        .coeffs_x()
        .iter()
        .map(|a| a.eval_at_power(u, step))
        .collect::<Result<_>>()?;
    let mut den = num_bigint::BigInt::from(1);
    for cf in &coeffs {
        den = num_integer::Integer::lcm(&den, cf.denom());
    }
    let specialized = IntPoly::new(
        coeffs
            .iter()
            .map(|cf| (cf * BigRational::from(den.clone())).to_integer())
            .collect(),
    );
    let formal = int_poly_roots_c(&specialized)?;

    // numeric side: exact-period cycles for every divisor of n
    let all = periodic_points(fam, c, n, 1e-8)?;
    let mut numeric: Vec<Complex64> = Vec::new();
    let mut adjustments = 0;
    for rec in &all {
        if rec.period == n {
            if rec.multiplicity > 1 {
                // parabolic period-n cycle: double root λ = 1
                assert!(
                    (rec.multiplier - 1.0).norm() <= PARABOLIC_TOL,
                    "multiple periodic point with multiplier {} ≠ 1",
                    rec.multiplier
                );
                numeric.push(Complex64::new(1.0, 0.0));
                numeric.push(Complex64::new(1.0, 0.0));
                adjustments += 2;
            } else {
                numeric.push(rec.multiplier);
            }
        } else {
            // proper divisor k: multiplier at a primitive (n/k)-th root
            // of unity contributes one root λ = 1 to Mₙ
            let order = n / rec.period;
            let primitive_hit = (1..=order)
                .filter(|j| num_integer::gcd(*j, order) == 1)
                .any(|j| {
                    let theta = 2.0 * std::f64::consts::PI * (j as f64) / (order as f64);
                    (rec.multiplier - Complex64::from_polar(1.0, theta)).norm() <= PARABOLIC_TOL
                });
            if primitive_hit {
                numeric.push(Complex64::new(1.0, 0.0));
                adjustments += 1;
            }
        }
    }
    if numeric.len() != formal.len() {
        return Err(Error::MismatchedCount(format!(
            "{} numeric multipliers (after {adjustments} parabolic entries) vs {} roots of M_{n}",
            numeric.len(),
            formal.len()
        )));
    }
    let max_deviation = if numeric.is_empty() {
        0.0
    } else {
        optimal_pairing_deviation(&formal, &numeric)
    };
    Ok(CrosscheckReport {
        family: fam.id(),
        u: u.clone(),
        period: n,
        formal_multipliers: formal,
        numeric_multipliers: numeric,
        parabolic_adjustments: adjustments,
        max_deviation,
        pass: max_deviation <= tol,
    })
}

/// Checks |z₀| ≤ 1 + |t|^(1/d) + tol for every periodic point of
/// period ≤ n at the coordinate u.
pub fn orbit_bound_check(fam: &ParamFamily, u: &BigRational, n: u32, tol: f64) -> Result<bool> {
    let c = param_from_u(fam, u)?;
    let bound = 1.0 + c.norm().powf(1.0 / fam.degree() as f64) + tol;
    for k in 1..=n {
        for rec in periodic_points(fam, c, k, 1e-8)? {
            let mut z = rec.representative;
            let fmap: Vec<Complex64> = fam
                .map()
                .coeffs_x()
                .iter()
                .map(|a| eval_int_poly_c(a, c))
                .collect();
            for _ in 0..rec.period {
                if z.norm() > bound {
                    return Ok(false);
                }
                z = fmap
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn quad() -> ParamFamily {
        ParamFamily::unicritical(2).unwrap()
    }

    #[test]
    fn aberth_on_simple_polynomials() {
        // z² − 1
        let roots = aberth_roots(&[
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        let mut re: Vec<f64> = roots.iter().map(|r| r.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((re[0] + 1.0).abs() < 1e-10 && (re[1] - 1.0).abs() < 1e-10);
        assert!(roots.iter().all(|r| r.im.abs() < 1e-10));
        // (z−2)² double root
        let roots = aberth_roots(&[
            Complex64::new(4.0, 0.0),
            Complex64::new(-4.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        for r in &roots {
            assert!((r - 2.0).norm() < 1e-5);
        }
        let clustered = cluster_roots(&roots);
        assert_eq!(clustered.len(), 1);
        assert_eq!(clustered[0].1, 2);
        // double roots carry a sqrt(eps) noise floor
        assert!((clustered[0].0 - 2.0).norm() < 1e-7);
    }

    #[test]
    fn cycles_of_the_power_map() {
        // f = z²: fixed points 0 (multiplier 0) and 1 (multiplier 2)
        let cycles = find_cycles(&quad(), &rat(0, 1), 1, 1e-9).unwrap();
        assert_eq!(cycles.len(), 2);
        assert!((cycles[0].representative - 0.0).norm() < 1e-9);
        assert!((cycles[0].multiplier - 0.0).norm() < 1e-9);
        assert!((cycles[1].representative - 1.0).norm() < 1e-9);
        assert!((cycles[1].multiplier - 2.0).norm() < 1e-9);
    }

    #[test]
    fn superattracting_two_cycle() {
        // f = z² − 1: cycle {0, −1} with multiplier 0
        let cycles = find_cycles(&quad(), &rat(-1, 1), 2, 1e-9).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].period, 2);
        assert!(cycles[0].multiplier.norm() < 1e-9);
        assert!((cycles[0].representative - Complex64::new(-1.0, 0.0)).norm() < 1e-7);
    }

    #[test]
    fn chebyshev_period_three_multipliers() {
        // f = z² − 2: two period-3 cycles with multipliers ±8
        let cycles = find_cycles(&quad(), &rat(-2, 1), 3, 1e-9).unwrap();
        assert_eq!(cycles.len(), 2);
        let mut mults: Vec<f64> = cycles.iter().map(|c| c.multiplier.re).collect();
        mults.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((mults[0] + 8.0).abs() < 1e-7);
        assert!((mults[1] - 8.0).abs() < 1e-7);
    }

    #[test]
    fn parabolic_fixed_point_is_one_cluster() {
        // c = 1/4: (z − 1/2)² — one fixed point of multiplicity 2
        let cycles = find_cycles(&quad(), &rat(1, 4), 1, 1e-9).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].multiplicity, 2);
        assert!((cycles[0].multiplier - 1.0).norm() < 1e-6);
    }

    #[test]
    fn crosscheck_basic_instances() {
        for (u, n) in [
            (rat(-1, 1), 1),
            (rat(-1, 1), 2),
            (rat(-2, 1), 1),
            (rat(-2, 1), 2),
            (rat(-2, 1), 3),
            (rat(-2, 1), 4),
            (rat(1, 4), 1),
            (rat(1, 4), 2),
        ] {
            let rep = crosscheck_multiplier_poly(&quad(), &u, n, 1e-8).unwrap();
            assert!(
                rep.pass,
                "u={u} n={n}: deviation {:.3e}",
                rep.max_deviation
            );
        }
    }

    #[test]
    fn crosscheck_degenerate_period_two() {
        // c = −3/4: the period-1 cycle has multiplier −1, so M₂ = λ − 1
        // and there is no exact period-2 cycle; one λ=1 adjustment
        let rep = crosscheck_multiplier_poly(&quad(), &rat(-3, 4), 2, 1e-8).unwrap();
        assert!(rep.pass, "deviation {:.3e}", rep.max_deviation);
        assert_eq!(rep.parabolic_adjustments, 1);
        assert_eq!(rep.formal_multipliers.len(), 1);
    }

    #[test]
    fn crosscheck_cubic_parabolic() {
        // d = 3, u = 4/27: M₁ = (λ−1)²(λ−4), fixed points parabolic
        let cubic = ParamFamily::unicritical(3).unwrap();
        let rep = crosscheck_multiplier_poly(&cubic, &rat(4, 27), 1, 1e-8).unwrap();
        assert!(rep.pass, "deviation {:.3e}", rep.max_deviation);
        assert_eq!(rep.parabolic_adjustments, 2);
        let rep = crosscheck_multiplier_poly(&cubic, &rat(4, 27), 2, 1e-8).unwrap();
        assert!(rep.pass, "deviation {:.3e}", rep.max_deviation);
        // u = 1 is generic
        let rep = crosscheck_multiplier_poly(&cubic, &rat(1, 1), 1, 1e-8).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.parabolic_adjustments, 0);
    }

    #[test]
    fn orbit_bounds() {
        assert!(orbit_bound_check(&quad(), &rat(-1, 1), 2, 1e-9).unwrap());
        assert!(orbit_bound_check(&quad(), &rat(0, 1), 2, 1e-9).unwrap());
        assert!(orbit_bound_check(&quad(), &rat(-2, 1), 3, 1e-9).unwrap());
        let cubic = ParamFamily::unicritical(3).unwrap();
        assert!(orbit_bound_check(&cubic, &rat(4, 27), 2, 1e-9).unwrap());
    }

    #[test]
    fn wrong_family_is_rejected() {
        let sc = ParamFamily::symcubic();
        assert!(matches!(
            find_cycles(&sc, &rat(1, 1), 1, 1e-9),
            Err(Error::WrongFamily(_))
        ));
    }
}
