//! The built-in verification suite: seven criteria covering exact
//! reproduction of the displayed polynomials, the discriminant
//! factorization, coefficient structure, classification behavior, the
//! two non-square searches, the Eisenstein-integer results, and the
//! numeric oracle, each with a wall-clock budget.
//!
//! Every expected value here is pinned as a literal (or assembled from
//! pinned factors) so the suite is an independent gate: it recomputes
//! everything from scratch and compares against the frozen data.

use std::time::Instant;

use crate::arith::{int, rat};
use crate::classify::{
    cubic_interval_check, d3_integer_argument, d3_rational_search, m1_derivative_check,
    reduction_to_fermat, rolle_reversal_check, sample_rationals, Classifier, Verdict,
};
use crate::discfactor::{delta_n, factor_delta, symcubic_n3_factorization};
use crate::dynatomic::ParamFamily;
use crate::eisenstein::{
    cube_residue_check, descent_search, lambda_cubed_distance_check, near_cube_distance_check,
};
use crate::multiplier::{closed_form_m1, multiplier_poly, verify_coefficient_structure};
use crate::numeric::{crosscheck_multiplier_poly, orbit_bound_check};
use crate::poly::{IntPoly, ParamPoly};

/// Outcome of one verification criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: String,
    pub pass: bool,
    pub details: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

fn ip(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64(coeffs)
}

fn pp(rows: &[&[i64]]) -> ParamPoly {
    ParamPoly::new(rows.iter().map(|r| IntPoly::from_i64(r)).collect())
}

/// Collects named check failures; pass = no failures.
struct Checks {
    total: usize,
    failures: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            total: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.total += 1;
        if !ok {
            self.failures.push(name.to_string());
        }
    }

    fn finish(self, timer: Instant, name: &str, budget_ms: u128) -> CriterionResult {
        let elapsed_ms = timer.elapsed().as_millis();
        let in_budget = elapsed_ms < budget_ms;
        let pass = self.failures.is_empty() && in_budget;
        let mut details = if self.failures.is_empty() {
            format!("{} checks passed", self.total)
        } else {
            format!(
                "{}/{} checks failed: {}",
                self.failures.len(),
                self.total,
                self.failures.join(", ")
            )
        };
        if !in_budget {
            details.push_str(&format!(" [over budget: {elapsed_ms} ms >= {budget_ms} ms]"));
        }
        CriterionResult {
            name: name.to_string(),
            pass,
            details,
            elapsed_ms,
            budget_ms,
        }
    }
}

fn run_criterion<F>(name: &str, budget_ms: u128, body: F) -> CriterionResult
where
    F: FnOnce(&mut Checks) -> crate::Result<()>,
{
    let timer = Instant::now();
    let mut checks = Checks::new();
    match body(&mut checks) {
        Ok(()) => checks.finish(timer, name, budget_ms),
        Err(e) => {
            let elapsed_ms = timer.elapsed().as_millis();
            CriterionResult {
                name: name.to_string(),
                pass: false,
                details: format!("error: {e}"),
                elapsed_ms,
                budget_ms,
            }
        }
    }
}

/// Expected multiplier polynomials for z² + c (ascending λ, inner
/// ascending c).
fn expected_quad_mults() -> [ParamPoly; 4] {
    [
        pp(&[&[0, 4], &[-2], &[1]]),
        pp(&[&[-4, -4], &[1]]),
        pp(&[&[64, 64, 128, 64], &[-16, -8], &[1]]),
        pp(&[
            &[-4096, 0, -8192, -12288, -12288, -12288, -4096],
            &[768, 0, 256, -256, -256],
            &[-48, 0, 16],
            &[1],
        ]),
    ]
}

/// Expected multiplier polynomials for z³ + c.
fn expected_cubic_mults() -> [ParamPoly; 2] {
    [
        pp(&[&[0, 0, -27], &[9], &[-6], &[1]]),
        pp(&[&[-729, 0, -1458, 0, -729], &[243, 0, 162], &[-27], &[1]]),
    ]
}

/// The displayed period-3 square root for z³ + az (ascending λ, inner
/// ascending a).
fn expected_n3() -> ParamPoly {
    pp(&[
        &[
            531441, 354294, 236196, -196830, -131220, -34992, -23328, 36936, 24624, -6912,
            -4608, 384, 256,
        ],
        &[-78732, -39366, -8748, -7290, 5832, 5832, -432, -792, 0, 32],
        &[4374, 1458, -324, 486, 396, -72, -48],
        &[-108, -18, 12, 2],
        &[1],
    ])
}

/// The displayed degree-8 factor of disc N₃.
fn expected_d3() -> IntPoly {
    ip(&[2197, 1690, 715, 376, -113, -206, -35, 16, 4])
}

/// Criterion 1: exact reproduction of every displayed polynomial.
pub fn criterion_1() -> CriterionResult {
    run_criterion("reference formulas reproduce exactly", 10_000, |c| {
        let quad = ParamFamily::unicritical(2)?;
        let mults = expected_quad_mults();
        for n in 1..=4u32 {
            let m = multiplier_poly(&quad, n)?.poly;
            c.check(&format!("quadratic M_{n}"), m == mults[(n - 1) as usize]);
        }
        let expected_deltas = [
            ip(&[4, -16]),
            ip(&[1]),
            ip(&[0, 0, -448, -256]),
            // −2^24 · (64c³+144c²+108c+135) · (c+2)² · c⁶
            {
                let cubic = ip(&[135, 108, 144, 64]);
                let sq = ip(&[2, 1]).pow(2);
                (&cubic * &sq).scale(&int(-(1i64 << 24))).shift(6)
            },
        ];
        for n in 1..=4u32 {
            let d = delta_n(&quad, n)?;
            c.check(
                &format!("quadratic Δ_{n}"),
                d.delta == expected_deltas[(n - 1) as usize],
            );
        }
        c.check("quadratic Δ_2 degenerate", delta_n(&quad, 2)?.degenerate);

        let cubic = ParamFamily::unicritical(3)?;
        let cmults = expected_cubic_mults();
        for n in 1..=2u32 {
            let m = multiplier_poly(&cubic, n)?.poly;
            c.check(&format!("cubic M_{n}"), m == cmults[(n - 1) as usize]);
        }
        let cubic_deltas = [
            ip(&[-4, 0, 27]).scale(&int(-729)).shift(2),
            ip(&[32, 0, 27]).scale(&int(-531_441)).shift(6),
        ];
        for n in 1..=2u32 {
            let d = delta_n(&cubic, n)?;
            c.check(
                &format!("cubic Δ_{n}"),
                d.delta == cubic_deltas[(n - 1) as usize],
            );
        }

        for d in 2..=6u32 {
            let fam = ParamFamily::unicritical(d)?;
            let m = multiplier_poly(&fam, 1)?.poly;
            c.check(
                &format!("closed-form M_1 at degree {d}"),
                m == closed_form_m1(d)?.poly,
            );
        }

        // z³ + az: factored M₁, M₂, then M₃ = N₃² and disc N₃
        let sym = ParamFamily::symcubic();
        let lam = ParamPoly::x_var();
        let a = ParamPoly::t_var();
        let three = ParamPoly::constant(ip(&[3]));
        let m1 = &(&lam - &a) * &(&(&lam + &a.scale_int(&int(2))) - &three).pow(2);
        c.check("symcubic M_1", multiplier_poly(&sym, 1)?.poly == m1);
        let m2 = &(&lam - &ParamPoly::constant(ip(&[9, 12, 4])))
            * &(&lam + &ParamPoly::constant(ip(&[-9, 0, 2]))).pow(2);
        c.check("symcubic M_2", multiplier_poly(&sym, 2)?.poly == m2);
        let n3f = symcubic_n3_factorization()?;
        c.check("symcubic N_3 display", n3f.n3 == expected_n3());
        c.check(
            "symcubic M_3 = N_3^2",
            multiplier_poly(&sym, 3)?.poly == &n3f.n3 * &n3f.n3,
        );
        c.check("symcubic D_3 display", n3f.d3 == expected_d3());
        // disc N₃ = 2^12·3^12·D₃·(4a³+12a²−3a−27)²·(a−3)⁴·(a+3)⁴·a^12
        let reassembled = (&(&n3f.d3 * &ip(&[-27, -3, 12, 4]).pow(2))
            * &(&ip(&[-3, 1]).pow(4) * &ip(&[3, 1]).pow(4)))
            .scale(&int(2_176_782_336)) // 2^12 · 3^12
            .shift(12);
        c.check("disc N_3 reassembly", n3f.disc == reassembled);
        Ok(())
    })
}

/// Criterion 2: Δₙ = aₙ·Qₙ·Rₙ² with the closed forms at period 1.
pub fn criterion_2() -> CriterionResult {
    run_criterion("discriminant factorization suite", 60_000, |c| {
        let quad = ParamFamily::unicritical(2)?;
        for n in 1..=4u32 {
            let f = factor_delta(&quad, n)?;
            c.check(
                &format!("quadratic a_{n} is ±1"),
                f.a == int(1) || f.a == int(-1),
            );
            let reassembled = &f.q.scale(&f.a) * &(&f.r * &f.r);
            c.check(&format!("quadratic Δ_{n} reassembly"), reassembled == f.delta);
        }
        let cubic = ParamFamily::unicritical(3)?;
        for n in 1..=2u32 {
            let f = factor_delta(&cubic, n)?;
            c.check(
                &format!("cubic a_{n} is ±1"),
                f.a == int(1) || f.a == int(-1),
            );
            let reassembled = &f.q.scale(&f.a) * &(&f.r * &f.r);
            c.check(&format!("cubic Δ_{n} reassembly"), reassembled == f.delta);
        }
        for d in 2..=5u32 {
            let fam = ParamFamily::unicritical(d)?;
            let f = factor_delta(&fam, 1)?;
            let sign = if (d * (d + 1) / 2) % 2 == 0 { 1 } else { -1 };
            c.check(&format!("a_1 closed form at degree {d}"), f.a == int(sign));
            let r1 = IntPoly::monomial(
                num_traits::pow(int(d as i64), (d * (d - 1) / 2) as usize),
                ((d - 1) * (d - 2) / 2) as usize,
            );
            c.check(&format!("R_1 closed form at degree {d}"), f.r == r1);
        }
        Ok(())
    })
}

/// Criterion 3: coefficient structure and separability for d ∈ {2, 3},
/// n ≤ 3.
pub fn criterion_3() -> CriterionResult {
    run_criterion("coefficient structure suite", 60_000, |c| {
        for d in [2u32, 3] {
            let fam = ParamFamily::unicritical(d)?;
            for n in 1..=3u32 {
                let rep = verify_coefficient_structure(&fam, n)?;
                c.check(&format!("structure degree {d} period {n}"), rep.pass());
            }
        }
        Ok(())
    })
}

/// Criterion 4: classification at desk scale.
pub fn criterion_4() -> CriterionResult {
    run_criterion("classification checks at desk scale", 30_000, |c| {
        let cl = Classifier::new(ParamFamily::unicritical(2)?, 4)?;
        c.check(
            "c = −2 classifies as Chebyshev-like",
            cl.classify_param(&rat(-2, 1))?.verdict == Verdict::ChebyshevLike,
        );
        c.check(
            "c = 0 classifies as power map",
            cl.classify_param(&rat(0, 1))?.verdict == Verdict::PowerMap,
        );
        let samples = sample_rationals(200, 30, &[rat(0, 1), rat(-2, 1)], 42);
        let mut all_fail = true;
        for s in &samples {
            match cl.classify_param(s)?.verdict {
                Verdict::FailsAtPeriod(n) if n <= 4 => {}
                v => {
                    all_fail = false;
                    c.check(&format!("sample {s} fails by period 4 (got {v:?})"), false);
                }
            }
        }
        c.check("200 sampled rationals all fail by period 4", all_fail);
        let red = reduction_to_fermat(50)?;
        c.check("cube-equation reduction identity", red.identity_ok);
        c.check("no admissible parameters up to height 50", red.admissible.is_empty());
        c.check("cube relation vacuously holds", red.cube_relation_ok);
        c.check("cubic-family interval certification", cubic_interval_check()?.pass());
        for d in 4..=6u32 {
            c.check(
                &format!("reversal identity at degree {d}"),
                rolle_reversal_check(d)?,
            );
            c.check(
                &format!("M_1 derivative identity at degree {d}"),
                m1_derivative_check(d)?,
            );
        }
        Ok(())
    })
}

/// Criterion 5: the integer and rational non-square searches for D₃.
pub fn criterion_5() -> CriterionResult {
    run_criterion("odd cubic family non-square searches", 300_000, |c| {
        let arg = d3_integer_argument(10_000)?;
        c.check(
            "mod-32 residue table forces a ≡ 1 (mod 8)",
            arg.residues_force_one_mod_eight,
        );
        c.check(
            "exceptional b-range directly non-square",
            arg.exceptional_nonsquare,
        );
        c.check("square sandwich holds for |b| ≤ 10^4", arg.sandwich_ok);
        c.check(
            "no rational hit up to height 100",
            d3_rational_search(100)?.is_empty(),
        );
        Ok(())
    })
}

/// Criterion 6: Eisenstein-integer results.
pub fn criterion_6() -> CriterionResult {
    run_criterion("cube-equation searches over ℤ[j]", 300_000, |c| {
        let cubes = cube_residue_check();
        c.check("exactly 3 cube classes mod λ³", cubes.cube_classes.len() == 3);
        c.check("cube classes are those of −1, 0, 1", cubes.image_is_pm_one_zero);
        c.check("refined cube congruence", cubes.refined_ok);
        c.check("cube expansion identity", cubes.binomial_identity_ok);
        let dist = lambda_cubed_distance_check();
        c.check("distance from 4·units to λ³-lattice is √7", dist.min_norm == int(7));
        c.check("√7 exceeds 2", dist.exceeds_two);
        c.check(
            "cubes stay within distance 2 of the λ³-lattice (radius 6)",
            near_cube_distance_check(6)?.within_two,
        );
        let rep = descent_search(20, 1)?;
        c.check("ℤ[j] search finds only z = 0 solutions", rep.all_trivial);
        c.check(
            "rational search finds only z = 0 solutions",
            rep.rational_all_trivial,
        );
        Ok(())
    })
}

/// Criterion 7: numeric oracle equivalence.
pub fn criterion_7() -> CriterionResult {
    run_criterion("numeric multiplier crosscheck", 60_000, |c| {
        let quad = ParamFamily::unicritical(2)?;
        let quad_params = [
            rat(-2, 1),
            rat(-1, 1),
            rat(1, 4),
            rat(1, 2),
            rat(-1, 2),
            rat(1, 3),
            rat(-3, 4),
            rat(2, 5),
            rat(-5, 4),
            rat(3, 5),
            rat(-4, 5),
        ];
        let mut max_dev = 0.0f64;
        let mut adjustments = 0usize;
        for u in &quad_params {
            for n in 1..=4u32 {
                let rep = crosscheck_multiplier_poly(&quad, u, n, 1e-8)?;
                max_dev = max_dev.max(rep.max_deviation);
                adjustments += rep.parabolic_adjustments;
                c.check(&format!("quadratic crosscheck c={u} n={n}"), rep.pass);
            }
            c.check(
                &format!("quadratic orbit bound c={u}"),
                orbit_bound_check(&quad, u, 4, 1e-9)?,
            );
        }
        let cubic = ParamFamily::unicritical(3)?;
        for u in [rat(4, 27), rat(1, 1)] {
            for n in 1..=2u32 {
                let rep = crosscheck_multiplier_poly(&cubic, &u, n, 1e-8)?;
                max_dev = max_dev.max(rep.max_deviation);
                adjustments += rep.parabolic_adjustments;
                c.check(&format!("cubic crosscheck u={u} n={n}"), rep.pass);
            }
            c.check(
                &format!("cubic orbit bound u={u}"),
                orbit_bound_check(&cubic, &u, 2, 1e-9)?,
            );
        }
        c.check("at least one parabolic adjustment exercised", adjustments > 0);
        c.check(
            &format!("max deviation {max_dev:.3e} within 1e-8"),
            max_dev <= 1e-8,
        );
        Ok(())
    })
}

/// Runs all seven criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
    ]
}

/// Runs the numbered criterion (1–7), or None for an index out of range.
pub fn run_one(index: u32) -> Option<CriterionResult> {
    match index {
        1 => Some(criterion_1()),
        2 => Some(criterion_2()),
        3 => Some(criterion_3()),
        4 => Some(criterion_4()),
        5 => Some(criterion_5()),
        6 => Some(criterion_6()),
        7 => Some(criterion_7()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // each criterion also runs (and is asserted) in the dedicated
    // acceptance target; here we only exercise the cheap plumbing
    #[test]
    fn criterion_result_reports_failures() {
        let r = run_criterion("plumbing", 1_000_000, |c| {
            c.check("good", true);
            c.check("bad", false);
            Ok(())
        });
        assert!(!r.pass);
        assert!(r.details.contains("bad"));
        assert!(!r.details.contains("good,"));
        let r = run_criterion("plumbing", 1_000_000, |c| {
            c.check("good", true);
            Ok(())
        });
        assert!(r.pass);
    }

    #[test]
    fn criterion_errors_are_failures() {
        let r = run_criterion("plumbing", 1_000_000, |_c| {
            Err(crate::Error::Internal("boom".into()))
        });
        assert!(!r.pass);
        assert!(r.details.contains("boom"));
    }
}
