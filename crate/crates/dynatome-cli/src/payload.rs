//! Wire formats shared by every subcommand.
//!
//! Schema, version 1: polynomials are arrays of base-10 coefficient
//! strings in ascending degree; bivariate polynomials are arrays of such
//! arrays with the outer index the main-variable degree; rationals are
//! `"p/q"` strings (bare `"p"` when integral). Coefficients travel as
//! strings because they routinely exceed 64 bits. Text mode renders the
//! same data in conventional descending-degree notation.

use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use dynatome::arith::rational_to_string;
use dynatome::classify::{ClassificationReport, ParametrizationKind, Verdict};
use dynatome::dynatomic::{FamilyKind, ParamFamily};
use dynatome::poly::{IntPoly, ParamPoly};

/// Version stamp carried in every envelope.
pub const SCHEMA_VERSION: u32 = 1;

pub fn int_poly(p: &IntPoly) -> Value {
    json!(p.to_dec_strings())
}

pub fn param_poly(p: &ParamPoly) -> Value {
    json!(p.to_dec_strings())
}

pub fn rational(r: &BigRational) -> Value {
    json!(rational_to_string(r))
}

/// Rational roots with multiplicities as `[["p/q", m], …]`.
pub fn rational_pairs(roots: &[(BigRational, u32)]) -> Value {
    json!(roots
        .iter()
        .map(|(r, m)| json!([rational_to_string(r), m]))
        .collect::<Vec<_>>())
}

/// Complex values as `[re, im]` pairs of JSON numbers.
pub fn complex_list(zs: &[Complex64]) -> Value {
    json!(zs.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>())
}

/// `(re, im)` pairs joined with commas, for text mode.
pub fn complex_text(zs: &[Complex64]) -> String {
    zs.iter()
        .map(|z| format!("({:?}, {:?})", z.re, z.im))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Symbol used for the family parameter in text renderings.
pub fn param_symbol(fam: &ParamFamily) -> &'static str {
    match fam.kind() {
        FamilyKind::Unicritical => "c",
        FamilyKind::Symcubic => "a",
        FamilyKind::Custom => "t",
    }
}

/// Short human description of the map, e.g. `z^2 + c`.
pub fn family_desc(fam: &ParamFamily) -> String {
    match fam.kind() {
        FamilyKind::Unicritical => format!("z^{} + c", fam.degree()),
        FamilyKind::Symcubic => "z^3 + a·z".to_string(),
        FamilyKind::Custom => fam.map().display_with("z", "t"),
    }
}

/// Verdict as the stable strings `power`, `chebyshev`,
/// `all-integer-up-to-N`, `all-rational-up-to-N`, `fails-at-period-n`.
pub fn verdict_label(v: &Verdict, max_period: u32) -> String {
    match v {
        Verdict::PowerMap => "power".to_string(),
        Verdict::ChebyshevLike => "chebyshev".to_string(),
        Verdict::AllIntegerMultipliers => format!("all-integer-up-to-{max_period}"),
        Verdict::AllRationalMultipliers => format!("all-rational-up-to-{max_period}"),
        Verdict::FailsAtPeriod(n) => format!("fails-at-period-{n}"),
    }
}

pub fn kind_label(k: ParametrizationKind) -> &'static str {
    match k {
        ParametrizationKind::QuadIntPeriods12 => "quad-int-period12",
        ParametrizationKind::QuadRatPeriods13 => "quad-rat-period13",
        ParametrizationKind::CubicRatFixed => "cubic-rat-fixed",
    }
}

pub fn classification(rep: &ClassificationReport) -> Value {
    json!({
        "family": rep.family,
        "u": rational(&rep.u),
        "c": rep.c.as_ref().map(rational_to_string),
        "max_period": rep.max_period,
        "verdict": verdict_label(&rep.verdict, rep.max_period),
        "periods": rep.periods.iter().map(|p| json!({
            "period": p.period,
            "multiplier_roots": rational_pairs(&p.multiplier_roots.roots),
            "splits_over_q": p.multiplier_roots.splits_over_q,
            "splits_over_z": p.multiplier_roots.splits_over_z,
            "delta": rational(&p.delta_value),
            "delta_is_square": p.delta_is_square,
        })).collect::<Vec<_>>(),
    })
}

pub fn classification_text(rep: &ClassificationReport) -> String {
    let mut out = String::new();
    let sym = if rep.family == "symcubic" { "a" } else { "c" };
    let at = match &rep.c {
        Some(c) => format!("{sym} = {}", rational_to_string(c)),
        None => format!("u = {}", rational_to_string(&rep.u)),
    };
    out.push_str(&format!(
        "classify {} at {} (periods ≤ {})\n",
        rep.family, at, rep.max_period
    ));
    for p in &rep.periods {
        let roots = p
            .multiplier_roots
            .roots
            .iter()
            .map(|(r, m)| {
                if *m > 1 {
                    format!("{} (×{m})", rational_to_string(r))
                } else {
                    rational_to_string(r)
                }
            })
            .collect::<Vec<_>>()
            .join(", ");
        let split = if p.multiplier_roots.splits_over_z {
            "splits over ℤ"
        } else if p.multiplier_roots.splits_over_q {
            "splits over ℚ"
        } else {
            "does not split over ℚ"
        };
        out.push_str(&format!(
            "  period {}: multipliers [{}], {}; Δ = {}{}\n",
            p.period,
            roots,
            split,
            rational_to_string(&p.delta_value),
            if p.delta_is_square { " (square)" } else { "" }
        ));
    }
    out.push_str(&format!(
        "verdict: {}",
        verdict_label(&rep.verdict, rep.max_period)
    ));
    out
}
