//! The acceptance gate: runs every verification criterion and prints
//! one pass/fail line per criterion. Each criterion carries its own
//! wall-clock budget; exceeding it fails the criterion.

use dynatome::verify;

fn report(r: &verify::CriterionResult) -> bool {
    println!(
        "criterion: {} — {} ({} ms, budget {} ms) — {}",
        r.name,
        if r.pass { "PASS" } else { "FAIL" },
        r.elapsed_ms,
        r.budget_ms,
        r.details
    );
    r.pass
}

#[test]
fn criterion_1_reference_formulas() {
    assert!(report(&verify::criterion_1()));
}

#[test]
fn criterion_2_discriminant_factorization() {
    assert!(report(&verify::criterion_2()));
}

#[test]
fn criterion_3_coefficient_structure() {
    assert!(report(&verify::criterion_3()));
}

#[test]
fn criterion_4_classification() {
    assert!(report(&verify::criterion_4()));
}

#[test]
fn criterion_5_nonsquare_searches() {
    assert!(report(&verify::criterion_5()));
}

#[test]
fn criterion_6_eisenstein_searches() {
    assert!(report(&verify::criterion_6()));
}

#[test]
fn criterion_7_numeric_crosscheck() {
    assert!(report(&verify::criterion_7()));
}
