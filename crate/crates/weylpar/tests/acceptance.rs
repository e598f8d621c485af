//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Budgets: the exact fixtures run in seconds; the enumeration-backed checks
//! (normalizer complements and class counts up to order 3,000,000) take a few
//! minutes and stay within a couple hundred megabytes.

use weylpar::verify::{checks, CheckOutcome, VerifyConfig};

fn standard_config() -> VerifyConfig {
    VerifyConfig::default() // rank 8, classical rank 12, bound 3e6
}

fn report(number: u32, label: &str, outcome: CheckOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {number} ({label}): {status} - {}",
        outcome.detail
    );
    assert!(
        outcome.passed,
        "criterion {number} failed: {}",
        outcome.detail
    );
}

#[test]
fn criterion_01_positive_root_counts() {
    let outcome = checks::root_counts(&standard_config()).unwrap();
    report(1, "positive-root counts", outcome);
}

#[test]
fn criterion_02_order_formula_soundness() {
    let outcome = checks::order_formula_soundness(&standard_config()).unwrap();
    report(2, "order-formula soundness", outcome);
}

#[test]
fn criterion_03_relative_type_fixtures() {
    let outcome = checks::relative_type_fixtures().unwrap();
    report(3, "relative-type fixtures", outcome);
}

#[test]
fn criterion_04_cuspidal_set_sizes() {
    let outcome = checks::cuspidal_fixtures().unwrap();
    report(4, "cuspidal-set sizes", outcome);
}

#[test]
fn criterion_05_parametrization_totals() {
    let outcome = checks::parametrization_totals().unwrap();
    report(5, "parametrization totals", outcome);
    // Fiber sizes decompose the totals series by series.
    for spec in ["B2", "B3", "G2", "F4", "E6", "E7", "E8"] {
        assert!(
            checks::series_sizes_match_relative_types(spec).unwrap(),
            "series sizes of {spec} do not match their relative types"
        );
    }
}

#[test]
fn criterion_06_involution_and_stability() {
    let outcome = checks::involution_and_stability(&standard_config()).unwrap();
    report(6, "involution and stability", outcome);
}

#[test]
fn criterion_07_normalizer_complement() {
    let outcome = checks::normalizer_complement(&standard_config()).unwrap();
    report(7, "normalizer complement", outcome);
}

#[test]
fn criterion_08_irreducible_character_counts() {
    let outcome = checks::irr_counts_vs_brute_force(&standard_config()).unwrap();
    report(8, "irreducible-character counts", outcome);
}

#[test]
fn criterion_09_m_set_and_character_tables() {
    let outcome = checks::m_set_and_tables().unwrap();
    report(9, "M-set fixtures and character tables", outcome);
}

#[test]
fn criterion_10_determinism() {
    let outcome = checks::determinism().unwrap();
    report(10, "deterministic enumeration", outcome);
}
