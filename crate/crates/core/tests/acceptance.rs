//! The twelve acceptance criteria, one test each. Run with `--nocapture` to
//! see the per-check table and any recorded-only outcomes.

use qcong_core::congruence::VerifyOptions;
use qcong_core::report::render_table;
use qcong_core::suite::{run_criterion, CriterionResult};

fn check(number: u8) {
    let result: CriterionResult = run_criterion(number, &VerifyOptions::default());
    println!("{}", result.summary());
    print!("{}", render_table(&result.reports));
    if !result.recorded.is_empty() {
        println!("  recorded:");
        print!("{}", render_table(&result.recorded));
    }
    for e in &result.errors {
        println!("  error: {e}");
    }
    assert!(result.passed(), "{}", result.summary());
}

#[test]
fn criterion_01_oracle_series_equivalence() {
    check(1);
}

#[test]
fn criterion_02_anchors_and_ramanujan() {
    check(2);
}

#[test]
fn criterion_03_identity_catalog() {
    check(3);
}

#[test]
fn criterion_04_ell_4() {
    check(4);
}

#[test]
fn criterion_05_ell_5k() {
    check(5);
}

#[test]
fn criterion_06_ell_6_powers_of_9() {
    check(6);
}

#[test]
fn criterion_07_ell_6_prime_family() {
    check(7);
}

#[test]
fn criterion_08_ell_8_fixed() {
    check(8);
}

#[test]
fn criterion_09_ell_8_prime_family() {
    check(9);
}

#[test]
fn criterion_10_convolutions() {
    check(10);
}

#[test]
fn criterion_11_intermediates() {
    check(11);
}

#[test]
fn criterion_12_search_rediscovery() {
    check(12);
}
