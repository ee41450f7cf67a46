//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; every comparison inside is exact.

use orbihrr::selftest::{self, CriterionResult};

fn report(r: CriterionResult) {
    println!(
        "criterion {} ({}): {} — {} [{} ms]",
        r.id,
        r.name,
        if r.pass { "PASS" } else { "FAIL" },
        r.detail,
        r.elapsed_ms
    );
    assert!(r.pass, "criterion {} ({}) failed: {}", r.id, r.name, r.detail);
}

#[test]
fn criterion_1_hrr_oracle_sweep() {
    report(selftest::hrr_oracle_sweep());
}

#[test]
fn criterion_2_p23_sector_ledger() {
    report(selftest::p23_sector_ledger());
}

#[test]
fn criterion_3_p23_inertia_decomposition() {
    report(selftest::p23_inertia_decomposition());
}

#[test]
fn criterion_4_kring_euler_class() {
    report(selftest::kring_euler_class());
}

#[test]
fn criterion_5_bg_suite() {
    report(selftest::bg_suite());
}

#[test]
fn criterion_6_dft_parseval() {
    report(selftest::dft_parseval());
}

#[test]
fn criterion_7_isometry_formula() {
    report(selftest::isometry_formula());
}

#[test]
fn criterion_8_rank_witnesses() {
    report(selftest::rank_witnesses());
}

#[test]
fn criterion_9_property_suites() {
    report(selftest::property_suites());
}
