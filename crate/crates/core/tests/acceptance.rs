//! Acceptance suite. Each test prints one `PASS`/`FAIL` line for its
//! criterion at full draw counts, then asserts.
//!
//! Run with `cargo test -p recomb-core --test acceptance -- --nocapture`.

use recomb_core::check::{self, CheckOutcome, SuiteConfig};
use recomb_core::output::fmt_f64;
use recomb_core::ModelParams;

const SEED: u64 = 42;

fn suite() -> SuiteConfig {
    SuiteConfig::full(SEED, ModelParams::default())
}

fn verdict(criterion: u32, o: &CheckOutcome) {
    println!(
        "{} criterion {criterion}: {} (draws {}, failures {}, worst {}, tolerance: {}; {})",
        o.status(),
        o.name,
        o.draws,
        o.failures,
        fmt_f64(o.worst),
        o.tolerance,
        o.detail
    );
    assert!(o.passed(), "criterion {criterion} failed: {o:?}");
}

#[test]
fn criterion_1_baseline_distance_monotone_and_peaked() {
    verdict(1, &check::baseline_distance_shape(&suite()));
}

#[test]
fn criterion_2_full_automation_collapse() {
    verdict(2, &check::full_automation_collapse(&suite()));
}

#[test]
fn criterion_3_unique_balanced_growth_path() {
    verdict(3, &check::unique_bgp(&suite()));
}

#[test]
fn criterion_4_derivative_oracles() {
    verdict(4, &check::derivative_oracles(&suite()));
}

#[test]
fn criterion_5_sign_table() {
    verdict(5, &check::sign_table(&suite()));
}

#[test]
fn criterion_6_taylor_agreement() {
    verdict(6, &check::taylor_agreement(&suite()));
}

#[test]
fn criterion_7_scenario_ordering() {
    verdict(7, &check::scenario_ordering(&suite()));
}

#[test]
fn criterion_8_exact_dynamics_residuals() {
    verdict(8, &check::exact_residuals(&suite()));
}

#[test]
fn criterion_9_check_reports_are_byte_identical() {
    let report = || {
        let cfg = suite();
        let mut buf = Vec::new();
        check::write_report(&mut buf, &check::run_all(&cfg), cfg.seed).unwrap();
        buf
    };
    let (a, b) = (report(), report());
    let same = a == b;
    println!(
        "{} criterion 9: determinism ({} bytes, identical = {same})",
        if same { "PASS" } else { "FAIL" },
        a.len()
    );
    assert!(same);
}
