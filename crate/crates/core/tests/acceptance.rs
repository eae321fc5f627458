//! Acceptance gate: one test per headline criterion, each driving the
//! corresponding seeded sweep. The test names double as the pass/fail
//! lines; run with `--nocapture` for per-criterion case counts, timing and
//! notes. The same sweep drivers (and the same seed derivation) back the
//! command-line `sweep` subcommand, so the gate exercises exactly what
//! ships.

use teichlab_core::sweeps::{self, SweepOutcome};

/// Base seed for the acceptance runs; criterion `i` uses `BASE + i`, the
/// same derivation `sweeps::run_all` applies.
const BASE_SEED: u64 = 20260816;

fn check(index: usize, outcome: SweepOutcome) {
    println!(
        "criterion {index} ({}): {} — {} cases in {:.2}s",
        outcome.claim,
        if outcome.pass { "PASS" } else { "FAIL" },
        outcome.cases,
        outcome.elapsed_seconds
    );
    for note in &outcome.notes {
        println!("    note: {note}");
    }
    for failure in &outcome.failures {
        println!("    failure: {failure}");
    }
    assert!(
        outcome.pass,
        "criterion {index} ({}) failed:\n{}",
        outcome.claim,
        outcome.failures.join("\n")
    );
}

#[test]
fn criterion_1_annihilator_dimension_is_2g_minus_3() {
    check(1, sweeps::annihilator_dimension_sweep(BASE_SEED.wrapping_add(1)));
}

#[test]
fn criterion_2_odd_chains_are_stable_with_exact_kernel() {
    check(2, sweeps::odd_chain_sweep(BASE_SEED.wrapping_add(2)));
}

#[test]
fn criterion_3_even_chains_split_at_rank_two() {
    check(3, sweeps::even_chain_sweep(BASE_SEED.wrapping_add(3)));
}

#[test]
fn criterion_4_nilpotent_cone_and_generic_smoothness() {
    check(4, sweeps::nilpotent_cone_sweep(BASE_SEED.wrapping_add(4)));
}

#[test]
fn criterion_5_period_engine_is_sound_and_invariant() {
    check(5, sweeps::period_soundness_sweep(BASE_SEED.wrapping_add(5)));
}

#[test]
fn criterion_6_levi_form_is_psd_with_predicted_kernel() {
    check(6, sweeps::levi_psd_sweep(BASE_SEED.wrapping_add(6)));
}

#[test]
fn criterion_7_curvature_defect_ratio_is_one_constant() {
    check(7, sweeps::proportionality_sweep(BASE_SEED.wrapping_add(7)));
}

#[test]
fn criterion_8_riemann_roch_identity_is_exact() {
    check(8, sweeps::riemann_roch_sweep(BASE_SEED.wrapping_add(8)));
}
