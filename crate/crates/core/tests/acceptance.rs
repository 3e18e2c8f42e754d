//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Tolerances are the experiment defaults in `ExperimentConfig::default_for`,
//! pinned below so a change to a default shows up here as a failure.

use stable_box::experiments::{verify_all, Experiment, ExperimentConfig, EXACT_IDENTITY_BUDGET_SECS};
use std::process::ExitCode;

const SEED: u64 = 20240611;

const PINNED: &[(Experiment, &str, f64)] = &[
    (Experiment::CovarianceIdentity, "moment_mismatches", 0.0),
    (Experiment::CovarianceIdentity, "identity_failures", 0.0),
    (Experiment::CovarianceIdentity, "tie_break_failures", 0.0),
    (Experiment::LepageStability, "ks_strict_stability", 0.02),
    (Experiment::LepageStability, "ks_m_exponential", 0.01),
    (Experiment::LepageStability, "ks_iqr_crosscheck", 0.03),
    (Experiment::FiniteVariance, "ks_sup_zn", 0.03),
    (Experiment::FiniteVariance, "q95_abs_dev", 0.05),
    (Experiment::FiniteVariance, "spread_ratio", 0.5),
    (Experiment::BridgeCrossval, "ks_bridge", 0.05),
    (Experiment::BridgeCrossval, "ks_averaging", 0.02),
    (Experiment::PermutationRandomness, "spread_sd_min", 0.03),
    (Experiment::PermutationRandomness, "spread_sd_ratio", 2.0),
    (Experiment::PermutationRandomness, "ks_realization_vs_limit", 0.15),
    (Experiment::PermutationRandomness, "joint_cov_z", 3.0),
    (Experiment::PermutationRandomness, "tail_variance_ratio", 1e-6),
];

fn tolerances_are_pinned() -> bool {
    let mut ok = EXACT_IDENTITY_BUDGET_SECS == 5.0;
    for &(experiment, key, expected) in PINNED {
        let got = ExperimentConfig::default_for(experiment, SEED).tolerance(key);
        if got != expected {
            println!("tolerance drift: {}.{key} = {got}, pinned {expected}", experiment.name());
            ok = false;
        }
    }
    ok
}

fn main() -> ExitCode {
    if !tolerances_are_pinned() {
        println!("FAIL: tolerances differ from the pinned values");
        return ExitCode::FAILURE;
    }
    let outcomes = match verify_all(SEED, |line| println!("{line}")) {
        Ok(o) => o,
        Err(e) => {
            println!("FAIL: acceptance suite aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!();
    println!("acceptance summary (seed {SEED})");
    for o in &outcomes {
        println!("{}", o.summary());
    }
    if outcomes.iter().all(|o| o.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
