use stable_box::experiments::{
    parse_csv, reduced, run, run_bytes_with_threads, sidecar_path, Experiment, ExperimentConfig, OutputFormat,
};

fn small(experiment: Experiment, seed: u64) -> ExperimentConfig {
    reduced(&ExperimentConfig::default_for(experiment, seed))
}

#[test]
fn every_experiment_runs_at_reduced_size() {
    for e in Experiment::ALL {
        let report = run(&small(e, 11)).unwrap();
        assert!(!report.metrics.is_empty(), "{}", e.name());
        for m in &report.metrics {
            assert!(m.value.is_finite(), "{} {}", e.name(), m.name);
        }
    }
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    for e in [Experiment::AveragingCheck, Experiment::PermutationRandomness, Experiment::LepageStability] {
        let cfg = small(e, 12);
        assert_eq!(run_bytes_with_threads(&cfg, 1).unwrap(), run_bytes_with_threads(&cfg, 4).unwrap());
    }
}

#[test]
fn seed_changes_results() {
    let a = run(&small(Experiment::AveragingCheck, 1)).unwrap();
    let b = run(&small(Experiment::AveragingCheck, 2)).unwrap();
    assert_ne!(a.to_csv().unwrap(), b.to_csv().unwrap());
}

#[test]
fn outputs_are_written_and_round_trip() {
    let dir = std::env::temp_dir().join(format!("stable-box-pipeline-{}", std::process::id()));
    let mut cfg = small(Experiment::CovarianceIdentity, 3);
    cfg.output_path = Some(dir.join("identity.csv").to_string_lossy().into_owned());
    let report = run(&cfg).unwrap();
    let written = report.write_outputs().unwrap();
    assert_eq!(written.len(), 2);
    let csv = std::fs::read_to_string(&written[0]).unwrap();
    let rows = parse_csv(&csv).unwrap();
    assert_eq!(rows.len(), report.metrics.len());
    for (row, m) in rows.iter().zip(&report.metrics) {
        assert_eq!(row.metric, m.name);
        assert_eq!(row.value.to_bits(), m.value.to_bits());
        assert_eq!(row.pass, m.pass);
    }
    let sidecar: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(sidecar_path(&written[0])).unwrap()).unwrap();
    assert_eq!(sidecar["environment"]["seed"], 3);
    assert_eq!(sidecar["report"]["config"]["experiment"], "covariance_identity");

    cfg.format = OutputFormat::Json;
    cfg.output_path = Some(dir.join("identity.json").to_string_lossy().into_owned());
    let written = run(&cfg).unwrap().write_outputs().unwrap();
    assert_eq!(written.len(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pass_flags_match_comparisons() {
    let mut cfg = small(Experiment::AveragingCheck, 4);
    cfg.tolerances.insert("ks_averaging".into(), 0.0);
    let report = run(&cfg).unwrap();
    assert!(!report.all_pass());
    assert!(report.metrics.iter().filter(|m| m.name.starts_with("ks_averaging")).all(|m| !m.pass));
}

#[test]
fn finite_variance_rejects_heavy_tails() {
    let mut cfg = small(Experiment::FiniteVariance, 5);
    cfg.alpha = 1.5;
    assert!(run(&cfg).is_err());
    cfg.alpha = 3.0;
    assert!(run(&cfg).is_ok());
}
