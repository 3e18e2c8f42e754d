use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stable-box"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stable-box-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_config(dir: &PathBuf, body: &str) -> PathBuf {
    let path = dir.join("config.json");
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["run"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_errors_exit_one() {
    let dir = scratch("bad");
    let path = write_config(&dir, r#"{"experiment": "covariance_identity", "seed": 1, "mystery": 3}"#);
    let out = run(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mystery"));
    let path = write_config(&dir, r#"{"experiment": "covariance_identity"}"#);
    assert_eq!(run(&["run", "--config", path.to_str().unwrap()]).status.code(), Some(1));
    let out = run(&["run", "--config", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let path = write_config(&dir, r#"{"experiment": "covariance_identity", "seed": 1}"#);
    assert_eq!(run(&["run", "--config", path.to_str().unwrap(), "--override", "nokey"]).status.code(), Some(1));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn passing_run_writes_outputs_and_exits_zero() {
    let dir = scratch("pass");
    let csv = dir.join("out.csv");
    let body = format!(
        r#"{{"experiment": "covariance_identity", "seed": 4, "output_path": "{}"}}"#,
        csv.to_str().unwrap()
    );
    let path = write_config(&dir, &body);
    let out = run(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("metric,value,tolerance,pass\n"));
    assert!(dir.join("out.csv.json").exists());

    // same config, same bytes
    let first = text;
    run(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), first);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn failing_metric_exits_two() {
    let dir = scratch("fail");
    let path = write_config(
        &dir,
        r#"{"experiment": "averaging_check", "seed": 2, "reps": 200, "n": 30, "tolerances": {"ks_averaging": 0.0}}"#,
    );
    let out = run(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("ks_averaging_t0.5"));
    assert!(stdout.contains("false"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn seed_and_overrides_apply() {
    let dir = scratch("override");
    let path = write_config(&dir, r#"{"experiment": "averaging_check", "seed": 2}"#);
    let args = |seed: &str| {
        let out = run(&[
            "run",
            "--config",
            path.to_str().unwrap(),
            "--seed",
            seed,
            "--override",
            "reps=300",
            "--override",
            "n=20",
        ]);
        // small samples may fail tolerances; only a clean run matters here
        assert_ne!(out.status.code(), Some(1));
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(args("9"), args("9"));
    assert_ne!(args("9"), args("10"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn sample_commands_write_draws() {
    let dir = scratch("sample");
    for (kind, header, rows) in [
        ("stable", "x", 50),
        ("eta", "eta,z", 50),
        ("bridge", "path,t,bridge,z", 3 * 11),
        ("r-limit", "r", 50),
    ] {
        let out_path = dir.join(format!("{kind}.csv"));
        let count = if kind == "bridge" { "3" } else { "50" };
        let out = run(&[
            "sample", kind, "--alpha", "1.2", "--p", "0.7", "--count", count, "--seed", "5", "--k", "200", "--points", "10",
            "--out", out_path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", String::from_utf8_lossy(&out.stderr));
        let text = std::fs::read_to_string(&out_path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(header));
        let values: Vec<&str> = lines.collect();
        assert_eq!(values.len(), rows, "{kind}");
        for line in values {
            for field in line.split(',') {
                assert!(field.parse::<f64>().unwrap().is_finite());
            }
        }
    }
    let out = run(&["sample", "stable", "--alpha", "3.0", "--out", dir.join("x.csv").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(dir).unwrap();
}
