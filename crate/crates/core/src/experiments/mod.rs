//! Seeded experiment runner: configuration, reports and output files.
//!
//! A run is a pure function of its [`ExperimentConfig`]. Replicate `i` of arm
//! `a` always draws from the same derived stream, and parallel results are
//! merged by replicate index, so reports are byte-identical across reruns.

mod runs;

pub use runs::{
    run_averaging_check, run_bridge_crossval, run_covariance_identity, run_finite_variance, run_lepage_stability,
    run_permutation_randomness,
};

use crate::error::{Error, Result};
use crate::rng::RngStream;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const LIBRARY_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Experiment {
    FiniteVariance,
    LepageStability,
    BridgeCrossval,
    PermutationRandomness,
    CovarianceIdentity,
    AveragingCheck,
}

impl Experiment {
    pub const ALL: [Experiment; 6] = [
        Experiment::FiniteVariance,
        Experiment::LepageStability,
        Experiment::BridgeCrossval,
        Experiment::PermutationRandomness,
        Experiment::CovarianceIdentity,
        Experiment::AveragingCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::FiniteVariance => "finite_variance",
            Experiment::LepageStability => "lepage_stability",
            Experiment::BridgeCrossval => "bridge_crossval",
            Experiment::PermutationRandomness => "permutation_randomness",
            Experiment::CovarianceIdentity => "covariance_identity",
            Experiment::AveragingCheck => "averaging_check",
        }
    }

    fn tag(self) -> u64 {
        self as u64 + 1
    }

    /// Tolerance keys with their defaults.
    pub fn default_tolerances(self) -> BTreeMap<String, f64> {
        let pairs: &[(&str, f64)] = match self {
            Experiment::FiniteVariance => &[
                ("ks_sup_zn", 0.03),
                ("ks_sup_zn_perm", 0.03),
                ("q95_abs_dev", 0.05),
                ("spread_ratio", 0.5),
            ],
            Experiment::LepageStability => &[
                ("ks_strict_stability", 0.02),
                ("ks_m_exponential", 0.01),
                ("ks_iqr_crosscheck", 0.03),
            ],
            Experiment::BridgeCrossval => &[("ks_bridge", 0.05), ("ks_averaging", 0.02), ("endpoint_max_abs", 0.0)],
            Experiment::PermutationRandomness => &[
                ("spread_sd_min", 0.03),
                ("spread_sd_ratio", 2.0),
                ("ks_realization_vs_limit", 0.15),
                ("joint_cov_z", 3.0),
                ("tail_variance_ratio", 1e-6),
            ],
            Experiment::CovarianceIdentity => &[
                ("moment_mismatches", 0.0),
                ("identity_failures", 0.0),
                ("tie_break_failures", 0.0),
            ],
            Experiment::AveragingCheck => &[("ks_averaging", 0.02), ("endpoint_max_abs", 0.0)],
        };
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Full description of one run. Fields an experiment does not use are
/// carried along unchanged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub seed: u64,
    /// Tail index. For `finite_variance`, 2 means Gaussian data and values
    /// above 2 select two-sided Pareto data with that index.
    pub alpha: f64,
    pub p: f64,
    /// Tail indices scanned by `lepage_stability`.
    pub alphas: Vec<f64>,
    pub n: usize,
    /// Sample size of the averaging arm in `bridge_crossval`.
    pub n_small: usize,
    /// The two sample sizes whose conditional-CDF spreads are compared.
    pub spread_n: Vec<usize>,
    pub reps: usize,
    /// Replicates of the secondary arm.
    pub reps_aux: usize,
    pub num_perms: usize,
    pub num_envs: usize,
    pub draws_per_env: usize,
    pub k_truncation: usize,
    pub ts: Vec<f64>,
    pub joint_ts: Vec<f64>,
    pub x0: f64,
    pub output_path: Option<String>,
    pub format: OutputFormat,
    pub tolerances: BTreeMap<String, f64>,
}

impl ExperimentConfig {
    /// Default desk-scale configuration of `experiment`.
    pub fn default_for(experiment: Experiment, seed: u64) -> Self {
        let mut cfg = Self {
            experiment,
            seed,
            alpha: 1.2,
            p: 0.7,
            alphas: vec![0.5, 1.0, 1.5],
            n: 200,
            n_small: 200,
            spread_n: vec![200, 2000],
            reps: 10_000,
            reps_aux: 100_000,
            num_perms: 2000,
            num_envs: 200,
            draws_per_env: 2000,
            k_truncation: crate::lepage::DEFAULT_TRUNCATION,
            ts: vec![0.5],
            joint_ts: vec![0.3, 0.7],
            x0: 0.0,
            output_path: None,
            format: OutputFormat::Csv,
            tolerances: experiment.default_tolerances(),
        };
        match experiment {
            Experiment::FiniteVariance => {
                cfg.alpha = 2.0;
                cfg.p = 0.5;
                cfg.n = 1000;
                cfg.reps = 5000;
                cfg.num_envs = 50;
                cfg.ts = vec![0.5, 0.25];
            }
            Experiment::LepageStability => {
                cfg.alpha = 1.5;
                cfg.reps = 100_000;
                cfg.num_envs = 100_000;
                cfg.k_truncation = 1000;
            }
            Experiment::BridgeCrossval => {
                cfg.n = 5000;
                cfg.ts = vec![0.5, 1.0];
            }
            Experiment::PermutationRandomness => {
                cfg.reps = 20_000;
                cfg.ts = vec![0.5, 0.25];
            }
            Experiment::CovarianceIdentity => {
                cfg.n = 7;
                cfg.reps = 100;
                cfg.ts = vec![0.25, 0.5, 0.75];
            }
            Experiment::AveragingCheck => {
                cfg.reps = 100_000;
                cfg.ts = vec![0.5, 0.25, 1.0];
            }
        }
        cfg
    }

    /// Parses a JSON config. `experiment` and `seed` are required; every
    /// other field falls back to the experiment's default and unknown keys
    /// are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_value(serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?, &[])
    }

    /// Like [`from_json`](Self::from_json) with `key=value` overrides
    /// applied on top. Values are parsed as JSON, falling back to a string.
    pub fn from_json_with_overrides(text: &str, overrides: &[(String, String)]) -> Result<Self> {
        Self::from_value(serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?, overrides)
    }

    fn from_value(user: Value, overrides: &[(String, String)]) -> Result<Self> {
        let Value::Object(mut user) = user else {
            return Err(Error::Config("config must be a JSON object".into()));
        };
        for (key, raw) in overrides {
            let v = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.clone()));
            user.insert(key.clone(), v);
        }
        let experiment: Experiment = serde_json::from_value(
            user.get("experiment").cloned().ok_or_else(|| Error::Config("missing field `experiment`".into()))?,
        )
        .map_err(|e| Error::Config(e.to_string()))?;
        if !user.contains_key("seed") {
            return Err(Error::Config("missing field `seed`".into()));
        }
        let mut merged = serde_json::to_value(Self::default_for(experiment, 0))?;
        let obj = merged.as_object_mut().expect("config serializes to an object");
        for (key, v) in user {
            if !obj.contains_key(&key) {
                return Err(Error::Config(format!("unknown field `{key}`")));
            }
            if key == "tolerances" {
                let Value::Object(given) = v else {
                    return Err(Error::Config("`tolerances` must be an object".into()));
                };
                let tol = obj.get_mut("tolerances").and_then(Value::as_object_mut).expect("tolerances object");
                for (name, value) in given {
                    if !tol.contains_key(&name) {
                        return Err(Error::Config(format!("unknown tolerance `{name}` for {}", experiment.name())));
                    }
                    tol.insert(name, value);
                }
            } else {
                obj.insert(key, v);
            }
        }
        let cfg: Self = serde_json::from_value(merged).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn tolerance(&self, key: &str) -> f64 {
        self.tolerances.get(key).copied().unwrap_or(f64::NAN)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        for (name, v) in [
            ("n", self.n),
            ("n_small", self.n_small),
            ("reps", self.reps),
            ("reps_aux", self.reps_aux),
            ("num_perms", self.num_perms),
            ("num_envs", self.num_envs),
            ("draws_per_env", self.draws_per_env),
            ("k_truncation", self.k_truncation),
        ] {
            if v < 1 {
                return bad(format!("`{name}` must be at least 1"));
            }
        }
        if !(0.0..=1.0).contains(&self.p) {
            return bad(format!("p = {} outside [0, 1]", self.p));
        }
        if self.ts.is_empty() || self.ts.iter().any(|t| !(*t > 0.0 && *t <= 1.0)) {
            return bad("`ts` must be nonempty with entries in (0, 1]".into());
        }
        let expected = self.experiment.default_tolerances();
        for key in self.tolerances.keys() {
            if !expected.contains_key(key) {
                return bad(format!("unknown tolerance `{key}`"));
            }
        }
        let in_stable_range = self.alpha > 0.0 && self.alpha < 2.0;
        match self.experiment {
            Experiment::FiniteVariance => {
                if self.alpha < 2.0 {
                    return bad(format!("finite_variance needs alpha >= 2 (got {}), an infinite-variance law was requested", self.alpha));
                }
                if self.spread_n.len() != 2 || self.spread_n.iter().any(|&n| n < 2) {
                    return bad("`spread_n` must hold two sizes >= 2".into());
                }
            }
            Experiment::LepageStability => {
                if !in_stable_range || self.alphas.iter().any(|a| !(*a > 0.0 && *a < 2.0)) {
                    return bad("lepage_stability needs tail indices in (0, 2)".into());
                }
            }
            Experiment::BridgeCrossval | Experiment::AveragingCheck => {
                if !in_stable_range {
                    return bad(format!("alpha = {} outside (0, 2)", self.alpha));
                }
                if self.n < 2 || self.n_small < 2 {
                    return bad("sample sizes must be at least 2".into());
                }
            }
            Experiment::PermutationRandomness => {
                if !in_stable_range {
                    return bad(format!("alpha = {} outside (0, 2)", self.alpha));
                }
                if self.spread_n.len() != 2 || self.spread_n.iter().any(|&n| n < 2) {
                    return bad("`spread_n` must hold two sizes >= 2".into());
                }
                if self.ts.iter().any(|&t| t >= 1.0) {
                    return bad("permutation_randomness needs `ts` inside (0, 1)".into());
                }
                if self.joint_ts.len() != 2 || self.joint_ts.iter().any(|t| !(*t > 0.0 && *t < 1.0)) {
                    return bad("`joint_ts` must hold two times inside (0, 1)".into());
                }
            }
            Experiment::CovarianceIdentity => {
                if !(2..=7).contains(&self.n) {
                    return bad(format!("covariance_identity needs 2 <= n <= 7, got {}", self.n));
                }
                if !in_stable_range {
                    return bad(format!("alpha = {} outside (0, 2)", self.alpha));
                }
            }
        }
        if self.experiment != Experiment::FiniteVariance && self.experiment != Experiment::LepageStability && self.alpha == 1.0 && self.p != 0.5 {
            return bad("alpha = 1 requires p = 0.5".into());
        }
        Ok(())
    }

    /// Stream for replicate `rep` of arm `arm`.
    pub(crate) fn stream(&self, arm: u64, rep: u64) -> RngStream {
        RngStream::for_replicate(self.seed, self.experiment.tag() * 64 + arm, rep)
    }
}

/// How a metric value is judged against its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// value < tolerance
    Below,
    /// value <= tolerance
    AtMost,
    /// value > tolerance
    Above,
    /// reported only; always passes
    Info,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub pass: bool,
    pub detail: String,
}

impl Metric {
    pub fn new(name: impl Into<String>, value: f64, tolerance: f64, comparison: Comparison, detail: impl Into<String>) -> Self {
        let pass = match comparison {
            Comparison::Below => value < tolerance,
            Comparison::AtMost => value <= tolerance,
            Comparison::Above => value > tolerance,
            Comparison::Info => true,
        };
        Self {
            name: name.into(),
            value,
            tolerance,
            comparison,
            pass,
            detail: detail.into(),
        }
    }

    pub fn info(name: impl Into<String>, value: f64, detail: impl Into<String>) -> Self {
        Self::new(name, value, f64::NAN, Comparison::Info, detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub metrics: Vec<Metric>,
    pub version: String,
}

impl ExperimentReport {
    pub fn new(config: &ExperimentConfig, metrics: Vec<Metric>) -> Self {
        Self {
            config: config.clone(),
            metrics,
            version: LIBRARY_VERSION.to_string(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.metrics.iter().all(|m| m.pass)
    }

    pub fn metric(&self, name: &str) -> Option<&Metric> {
        self.metrics.iter().find(|m| m.name == name)
    }

    /// CSV with header `metric,value,tolerance,pass`; numbers use 17
    /// significant digits in scientific notation.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["metric", "value", "tolerance", "pass"])?;
        for m in &self.metrics {
            w.write_record([
                m.name.clone(),
                format_number(m.value),
                format_number(m.tolerance),
                m.pass.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// JSON sidecar: the whole report plus the seed.
    pub fn to_json(&self) -> Result<String> {
        let v = serde_json::json!({
            "environment": { "version": self.version, "seed": self.config.seed },
            "report": self,
        });
        Ok(serde_json::to_string_pretty(&v)? + "\n")
    }

    /// Writes the report to `config.output_path`, if set. CSV output gets a
    /// `.json` sidecar next to it. Returns the paths written.
    pub fn write_outputs(&self) -> Result<Vec<PathBuf>> {
        let Some(path) = &self.config.output_path else {
            return Ok(Vec::new());
        };
        let path = PathBuf::from(path);
        match self.config.format {
            OutputFormat::Csv => {
                write_file(&path, &self.to_csv()?)?;
                let sidecar = sidecar_path(&path);
                write_file(&sidecar, &self.to_json()?)?;
                Ok(vec![path, sidecar])
            }
            OutputFormat::Json => {
                write_file(&path, &self.to_json()?)?;
                Ok(vec![path])
            }
        }
    }
}

/// `{:.16e}`, which round-trips every finite double.
pub fn format_number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(contents.as_bytes())?;
    Ok(())
}

/// One parsed CSV row.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct CsvMetric {
    pub metric: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvMetric>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in r.deserialize() {
        out.push(row?);
    }
    Ok(out)
}

/// Runs the experiment named in `cfg`.
pub fn run(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    match cfg.experiment {
        Experiment::FiniteVariance => run_finite_variance(cfg),
        Experiment::LepageStability => run_lepage_stability(cfg),
        Experiment::BridgeCrossval => run_bridge_crossval(cfg),
        Experiment::PermutationRandomness => run_permutation_randomness(cfg),
        Experiment::CovarianceIdentity => run_covariance_identity(cfg),
        Experiment::AveragingCheck => run_averaging_check(cfg),
    }
}

/// One acceptance criterion: the experiment behind it and the metrics that
/// decide it.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub config: ExperimentConfig,
    pub metrics: Vec<String>,
}

/// Criteria 1 to 5, each backed by one experiment at its default size.
/// Criterion 6 is assembled by the caller from the tail-variance metric of
/// criterion 5 and a rerun comparison.
pub fn acceptance_criteria(seed: u64) -> Vec<Criterion> {
    let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        Criterion {
            id: 1,
            title: "exact identities",
            config: ExperimentConfig::default_for(Experiment::CovarianceIdentity, seed),
            metrics: names(&["moment_mismatches", "identity_failures", "tie_break_failures"]),
        },
        Criterion {
            id: 2,
            title: "stable and LePage distributional suite",
            config: ExperimentConfig::default_for(Experiment::LepageStability, seed),
            metrics: names(&[
                "ks_strict_stability_a0.5",
                "ks_strict_stability_a1",
                "ks_strict_stability_a1.5",
                "ks_m_exponential",
                "ks_iqr_crosscheck",
            ]),
        },
        Criterion {
            id: 3,
            title: "finite-variance baseline",
            config: ExperimentConfig::default_for(Experiment::FiniteVariance, seed),
            metrics: names(&["ks_sup_zn", "q95_abs_dev", "spread_ratio_t0.5"]),
        },
        Criterion {
            id: 4,
            title: "bridge limit and averaging cross-validation",
            config: ExperimentConfig::default_for(Experiment::BridgeCrossval, seed),
            metrics: names(&["ks_bridge_t0.5", "ks_averaging_t0.5"]),
        },
        Criterion {
            id: 5,
            title: "random permutation limit",
            config: ExperimentConfig::default_for(Experiment::PermutationRandomness, seed),
            metrics: names(&[
                "spread_sd_n200_t0.5",
                "spread_sd_n2000_t0.5",
                "spread_sd_ratio_t0.5",
                "ks_realization_vs_limit_t0.5",
                "joint_cov_z",
            ]),
        },
    ]
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: String,
    pub pass: bool,
    /// One line per deciding metric or check.
    pub lines: Vec<String>,
    pub seconds: f64,
}

impl CriterionOutcome {
    pub fn summary(&self) -> String {
        format!(
            "criterion {}: {} ({}, {:.1} s)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.title,
            self.seconds
        )
    }
}

/// Wall-clock budget of criterion 1.
pub const EXACT_IDENTITY_BUDGET_SECS: f64 = 5.0;

fn metric_line(m: &Metric) -> String {
    let op = match m.comparison {
        Comparison::Below => "<",
        Comparison::AtMost => "<=",
        Comparison::Above => ">",
        Comparison::Info => "info",
    };
    format!(
        "  [{}] {} = {:.6} ({op} {}) {}",
        if m.pass { "ok" } else { "FAIL" },
        m.name,
        m.value,
        m.tolerance,
        m.detail
    )
}

/// Small configuration exercising the same code paths as `cfg`.
pub fn reduced(cfg: &ExperimentConfig) -> ExperimentConfig {
    let mut c = cfg.clone();
    c.reps = c.reps.min(300);
    c.reps_aux = c.reps_aux.min(500);
    c.num_envs = c.num_envs.min(12);
    c.num_perms = c.num_perms.min(200);
    c.draws_per_env = c.draws_per_env.min(200);
    c.k_truncation = c.k_truncation.min(300);
    if c.experiment != Experiment::CovarianceIdentity {
        c.n = c.n.min(300);
        c.n_small = c.n_small.min(100);
        c.spread_n = vec![50, 120];
    }
    c.output_path = None;
    c
}

/// CSV and JSON bytes of a run inside a pool of `threads` workers.
pub fn run_bytes_with_threads(cfg: &ExperimentConfig, threads: usize) -> Result<(String, String)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let report = pool.install(|| run(cfg))?;
    Ok((report.to_csv()?, report.to_json()?))
}

/// Runs every acceptance criterion. `log` receives progress lines as they
/// are produced; wall times go only there, never into report files.
pub fn verify_all<F: FnMut(&str)>(seed: u64, mut log: F) -> Result<Vec<CriterionOutcome>> {
    let mut outcomes = Vec::new();
    let mut tail_metric = None;
    for c in acceptance_criteria(seed) {
        log(&format!("running criterion {} ({})", c.id, c.title));
        let start = std::time::Instant::now();
        let report = run(&c.config)?;
        let seconds = start.elapsed().as_secs_f64();
        let mut pass = true;
        let mut lines = Vec::new();
        for name in &c.metrics {
            match report.metric(name) {
                Some(m) => {
                    pass &= m.pass;
                    lines.push(metric_line(m));
                }
                None => {
                    pass = false;
                    lines.push(format!("  [FAIL] {name} missing from report"));
                }
            }
        }
        if c.id == 1 {
            let ok = seconds < EXACT_IDENTITY_BUDGET_SECS;
            pass &= ok;
            lines.push(format!(
                "  [{}] runtime = {seconds:.2} s (< {EXACT_IDENTITY_BUDGET_SECS} s)",
                if ok { "ok" } else { "FAIL" }
            ));
        }
        for m in report.metrics.iter().filter(|m| !c.metrics.contains(&m.name)) {
            if m.name == "tail_variance_ratio" {
                tail_metric = Some(m.clone());
            } else {
                lines.push(format!("  supplementary:{}", metric_line(m).trim_start_matches(' ')));
            }
        }
        let outcome = CriterionOutcome { id: c.id, title: c.title.to_string(), pass, lines, seconds };
        for line in &outcome.lines {
            log(line);
        }
        log(&outcome.summary());
        outcomes.push(outcome);
    }

    log("running criterion 6 (numerical hygiene)");
    let start = std::time::Instant::now();
    let mut pass = true;
    let mut lines = Vec::new();
    match &tail_metric {
        Some(m) => {
            pass &= m.pass;
            lines.push(metric_line(m));
        }
        None => {
            pass = false;
            lines.push("  [FAIL] tail_variance_ratio missing".to_string());
        }
    }
    let mut configs: Vec<ExperimentConfig> = acceptance_criteria(seed).iter().map(|c| reduced(&c.config)).collect();
    configs.push(reduced(&ExperimentConfig::default_for(Experiment::AveragingCheck, seed)));
    for cfg in &configs {
        let serial = run_bytes_with_threads(cfg, 1)?;
        let parallel = run_bytes_with_threads(cfg, 3)?;
        let again = run_bytes_with_threads(cfg, 1)?;
        let same = serial == parallel && serial == again;
        pass &= same;
        lines.push(format!(
            "  [{}] {} reruns byte-identical (1, 3 and 1 worker threads)",
            if same { "ok" } else { "FAIL" },
            cfg.experiment.name()
        ));
    }
    let outcome = CriterionOutcome {
        id: 6,
        title: "numerical hygiene".to_string(),
        pass,
        lines,
        seconds: start.elapsed().as_secs_f64(),
    };
    for line in &outcome.lines {
        log(line);
    }
    log(&outcome.summary());
    outcomes.push(outcome);
    Ok(outcomes)
}
