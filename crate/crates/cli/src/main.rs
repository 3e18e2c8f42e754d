use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use stable_box::experiments::{self, ExperimentConfig};
use stable_box::lepage::{EtaSampler, LePageEnvironment, DEFAULT_TRUNCATION};
use stable_box::limit_law::RLimitSampler;
use stable_box::stable::{sample_stable, StableParams, TailParams};
use stable_box::RngStream;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "stable-box", version, about = "Permutation CUSUM experiments under stable laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment from a JSON config.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Replaces the seed in the config.
        #[arg(long)]
        seed: Option<u64>,
        /// `key=value`, value parsed as JSON (falls back to a string).
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 20240611)]
        seed: u64,
    },
    /// Write raw draws from one of the samplers.
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Series truncation for `eta`, `bridge` and `r-limit`.
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        k: usize,
        /// Time at which `r-limit` is evaluated.
        #[arg(long, default_value_t = 0.5)]
        t: f64,
        /// Number of grid intervals for `bridge`.
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    Stable,
    Eta,
    Bridge,
    RLimit,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Run { config, seed, overrides } => run(config, seed, &overrides),
        Command::Verify { target: VerifyTarget::All, seed } => verify(seed),
        Command::Sample { kind, alpha, p, count, seed, out, k, t, points } => {
            sample(kind, alpha, p, count, seed, &out, k, t, points)?;
            Ok(Outcome::Pass)
        }
    }
}

fn parse_overrides(raw: &[String], seed: Option<u64>) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for item in raw {
        let Some((k, v)) = item.split_once('=') else {
            bail!("override `{item}` is not of the form key=value");
        };
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    if let Some(seed) = seed {
        out.push(("seed".to_string(), seed.to_string()));
    }
    Ok(out)
}

fn run(config: PathBuf, seed: Option<u64>, overrides: &[String]) -> Result<Outcome> {
    let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
    let cfg = ExperimentConfig::from_json_with_overrides(&text, &parse_overrides(overrides, seed)?)?;
    let start = Instant::now();
    let report = experiments::run(&cfg)?;
    eprintln!("{} finished in {:.1} s", cfg.experiment.name(), start.elapsed().as_secs_f64());
    let written = report.write_outputs()?;
    if written.is_empty() {
        print!("{}", report.to_csv()?);
    } else {
        for path in written {
            eprintln!("wrote {}", path.display());
        }
    }
    for m in report.metrics.iter().filter(|m| !m.pass) {
        eprintln!("failed: {} = {} (tolerance {}) {}", m.name, m.value, m.tolerance, m.detail);
    }
    Ok(if report.all_pass() { Outcome::Pass } else { Outcome::Fail })
}

fn verify(seed: u64) -> Result<Outcome> {
    let outcomes = experiments::verify_all(seed, |line| println!("{line}"))?;
    println!();
    for o in &outcomes {
        println!("{}", o.summary());
    }
    Ok(if outcomes.iter().all(|o| o.pass) { Outcome::Pass } else { Outcome::Fail })
}

#[allow(clippy::too_many_arguments)]
fn sample(kind: SampleKind, alpha: f64, p: f64, count: usize, seed: u64, out: &PathBuf, k: usize, t: f64, points: usize) -> Result<()> {
    let mut rng = RngStream::new(seed, 0).rng();
    let mut body = String::new();
    match kind {
        SampleKind::Stable => {
            let params = if alpha == 2.0 {
                StableParams::new(2.0, 0.0, 1.0)?
            } else {
                StableParams::from_tail(&TailParams::new(alpha, p)?)
            };
            body.push_str("x\n");
            for x in sample_stable(&params, count, &mut rng) {
                body.push_str(&format!("{}\n", experiments::format_number(x)));
            }
        }
        SampleKind::Eta => {
            let sampler = EtaSampler::new(TailParams::new(alpha, p)?, k)?;
            body.push_str("eta,z\n");
            for _ in 0..count {
                let d = sampler.sample(&mut rng);
                body.push_str(&format!("{},{}\n", experiments::format_number(d.eta), experiments::format_number(d.z)));
            }
        }
        SampleKind::Bridge => {
            if points < 1 {
                bail!("--points must be at least 1");
            }
            let sampler = EtaSampler::new(TailParams::new(alpha, p)?, k)?;
            let grid: Vec<f64> = (0..=points).map(|i| i as f64 / points as f64).collect();
            body.push_str("path,t,bridge,z\n");
            for path_id in 0..count {
                let path = sampler.sample_bridge(&grid, &mut rng)?;
                for (i, t) in grid.iter().enumerate() {
                    body.push_str(&format!(
                        "{path_id},{},{},{}\n",
                        experiments::format_number(*t),
                        experiments::format_number(path.b_values[i]),
                        experiments::format_number(path.z)
                    ));
                }
            }
        }
        SampleKind::RLimit => {
            let tp = TailParams::new(alpha, p)?;
            let env = LePageEnvironment::sample(k, &mut rng)?;
            let sampler = RLimitSampler::new(&env, &tp, &[t], k)?;
            body.push_str("r\n");
            for v in sampler.sample_many(count, &mut rng).remove(0) {
                body.push_str(&format!("{}\n", experiments::format_number(v)));
            }
        }
    }
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let mut f = std::fs::File::create(out).with_context(|| format!("creating {}", out.display()))?;
    f.write_all(body.as_bytes())?;
    eprintln!("wrote {count} draws to {}", out.display());
    Ok(())
}
