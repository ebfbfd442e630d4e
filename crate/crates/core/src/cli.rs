//! Command-line front end: parameter sweeps emitted as CSV or JSON.
//!
//! Every list flag takes comma-separated values in radians where angles are
//! involved. Flags override a `--config` file (TOML, or JSON by extension),
//! which overrides the per-command defaults.

use std::f64::consts::{PI, TAU};
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::fock::{self, CutoffSearch};
use crate::metrology::{self, ProbeConfig, DEFAULT_STEP};
use crate::verify::{self, figure_gains, Status, SuiteReport, VerifyOptions};
use crate::zwm::{self, ZwmConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Detector photon numbers against φ_S
    Photocurrent,
    /// First-order coherence between the signal detectors against |T|
    Coherence,
    /// Fisher information of the seeded interferometer against θ
    Qfi,
    /// Pre- and post-beamsplitter states with the closed-form covariance
    Covariance,
    /// Run the acceptance checks
    Verify,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Photocurrent => "photocurrent",
            Command::Coherence => "coherence",
            Command::Qfi => "qfi",
            Command::Covariance => "covariance",
            Command::Verify => "verify",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "squeeze-net",
    version,
    about = "Squeezed-state network and ZWM interferometer sweeps"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Gains g
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub g: Vec<f64>,
    /// Transmissivity moduli |T|
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub tmag: Vec<f64>,
    /// Transmissivity phases θ_T
    #[arg(long = "theta-t", value_delimiter = ',', allow_negative_numbers = true)]
    pub theta_t: Vec<f64>,
    /// Signal beamsplitter phases φ_S
    #[arg(long = "phi-s", value_delimiter = ',', allow_negative_numbers = true)]
    pub phi_s: Vec<f64>,
    /// Coherent seed amplitudes β
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub beta: Vec<f64>,
    /// Idler phases θ (an alias of θ_T)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub theta: Vec<f64>,
    /// Points on the default swept axis
    #[arg(long)]
    pub grid: Option<usize>,
    /// Add truncated-Fock columns and checks
    #[arg(long)]
    pub oracle: bool,
    /// Output file (stdout when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// TOML or JSON file with any of the options above
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Negative control for `verify`: corrupts the beamsplitter embedding
    #[arg(long, hide = true)]
    pub debug_wrong_convention: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

/// A scalar or a list in a config file.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Values {
    One(f64),
    Many(Vec<f64>),
}

impl Values {
    fn into_vec(self) -> Vec<f64> {
        match self {
            Values::One(x) => vec![x],
            Values::Many(v) => v,
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    g: Option<Values>,
    tmag: Option<Values>,
    #[serde(alias = "theta_t")]
    theta_t: Option<Values>,
    #[serde(alias = "phi_s")]
    phi_s: Option<Values>,
    beta: Option<Values>,
    theta: Option<Values>,
    grid: Option<usize>,
    oracle: Option<bool>,
    out: Option<PathBuf>,
    format: Option<Format>,
}

fn load_config(path: &Path) -> Result<FileConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let parsed = if is_json {
        serde_json::from_str(&text).map_err(|e| e.to_string())
    } else {
        toml::from_str(&text).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| CliError::usage(format!("config {}: {e}", path.display())))
}

/// Fully resolved run parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub g: Vec<f64>,
    pub tmag: Vec<f64>,
    /// Shared by `θ_T` and `θ`.
    pub theta_t: Vec<f64>,
    pub phi_s: Vec<f64>,
    pub beta: Vec<f64>,
    pub oracle: bool,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub wrong_convention: bool,
}

/// `n` evenly spaced points on `[a, b]`, endpoints included.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|k| a + (b - a) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

fn pick(flag: Vec<f64>, file: Option<Values>, default: impl FnOnce() -> Vec<f64>) -> Vec<f64> {
    if !flag.is_empty() {
        flag
    } else if let Some(v) = file {
        v.into_vec()
    } else {
        default()
    }
}

impl RunConfig {
    pub fn resolve(args: Args) -> Result<RunConfig, CliError> {
        let file = match &args.config {
            Some(p) => load_config(p)?,
            None => FileConfig::default(),
        };
        let grid = args.grid.or(file.grid);
        if grid == Some(0) {
            return Err(CliError::usage("--grid must be at least 1"));
        }
        let cmd = args.command;
        let n = |default: usize| grid.unwrap_or(default);

        if !args.theta.is_empty() && !args.theta_t.is_empty() {
            return Err(CliError::usage(
                "--theta and --theta-t name the same phase; pass one",
            ));
        }
        let (angle_flag, angle_file) = if args.theta.is_empty() {
            (args.theta_t, file.theta_t.or(file.theta))
        } else {
            (args.theta, file.theta.or(file.theta_t))
        };

        let g = pick(args.g, file.g, || match cmd {
            Command::Photocurrent => vec![0.2, 0.8],
            Command::Coherence => figure_gains().to_vec(),
            Command::Qfi | Command::Covariance => vec![0.5],
            Command::Verify => Vec::new(),
        });
        let tmag = pick(args.tmag, file.tmag, || match cmd {
            Command::Photocurrent => vec![0.0, 0.5, 1.0],
            Command::Coherence => linspace(0.0, 1.0, n(101)),
            Command::Qfi => vec![0.5, 1.0],
            Command::Covariance => vec![0.5],
            Command::Verify => Vec::new(),
        });
        let theta_t = pick(angle_flag, angle_file, || match cmd {
            Command::Photocurrent | Command::Covariance => vec![0.0],
            Command::Qfi => linspace(0.0, PI, n(101)),
            Command::Coherence | Command::Verify => Vec::new(),
        });
        let phi_s = pick(args.phi_s, file.phi_s, || match cmd {
            Command::Photocurrent => linspace(0.0, TAU, n(201)),
            Command::Covariance => vec![0.0],
            _ => Vec::new(),
        });
        let beta = pick(args.beta, file.beta, || match cmd {
            Command::Qfi => vec![1.0],
            _ => Vec::new(),
        });
        let format = args.format.or(file.format).unwrap_or(match cmd {
            Command::Covariance | Command::Verify => Format::Json,
            _ => Format::Csv,
        });

        let cfg = RunConfig {
            command: cmd,
            g,
            tmag,
            theta_t,
            phi_s,
            beta,
            oracle: args.oracle || file.oracle.unwrap_or(false),
            out: args.out.or(file.out),
            format,
            wrong_convention: args.debug_wrong_convention,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        let axes: &[(&str, &Vec<f64>)] = match self.command {
            Command::Photocurrent | Command::Covariance => &[
                ("g", &self.g),
                ("tmag", &self.tmag),
                ("theta-t", &self.theta_t),
                ("phi-s", &self.phi_s),
            ],
            Command::Coherence => &[("g", &self.g), ("tmag", &self.tmag)],
            Command::Qfi => &[
                ("g", &self.g),
                ("tmag", &self.tmag),
                ("theta", &self.theta_t),
                ("beta", &self.beta),
            ],
            Command::Verify => &[],
        };
        for (name, values) in axes {
            if values.is_empty() {
                return Err(CliError::usage(format!("--{name} grid is empty")));
            }
            if values.iter().any(|x| !x.is_finite()) {
                return Err(CliError::usage(format!(
                    "--{name} contains a non-finite value"
                )));
            }
        }
        if self.command == Command::Coherence {
            if let Some(g) = self.g.iter().find(|&&g| g <= 0.0) {
                return Err(CliError::usage(format!(
                    "coherence gains must be positive, got g = {g}; the coherence is even in g, \
                     so pass |g| (e^g = 0.37 is g = |ln 0.37|)"
                )));
            }
        }
        if self.command == Command::Covariance && self.format == Format::Csv {
            return Err(CliError::usage("covariance output is JSON only"));
        }
        Ok(())
    }
}

/// Emitted rows plus trailing summary lines.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub summary: Vec<(&'static str, f64)>,
    pub notes: Vec<String>,
}

fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

impl Table {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let io = |e: csv::Error| CliError::usage(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|&x| fmt_float(x)))
                .map_err(io)?;
        }
        let mut text =
            String::from_utf8(w.into_inner().map_err(|e| CliError::usage(e.to_string()))?)
                .expect("csv output is UTF-8");
        for (name, value) in &self.summary {
            text.push_str(&format!("# {name},{}\n", fmt_float(*value)));
        }
        for note in &self.notes {
            text.push_str(&format!("# {note}\n"));
        }
        Ok(text)
    }

    pub fn to_json(&self, command: Command) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, &x)| (c.to_string(), json!(x)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let summary: Map<String, Value> = self
            .summary
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "command": command.name(),
            "columns": self.columns,
            "rows": rows,
            "summary": summary,
            "notes": self.notes,
        })
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

fn zwm_points(cfg: &RunConfig) -> Vec<ZwmConfig> {
    let mut pts = Vec::new();
    for &g in &cfg.g {
        for &t_mag in &cfg.tmag {
            for &theta_t in &cfg.theta_t {
                for &phi_s in &cfg.phi_s {
                    pts.push(ZwmConfig {
                        g,
                        t_mag,
                        theta_t,
                        phi_s,
                    });
                }
            }
        }
    }
    pts
}

fn collect_rows(rows: Vec<crate::Result<Vec<f64>>>) -> Result<Vec<Vec<f64>>, CliError> {
    rows.into_iter()
        .map(|r| r.map_err(CliError::from))
        .collect()
}

fn max_gap(rows: &[Vec<f64>], pairs: &[(usize, usize)]) -> f64 {
    rows.iter()
        .flat_map(|r| pairs.iter().map(move |&(i, j)| (r[i] - r[j]).abs()))
        .fold(0.0, f64::max)
}

pub fn cmd_photocurrent(cfg: &RunConfig) -> Result<Table, CliError> {
    let points = zwm_points(cfg);
    for p in &points {
        p.validate()?;
    }
    let search = CutoffSearch::default();
    let rows = collect_rows(par_map(&points, |p| {
        let closed = zwm::photocurrents_closed(p)?;
        let pipe = zwm::photocurrents_pipeline(p)?;
        let mut row = vec![
            p.g,
            p.t_mag,
            p.theta_t,
            p.phi_s,
            closed.n_s1,
            closed.n_s2,
            pipe.n_s1,
            pipe.n_s2,
        ];
        if cfg.oracle {
            let o = verify::oracle_signals(p, &search)?;
            row.extend([o.n_s1, o.n_s2]);
        }
        Ok(row)
    }))?;
    let mut columns = vec![
        "g",
        "tmag",
        "theta_t",
        "phi_s",
        "n_s1_closed",
        "n_s2_closed",
        "n_s1_pipeline",
        "n_s2_pipeline",
    ];
    let mut summary = vec![("max_abs_discrepancy", max_gap(&rows, &[(4, 6), (5, 7)]))];
    if cfg.oracle {
        columns.extend(["n_s1_oracle", "n_s2_oracle"]);
        summary.push((
            "oracle_max_abs_discrepancy",
            max_gap(&rows, &[(4, 8), (5, 9)]),
        ));
    }
    Ok(Table {
        columns,
        rows,
        summary,
        notes: Vec::new(),
    })
}

pub fn cmd_coherence(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut points = Vec::new();
    for &g in &cfg.g {
        for &t in &cfg.tmag {
            ZwmConfig::new(g, t, 0.0, 0.0)?;
            points.push((g, t));
        }
    }
    let rows = collect_rows(par_map(&points, |&(g, t)| {
        let pipe = zwm::coherence_gamma(&ZwmConfig::new(g, t, 0.0, 0.0)?)?;
        Ok(vec![
            g,
            t,
            zwm::coherence_gamma_closed(g, t),
            zwm::coherence_gamma_sequential(g, t),
            t,
            pipe.gamma,
        ])
    }))?;
    Ok(Table {
        columns: vec![
            "g",
            "tmag",
            "gamma_closed",
            "gamma_wiseman",
            "floor",
            "gamma_pipeline",
        ],
        summary: vec![("max_abs_discrepancy", max_gap(&rows, &[(2, 5)]))],
        rows,
        notes: vec!["gamma is even in g; a legend value e^g < 1 is the curve at |g|".into()],
    })
}

pub fn cmd_qfi(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut points = Vec::new();
    for &g in &cfg.g {
        for &t in &cfg.tmag {
            for &theta in &cfg.theta_t {
                for &beta in &cfg.beta {
                    points.push(ProbeConfig::new(g, t, theta, beta)?);
                }
            }
        }
    }
    let search = CutoffSearch::default();
    let rows = collect_rows(par_map(&points, |pc| {
        let terms = metrology::qfi_terms(pc, DEFAULT_STEP)?;
        let mut row = vec![
            pc.g,
            pc.t_mag,
            pc.theta,
            pc.beta,
            metrology::qfi_leading(pc)?,
            terms.total(),
            terms.covariance_term,
            terms.mean_term,
        ];
        if cfg.oracle {
            row.push(fock::qfi_fd(pc, 1e-3, &search)?.qfi);
        }
        Ok(row)
    }))?;
    let mut columns = vec![
        "g",
        "tmag",
        "theta",
        "beta",
        "qfi_leading",
        "qfi_full",
        "qfi_second_term",
        "qfi_first_term",
    ];
    let mut summary = Vec::new();
    if cfg.oracle {
        columns.push("qfi_oracle");
        let rel = rows
            .iter()
            .map(|r| (r[8] - r[5]).abs() / r[5].abs().max(1e-300))
            .fold(0.0, f64::max);
        summary.push(("oracle_max_rel_discrepancy", rel));
    }
    Ok(Table {
        columns,
        rows,
        summary,
        notes: Vec::new(),
    })
}

pub fn cmd_covariance(cfg: &RunConfig) -> Result<Value, CliError> {
    let points = zwm_points(cfg);
    let mut records = Vec::with_capacity(points.len());
    for p in &points {
        let pre = zwm::pre_beamsplitter_state(p)?;
        let post = zwm::post_beamsplitter_state(p)?;
        let closed = zwm::closed_form_covariance(p)?;
        let gap = crate::linalg::max_abs(&(&closed - pre.cov()));
        let closed_rows: Vec<Vec<f64>> = closed
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect();
        records.push(json!({
            "g": p.g,
            "tmag": p.t_mag,
            "theta_t": p.theta_t,
            "phi_s": p.phi_s,
            "pre": pre,
            "post": post,
            "closed_form": closed_rows,
            "max_abs_discrepancy": gap,
        }));
    }
    Ok(json!({ "command": "covariance", "records": records }))
}

pub fn cmd_verify(cfg: &RunConfig) -> SuiteReport {
    verify::run_suite(&VerifyOptions {
        oracle: cfg.oracle,
        wrong_convention: cfg.wrong_convention,
    })
}

fn verify_csv(report: &SuiteReport) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| CliError::usage(format!("csv: {e}"));
    w.write_record(["id", "status", "oracle", "seconds", "title", "detail"])
        .map_err(io)?;
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        };
        w.write_record([
            c.id.as_str(),
            status,
            if c.oracle { "true" } else { "false" },
            &fmt_float(c.seconds),
            c.title.as_str(),
            c.detail.as_str(),
        ])
        .map_err(io)?;
    }
    Ok(
        String::from_utf8(w.into_inner().map_err(|e| CliError::usage(e.to_string()))?)
            .expect("csv output is UTF-8"),
    )
}

/// Rendered output and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let table = |t: Table| -> Result<Outcome, CliError> {
        let text = match cfg.format {
            Format::Csv => t.to_csv()?,
            Format::Json => render_json(&t.to_json(cfg.command)),
        };
        Ok(Outcome {
            text,
            verified: true,
        })
    };
    match cfg.command {
        Command::Photocurrent => table(cmd_photocurrent(cfg)?),
        Command::Coherence => table(cmd_coherence(cfg)?),
        Command::Qfi => table(cmd_qfi(cfg)?),
        Command::Covariance => Ok(Outcome {
            text: render_json(&cmd_covariance(cfg)?),
            verified: true,
        }),
        Command::Verify => {
            let report = cmd_verify(cfg);
            for c in &report.checks {
                eprintln!("{c}");
            }
            let text = match cfg.format {
                Format::Csv => verify_csv(&report)?,
                Format::Json => render_json(&json!({
                    "passed": report.passed(),
                    "failures": report.failures(),
                    "checks": report.checks,
                })),
            };
            Ok(Outcome {
                text,
                verified: report.passed(),
            })
        }
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Parses `argv`, runs the command, and returns the process exit code:
/// 0 on success, 1 when verification fails, 2 on usage or input errors.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = RunConfig::resolve(args).and_then(|cfg| {
        let outcome = execute(&cfg)?;
        emit(&cfg, &outcome.text)?;
        Ok(outcome.verified)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("squeeze-net: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolve(argv: &[&str]) -> Result<RunConfig, CliError> {
        let mut full = vec!["squeeze-net"];
        full.extend_from_slice(argv);
        RunConfig::resolve(Args::try_parse_from(full).map_err(|e| CliError::usage(e.to_string()))?)
    }

    #[test]
    fn linspace_endpoints() {
        assert_eq!(linspace(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        assert_eq!(linspace(2.0, 5.0, 1), vec![2.0]);
        assert_eq!(linspace(0.0, TAU, 201).last().copied(), Some(TAU));
    }

    #[test]
    fn defaults_per_command() {
        let c = resolve(&["photocurrent"]).unwrap();
        assert_eq!(c.phi_s.len(), 201);
        assert_eq!(c.format, Format::Csv);
        let c = resolve(&["coherence"]).unwrap();
        assert_eq!(c.g, figure_gains().to_vec());
        assert_eq!(c.tmag.len(), 101);
        let c = resolve(&["qfi", "--grid", "7"]).unwrap();
        assert_eq!(c.theta_t.len(), 7);
        assert_eq!(resolve(&["verify"]).unwrap().format, Format::Json);
    }

    #[test]
    fn theta_aliases_theta_t() {
        let c = resolve(&["qfi", "--theta-t", "0.3"]).unwrap();
        assert_eq!(c.theta_t, vec![0.3]);
        let c = resolve(&["photocurrent", "--theta", "0.3,0.4"]).unwrap();
        assert_eq!(c.theta_t, vec![0.3, 0.4]);
        assert!(resolve(&["qfi", "--theta", "1", "--theta-t", "1"]).is_err());
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(matches!(
            resolve(&["coherence", "--g", "-0.99"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            resolve(&["coherence", "--g", "0"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            resolve(&["photocurrent", "--grid", "0"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            resolve(&["covariance", "--format", "csv"]),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn flags_override_config_file() {
        let dir = std::env::temp_dir().join(format!("squeeze-net-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let toml_path = dir.join("run.toml");
        fs::write(
            &toml_path,
            "g = [0.3, 0.4]\ntmag = 0.9\ntheta-t = 0.1\nformat = \"json\"\n",
        )
        .unwrap();
        let p = toml_path.to_str().unwrap();
        let c = resolve(&["photocurrent", "--config", p, "--g", "0.7"]).unwrap();
        assert_eq!(c.g, vec![0.7]);
        assert_eq!(c.tmag, vec![0.9]);
        assert_eq!(c.theta_t, vec![0.1]);
        assert_eq!(c.format, Format::Json);

        let json_path = dir.join("run.json");
        fs::write(&json_path, r#"{"tmag": [0.2], "phi_s": [1.0, 2.0]}"#).unwrap();
        let c = resolve(&["photocurrent", "--config", json_path.to_str().unwrap()]).unwrap();
        assert_eq!(c.tmag, vec![0.2]);
        assert_eq!(c.phi_s, vec![1.0, 2.0]);

        fs::write(&json_path, r#"{"gain": 1}"#).unwrap();
        assert!(resolve(&["photocurrent", "--config", json_path.to_str().unwrap()]).is_err());
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn csv_layout() {
        let t = Table {
            columns: vec!["a", "b"],
            rows: vec![vec![1.0, -0.1]],
            summary: vec![("max", 0.0)],
            notes: vec!["n".into()],
        };
        assert_eq!(
            t.to_csv().unwrap(),
            "a,b\n1.0000000000000000e0,-1.0000000000000001e-1\n# max,0.0000000000000000e0\n# n\n"
        );
    }
}
