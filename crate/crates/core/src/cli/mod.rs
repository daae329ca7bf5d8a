//! Command-line front end.
//!
//! ```text
//! bsd <validate|lfunction|rank|bsd|zeta-from-counts> [--input <path|->]
//!     [--ell 2,3,7] [--batch <dir>] [--jobs <n>]
//! ```
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 inconsistency.

pub mod job;
pub mod json;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bsd::{bsd_report, BsdReport, ReportOptions};
use crate::error::{Error, ErrorClass, Result};
use crate::homrank::rank_consistency_check;
use crate::lfunction::{build_lfunction, leading_coefficient};
use crate::weil::{real_weil_transform, validate_weil, WeilPolynomial};
pub use job::JobInput;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

pub const MAX_DEGREE_VAR: &str = "WEILBSD_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Lfunction,
    Rank,
    Bsd,
    ZetaFromCounts,
}

impl Command {
    pub fn from_name(name: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(name, false).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Cap on `2g * 2d`, the degree of the composed product.
    pub max_degree: usize,
    /// Overrides each job's `ell_primes` when set.
    pub ell_override: Option<Vec<u64>>,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_degree: DEFAULT_MAX_DEGREE, ell_override: None }
    }
}

impl Config {
    pub fn with_env_cap(value: Option<&str>) -> std::result::Result<Self, String> {
        let max_degree = match value {
            None => DEFAULT_MAX_DEGREE,
            Some(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_DEGREE_VAR}={v:?} is not a nonnegative integer"))?,
        };
        Ok(Config { max_degree, ell_override: None })
    }
}

/// Result of one job: the document to emit and its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct JobOutcome {
    pub exit_code: i32,
    pub document: Value,
    /// Error object for standard error, present on failure.
    pub error: Option<Value>,
}

impl JobOutcome {
    fn failure(err: &Error) -> Self {
        let obj = error_object(err);
        JobOutcome { exit_code: exit_code_for(err), document: obj.clone(), error: Some(obj) }
    }
}

pub fn error_object(err: &Error) -> Value {
    let class = match err.class() {
        ErrorClass::Invalid => "invalid",
        ErrorClass::Inconsistent => "inconsistent",
    };
    json!({ "error": err.name(), "class": class, "detail": err.to_string() })
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err.class() {
        ErrorClass::Invalid => EXIT_INVALID,
        ErrorClass::Inconsistent => EXIT_INCONSISTENT,
    }
}

fn weil_summary(w: &WeilPolynomial) -> Value {
    json!({
        "g": w.g(),
        "point_count": json::int(&w.point_count()),
        "real_weil_transform": json::poly(&real_weil_transform(w)),
    })
}

fn validate_job(job: &JobInput) -> std::result::Result<Value, (Error, &'static str)> {
    let mut doc = json!({ "valid": true, "q": job.field.q() });
    if let Some(f) = &job.f {
        let w = validate_weil(job.field, f).map_err(|e| (e, "f"))?;
        if let (Value::Object(out), Value::Object(extra)) = (&mut doc, weil_summary(&w)) {
            out.extend(extra);
        }
        return Ok(doc);
    }
    if job.base.is_none() && job.f_b.is_none() {
        return Err((Error::InvalidInput("nothing to validate: give f, f_A or f_B".into()), "f"));
    }
    if job.base.is_some() {
        let w = job.certified_base().map_err(|e| (e, "f_A"))?;
        doc["f_A"] = weil_summary(&w);
    }
    if job.f_b.is_some() {
        let w = job.certified_fibre().map_err(|e| (e, "f_B"))?;
        doc["f_B"] = weil_summary(&w);
    }
    Ok(doc)
}

fn certified_pair(job: &JobInput, config: &Config) -> Result<(WeilPolynomial, WeilPolynomial)> {
    let fa = job.certified_base()?;
    let fb = job.certified_fibre()?;
    let degree = fa.degree() * fb.degree();
    if degree > config.max_degree {
        return Err(Error::DegreeCapExceeded { degree, cap: config.max_degree });
    }
    Ok((fa, fb))
}

pub fn report_json(report: &BsdReport) -> Value {
    json!({
        "q": report.field.q(),
        "p": report.field.p(),
        "n": report.field.n(),
        "g": report.g,
        "d": report.d,
        "rank": report.rank,
        "rho": report.rho,
        "torsion": json::int(&report.torsion),
        "special_product": json::rational(&report.special_product),
        "regulator": json::int(&report.regulator),
        "sha": json::int(&report.sha),
        "sha_relative_to_supplied_bases": !report.bases_certified_full,
        "c": json::rational(&report.c),
        "l_star": report.l_star(),
        "leading_coefficient_identity": {
            "q_exponent": report.identity.q_exponent,
            "lhs": json::rational(&report.identity.lhs),
            "rhs": json::rational(&report.identity.rhs),
            "holds": report.identity.holds(),
        },
        "ell_checks": report.ell_checks.iter()
            .map(|c| json!({ "ell": c.ell, "passed": c.passed }))
            .collect::<Vec<_>>(),
        "assumptions": {
            "ns_torsion_free": report.attestations.ns_torsion_free,
            "defect_of_smoothness_zero": report.attestations.defect_of_smoothness_zero,
            "bases_certified_full": report.bases_certified_full,
        },
    })
}

fn execute(command: Command, job: &JobInput, config: &Config) -> Result<Value> {
    match command {
        Command::Validate => unreachable!("validate is handled by run_job"),
        Command::ZetaFromCounts => {
            if !matches!(job.base, Some(job::BaseInput::CurveCounts { .. })) {
                return Err(Error::InvalidInput("zeta-from-counts needs curve_counts".into()));
            }
            let w = job.certified_base()?;
            Ok(json!({
                "valid": true,
                "q": job.field.q(),
                "g": w.g(),
                "f": json::poly(w.poly()),
                "point_count": json::int(&w.point_count()),
            }))
        }
        Command::Lfunction => {
            let (fa, fb) = certified_pair(job, config)?;
            let l = build_lfunction(&fa, &fb)?;
            let sv = leading_coefficient(&l)?;
            Ok(json!({
                "q": job.field.q(),
                "g": l.g(),
                "d": l.d(),
                "numerator": json::poly(l.numerator()),
                "denominator": json::poly(l.denominator()),
                "rho": sv.rho,
                "c": json::rational(&sv.c),
            }))
        }
        Command::Rank => {
            let (fa, fb) = certified_pair(job, config)?;
            let cert = rank_consistency_check(&fa, &fb)?;
            Ok(json!({
                "q": job.field.q(),
                "analytic_rank": cert.analytic,
                "algebraic_rank": cert.algebraic,
                "rank": cert.algebraic,
            }))
        }
        Command::Bsd => {
            let (fa, fb) = certified_pair(job, config)?;
            let options = ReportOptions {
                ell_primes: config.ell_override.clone().or_else(|| job.ell_primes.clone()),
                attestations: job.attestations,
                bases_certified_full: job.bases_certified_full,
            };
            Ok(report_json(&bsd_report(&fa, &fb, &job.regulator, &options)?))
        }
    }
}

pub fn run_job(command: Command, job: &JobInput, config: &Config) -> JobOutcome {
    if command == Command::Validate {
        return match validate_job(job) {
            Ok(document) => JobOutcome { exit_code: EXIT_OK, document, error: None },
            Err((err, subject)) => {
                let document = json!({
                    "valid": false,
                    "reason": err.name(),
                    "detail": err.to_string(),
                    "subject": subject,
                });
                JobOutcome { exit_code: exit_code_for(&err), document, error: Some(error_object(&err)) }
            }
        };
    }
    match execute(command, job, config) {
        Ok(document) => JobOutcome { exit_code: EXIT_OK, document, error: None },
        Err(err) => JobOutcome::failure(&err),
    }
}

/// Parses and runs one job given as JSON text.
pub fn run_job_text(command: Command, text: &str, config: &Config) -> JobOutcome {
    match JobInput::from_json_str(text) {
        Ok(job) => run_job(command, &job, config),
        Err(err) => JobOutcome::failure(&err),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub ok: usize,
    pub invalid: usize,
    pub inconsistent: usize,
}

impl BatchSummary {
    pub fn to_json(&self) -> Value {
        json!({ "ok": self.ok, "invalid": self.invalid, "inconsistent": self.inconsistent })
    }
}

/// Job files in `dir`: `*.json`, excluding earlier `*.report.json` outputs.
pub fn batch_inputs(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        if path.is_file() && name.ends_with(".json") && !name.ends_with(".report.json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

pub fn report_path(input: &Path) -> PathBuf {
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("job");
    input.with_file_name(format!("{stem}.report.json"))
}

/// Runs every job in `dir` on a pool of `parallelism` threads and writes
/// `<stem>.report.json` next to each input. Per-file failures are counted,
/// never fatal; only an unreadable directory or a failed write aborts.
pub fn run_batch(dir: &Path, parallelism: usize, command: Command, config: &Config) -> std::io::Result<BatchSummary> {
    let files = batch_inputs(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(std::io::Error::other)?;
    let codes = pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let outcome = match fs::read_to_string(path) {
                    Ok(text) => match JobInput::from_json_str(&text) {
                        Ok(job) => run_job(job.command.unwrap_or(command), &job, config),
                        Err(err) => JobOutcome::failure(&err),
                    },
                    Err(e) => JobOutcome::failure(&Error::InvalidInput(format!(
                        "cannot read {}: {e}",
                        path.display()
                    ))),
                };
                fs::write(report_path(path), json::render(&outcome.document))?;
                Ok(outcome.exit_code)
            })
            .collect::<std::io::Result<Vec<i32>>>()
    })?;
    let mut summary = BatchSummary::default();
    for code in codes {
        match code {
            EXIT_OK => summary.ok += 1,
            EXIT_INCONSISTENT => summary.inconsistent += 1,
            _ => summary.invalid += 1,
        }
    }
    Ok(summary)
}

#[derive(Parser, Debug)]
#[command(name = "bsd", version, about = "Exact BSD data for constant abelian schemes over finite fields")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Job file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Comma-separated primes for the valuation check.
    #[arg(long, value_delimiter = ',')]
    ell: Option<Vec<u64>>,
    /// Process every job file in a directory.
    #[arg(long, conflicts_with = "input")]
    batch: Option<PathBuf>,
    /// Worker threads for --batch.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn usage(msg: impl Into<String>) -> Self {
        let msg = msg.into();
        let stderr = json::render(&json!({ "error": "Usage", "class": "usage", "detail": msg }));
        CommandOutput { exit_code: EXIT_USAGE, stdout: String::new(), stderr }
    }
}

/// Full CLI entry point. `max_degree_env` is the value of
/// `WEILBSD_MAX_DEGREE`, if set.
pub fn run_command<I, S>(args: I, stdin: &mut dyn Read, max_degree_env: Option<&str>) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandOutput { exit_code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => CommandOutput::usage(rendered.trim_end()),
            };
        }
    };
    let mut config = match Config::with_env_cap(max_degree_env) {
        Ok(c) => c,
        Err(msg) => return CommandOutput::usage(msg),
    };
    config.ell_override = cli.ell.clone();

    if let Some(dir) = &cli.batch {
        return match run_batch(dir, cli.jobs as usize, cli.command, &config) {
            Ok(summary) => CommandOutput {
                exit_code: EXIT_OK,
                stdout: json::render(&summary.to_json()),
                stderr: String::new(),
            },
            Err(e) => CommandOutput::usage(format!("batch over {}: {e}", dir.display())),
        };
    }

    let text = if cli.input == "-" {
        let mut buf = String::new();
        if let Err(e) = stdin.read_to_string(&mut buf) {
            return CommandOutput::usage(format!("cannot read standard input: {e}"));
        }
        buf
    } else {
        match fs::read_to_string(&cli.input) {
            Ok(t) => t,
            Err(e) => return CommandOutput::usage(format!("cannot read {}: {e}", cli.input)),
        }
    };

    let outcome = run_job_text(cli.command, &text, &config);
    let validate_failure = outcome.exit_code != EXIT_OK && outcome.document.get("valid").is_some();
    let stdout = if outcome.exit_code == EXIT_OK || validate_failure {
        json::render(&outcome.document)
    } else {
        String::new()
    };
    let stderr = outcome.error.as_ref().map(json::render).unwrap_or_default();
    CommandOutput { exit_code: outcome.exit_code, stdout, stderr }
}
