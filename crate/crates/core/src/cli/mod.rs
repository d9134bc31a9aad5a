//! Command-line front end: parsing, dispatch, run manifests and caching.

mod args;
mod cache;
mod checks;
mod commands;
mod gate;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

pub use args::{Cli, Command};
pub use cache::{cache_key, sha256_hex, Cache, Payload, CACHE_ENV};
pub use checks::{dominant_root_rows, run_all, two_root_sum_configs, CheckResult};
pub use commands::{is_forced, resolve_type, resolve_weight, AUDIT_TYPES};
pub use gate::{GateVerdict, QCondition, Table1Gate};

use crate::error::{Error, Result};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;
/// Toolkit version, part of every cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Reproducibility record attached to every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub schema: u32,
    pub command: Vec<String>,
    pub params: Value,
    pub table1: Option<GateVerdict>,
    pub candidates: Option<u64>,
    pub elapsed_ms: u64,
    pub version: String,
    pub digest: String,
    pub cache_hit: bool,
}

/// Full report: manifest, verdict and result payload.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub passed: bool,
    pub result: Value,
    #[serde(skip)]
    pub csv: Option<String>,
}

/// Runs the CLI with the cache directory taken from the environment.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    run_with_cache(argv, dir.as_deref())
}

/// Runs the CLI and returns the exit code: 0 pass, 1 assertion failure, 2 usage error.
pub fn run_with_cache<I, T>(argv: I, cache_dir: Option<&Path>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, &argv, cache_dir) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let written = serde_json::to_writer_pretty(&mut stdout, &report)
                .map_err(std::io::Error::from)
                .and_then(|()| writeln!(stdout));
            match written {
                // A closed pipe (e.g. `| head`) is not a failure of the check.
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    return 1;
                }
                _ => {}
            }
            i32::from(!report.passed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for an error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidType { .. }
        | Error::MalformedWeight(_)
        | Error::NotARoot(_)
        | Error::Precondition(_)
        | Error::Io(_) => 2,
        Error::IterationCap(_) | Error::Inconsistent(_) => 1,
    }
}

fn command_name(cmd: &Command) -> &'static str {
    use args::{AuditCmd, LinkageCmd, RootsysCmd, SearchCmd, SocleCmd, TypecCmd};
    match cmd {
        Command::Rootsys(RootsysCmd::Info(_)) => "rootsys-info",
        Command::Linkage(LinkageCmd::Check { .. }) => "linkage-check",
        Command::Linkage(LinkageCmd::LemmaB { .. }) => "linkage-lemma-b",
        Command::Linkage(LinkageCmd::LemmaC { .. }) => "linkage-lemma-c",
        Command::Linkage(LinkageCmd::F4g2 { .. }) => "linkage-f4g2",
        Command::Linkage(LinkageCmd::TypecZero { .. }) => "linkage-typec-zero",
        Command::Search(SearchCmd::TwoRootSum { .. }) => "search-two-root-sum",
        Command::Search(SearchCmd::E2Forms(_)) => "search-e2-forms",
        Command::Search(SearchCmd::FixedPoints(_)) => "search-fixed-points",
        Command::Search(SearchCmd::Remark44(_)) => "search-remark44",
        Command::Audit(AuditCmd::Inequalities { .. }) => "audit-inequalities",
        Command::Socle(SocleCmd::Compute { .. }) => "socle-compute",
        Command::Typec(TypecCmd::H2 { .. }) => "typec-h2",
        Command::Typec(TypecCmd::Table { .. }) => "typec-table",
        Command::VerifyAll { .. } => "verify-all",
    }
}

/// Canonical argument text: sorted-key JSON plus digests of any input files it names.
fn canonical_args(params: &Value) -> Result<String> {
    fn files(v: &Value, out: &mut Vec<String>) {
        match v {
            Value::String(s) if Path::new(s).is_file() => {
                if let Ok(bytes) = std::fs::read(s) {
                    out.push(format!("{s}={}", sha256_hex(&bytes)));
                }
            }
            Value::Array(a) => a.iter().for_each(|x| files(x, out)),
            Value::Object(m) => m.values().for_each(|x| files(x, out)),
            _ => {}
        }
    }
    let mut inputs = Vec::new();
    files(params, &mut inputs);
    Ok(format!(
        "{}\n{}",
        serde_json::to_string(params)?,
        inputs.join("\n")
    ))
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::Precondition("--jobs must be positive".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Precondition(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Parses nothing; executes an already parsed command line.
pub fn execute(cli: &Cli, argv: &[OsString], cache_dir: Option<&Path>) -> Result<Report> {
    let start = Instant::now();
    let table1 = commands::gate_for(&cli.command)?;
    if let Some(g) = table1.as_ref().filter(|g| !g.admissible) {
        log::warn!("parameters fall outside the admissible range {}", g.rule);
    }
    let params = serde_json::to_value(&cli.command)?;
    let cache = match (cli.no_cache, cache_dir) {
        (false, Some(d)) => Some(Cache::new(d, VERSION)),
        _ => None,
    };
    let key = match &cache {
        Some(c) => Some(c.key(&canonical_args(&params)?)),
        None => None,
    };
    let cached = cache
        .as_ref()
        .zip(key.as_ref())
        .and_then(|(c, k)| c.load(k));
    let cache_hit = cached.is_some();
    let payload = match cached {
        Some(p) => p,
        None => {
            let o = in_pool(cli.jobs, || commands::execute(&cli.command))??;
            let p = Payload {
                result: o.result,
                passed: o.passed,
                candidates: o.candidates,
                csv: o.csv,
            };
            if let (Some(c), Some(k)) = (&cache, &key) {
                if let Err(e) = c.store(k, &p) {
                    log::warn!("could not write cache entry: {e}");
                }
            }
            p
        }
    };
    let report = Report {
        manifest: RunManifest {
            schema: SCHEMA_VERSION,
            command: argv
                .iter()
                .map(|a| a.to_string_lossy().into_owned())
                .collect(),
            params,
            table1,
            candidates: payload.candidates,
            elapsed_ms: start.elapsed().as_millis() as u64,
            version: VERSION.to_string(),
            digest: payload.digest(),
            cache_hit,
        },
        passed: payload.passed,
        result: payload.result,
        csv: payload.csv,
    };
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let name = command_name(&cli.command);
        std::fs::write(
            dir.join(format!("{name}.json")),
            serde_json::to_string_pretty(&report)?,
        )?;
        if let Some(csv) = &report.csv {
            std::fs::write(dir.join(format!("{name}.csv")), csv)?;
        }
    }
    Ok(report)
}
