//! `stlie`: second homology of Steinberg Lie algebras from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch or failed stage,
//! 2 invalid input, 3 size guard exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use stlie_core::presets::{preset, AnyAlgebra};
use stlie_core::report::{RingSummary, Status, VerifyReport, SCHEMA_VERSION};
use stlie_core::ringfile::load_ring_file;
use stlie_core::verify::{
    h2_sl_any, h2_st_any, predictions_any, ring_info_any, verify_any, RingInfo, VerifyOptions, DEFAULT_MAX_DIM,
};
use stlie_core::CoreError;

#[derive(Parser)]
#[command(name = "stlie", version, about = "Second homology of sl_n(R) and st_n(R) over finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect an algebra.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Compute dim H_2 of sl_n(R) or st_n(R) directly.
    H2 {
        algebra: Which,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Run every certificate and compare with the closed forms.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        /// Seed of the randomized well-definedness witness.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock timings per stage (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Dimensions of the commutator space, the ideals I_2, I_3, the quotients and HC_1.
    Info {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Sl,
    St,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RingArgs {
    /// Preset such as gf:2, q, dual:3, poly:2:x^2, matrix:2:2, group:3:S3.
    #[arg(long)]
    preset: Option<String>,
    /// TOML ring file.
    #[arg(long, value_name = "PATH")]
    ring: Option<PathBuf>,
}

enum Failure {
    Mismatch,
    Core(CoreError),
    Io(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

impl RingArgs {
    fn load(&self) -> Result<AnyAlgebra, Failure> {
        match (&self.preset, &self.ring) {
            (Some(p), _) => Ok(preset(p)?),
            (None, Some(path)) => Ok(load_ring_file(path)?),
            (None, None) => unreachable!("clap enforces one ring source"),
        }
    }
}

/// `--json -` replaces the human output so stdout stays parseable.
fn json_on_stdout(json: &Option<PathBuf>) -> bool {
    json.as_deref() == Some(Path::new("-"))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn describe_ring(r: &RingSummary) -> String {
    format!(
        "{}, dim {}, basis [{}], {}",
        r.field,
        r.dim,
        r.basis.join(", "),
        if r.commutative { "commutative" } else { "noncommutative" }
    )
}

fn print_ring_info(info: &RingInfo) {
    println!("ring: {}", describe_ring(&info.ring));
    println!("[R,R]: {}", info.commutator);
    println!("I_2: {}  R_2: {}", info.ideal_2, info.quotient_2);
    println!("I_3: {}  R_3: {}", info.ideal_3, info.quotient_3);
    println!("HC_1: {}", info.hc1);
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn print_report(rep: &VerifyReport) {
    let d = &rep.dims;
    println!("ring: {}", describe_ring(&rep.ring));
    println!("n: {}", rep.n);
    println!(
        "dims: R {}  [R,R] {}  I_2 {}  I_3 {}  R_2 {}  R_3 {}  HC_1 {}",
        d.ring, d.commutator, d.ideal_2, d.ideal_3, d.quotient_2, d.quotient_3, d.hc1
    );
    println!(
        "      sl {}  uce {}  W {}  st {}  st_hat {}",
        opt(d.sl),
        opt(d.uce),
        opt(d.offending_span),
        opt(d.st),
        opt(d.st_hat)
    );
    println!("predicted: H_2(sl) = {}  H_2(st) = {}", rep.predictions.h2_sl, rep.predictions.h2_st);
    println!("computed:  H_2(sl) = {}  H_2(st) = {}", opt(rep.computed.h2_sl), opt(rep.computed.h2_st));
    println!("checks:");
    for c in &rep.checks {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        if c.detail.is_empty() {
            println!("  {tag}  {}", c.id);
        } else {
            println!("  {tag}  {}  ({})", c.id, c.detail);
        }
    }
    if let Some(t) = &rep.timings_ms {
        println!("timings (ms):");
        for (stage, ms) in t {
            println!("  {stage:<16} {ms:.2}");
        }
    }
    if let Some(s) = &rep.failed_stage {
        println!("failed stage: {s}");
    }
    println!("verdict: {}", if rep.passed() { "PASS" } else { "FAIL" });
}

#[derive(Serialize)]
struct H2Output {
    schema_version: u32,
    algebra: &'static str,
    n: usize,
    ring: RingSummary,
    computed: usize,
    predicted: usize,
    verdict: &'static str,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ring { command: RingCommand::Info { ring, json } } => {
            let r = ring.load()?;
            let info = ring_info_any(&r)?;
            if !json_on_stdout(&json) {
                print_ring_info(&info);
            }
            if let Some(path) = json {
                write_json(&path, &info)?;
            }
            Ok(())
        }
        Command::H2 { algebra, n, ring, max_dim, json } => {
            let r = ring.load()?;
            let (name, computed) = match algebra {
                Which::Sl => ("sl", h2_sl_any(&r, n, max_dim)?),
                Which::St => ("st", h2_st_any(&r, n, max_dim)?),
            };
            let p = predictions_any(&r, n)?;
            let predicted = match algebra {
                Which::Sl => p.h2_sl,
                Which::St => p.h2_st,
            };
            let verdict = if computed == predicted { "PASS" } else { "FAIL" };
            if !json_on_stdout(&json) {
                println!("dim H_2({name}_{n}(R)): computed {computed}, predicted {predicted}");
                println!("verdict: {verdict}");
            }
            if let Some(path) = json {
                let ring = ring_info_any(&r)?.ring;
                let out = H2Output { schema_version: SCHEMA_VERSION, algebra: name, n, ring, computed, predicted, verdict };
                write_json(&path, &out)?;
            }
            if computed == predicted {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Verify { n, ring, max_dim, seed, timings, json } => {
            let r = ring.load()?;
            let rep = verify_any(&r, n, &VerifyOptions { max_dim, seed, timings })?;
            if !json_on_stdout(&json) {
                print_report(&rep);
            }
            if let Some(path) = json {
                write_json(&path, &rep)?;
            }
            if rep.passed() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CoreError::GuardExceeded { .. } => 3,
                CoreError::Input(_) | CoreError::InvalidAlgebra(_) | CoreError::Unsupported(_) => 2,
                _ => 1,
            })
        }
    }
}
