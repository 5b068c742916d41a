use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use spcover_core::spectral::LocalFamily;
use spcover_core::suite::{emit_report, exit_code, run_suite, Format, Scope, SuiteConfig};

/// Exact verification suite for spectral covers of Sp(2n) Higgs bundles.
#[derive(Parser, Debug)]
#[command(name = "spcover", version)]
struct Args {
    /// all, factorization, monodromy, multiplicity, picard or numerics
    #[arg(long, default_value = "all")]
    scope: String,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 2)]
    min_g: u64,
    #[arg(long, default_value_t = 5)]
    max_g: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// text or json
    #[arg(long, default_value = "text")]
    format: String,
    /// JSON local family whose stratum multiplicity is reported
    #[arg(long)]
    family: Option<PathBuf>,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

const USAGE: u8 = 2;
const UNWRITABLE: u8 = 3;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("spcover: {msg}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(USAGE);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let scope: Scope = match args.scope.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let format: Format = match args.format.parse() {
        Ok(f) => f,
        Err(e) => return usage(e),
    };
    let family = match &args.family {
        None => None,
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
            };
            match LocalFamily::from_json(&text) {
                Ok(f) => Some(f),
                Err(e) => return usage(format!("{}: {e}", path.display())),
            }
        }
    };
    let cfg = SuiteConfig {
        scope,
        min_n: args.min_n,
        max_n: args.max_n,
        min_g: args.min_g,
        max_g: args.max_g,
        seed: args.seed,
        family,
    };
    let reports = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let rendered = match emit_report(&reports, format) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("spcover: internal error: {e}");
            return ExitCode::from(70);
        }
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, &rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(rendered.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    };
    if let Err(msg) = written {
        eprintln!("spcover: {msg}");
        return ExitCode::from(UNWRITABLE);
    }
    ExitCode::from(exit_code(&reports) as u8)
}
