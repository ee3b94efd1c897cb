//! Command-line front end.
//!
//! Exit codes: 0 when every check passes (or is inapplicable), 1 when a
//! violation is found, 2 for usage, input and I/O errors. The environment
//! variable `FUSIONKIT_TOL` overrides the numeric tolerance `1e-9`; it must
//! lie in `(0, 1e-3]`.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::basedmodule::{fp_vector, validate_module, BasedModule};
use crate::catalog;
use crate::fusionring::{fpdims, FusionRing};
use crate::modulardata::{
    class_equation_check, fpdim_square_check, full_report, numobj_check, CenterDatum, ModularData,
};
use crate::numberfield::{AlgebraicReal, BigRational};
use crate::obstructions::{run_suite, SuiteOptions, CHECK_NAMES};
use crate::report::{Report, Status};
use crate::{Error, DEFAULT_TOLERANCE};

pub const TOLERANCE_ENV: &str = "FUSIONKIT_TOL";
const MAX_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "Exact checks for fusion rings and modular data"
)]
struct Args {
    /// Numeric tolerance, in (0, 1e-3]. Overrides FUSIONKIT_TOL.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the fusion ring axioms.
    Validate {
        /// JSON file, or `-` for standard input.
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Frobenius–Perron dimensions with certified minimal polynomials.
    Fpdim {
        /// JSON file, or `-` for standard input.
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the obstruction suite on a fusion ring.
    Suite {
        /// JSON file, or `-` for standard input.
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Only run these checks (repeatable).
        #[arg(long = "check", value_parser = PossibleValuesParser::new(CHECK_NAMES))]
        checks: Vec<String>,
        /// Primes for the prime tests (repeatable).
        #[arg(long = "prime")]
        primes: Vec<u64>,
    },
    /// Check modular data.
    Modular {
        /// JSON file, or `-` for standard input.
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Class equation and related checks on center data.
    Classeq {
        /// JSON file, or `-` for standard input.
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Validate a based module and print its Frobenius–Perron vector.
    Module {
        /// JSON file, or `-` for standard input.
        input: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List or emit bundled data.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List entry addresses.
    List {
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print an entry's payload in its file format.
    Emit {
        /// Catalog address, for example `verlinde-sl2@l=3`.
        name: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Validate,
    Fpdim,
    Suite,
    Modular,
    Classeq,
    Module,
    CatalogList,
    CatalogEmit,
}

/// A parsed command line.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub verb: Verb,
    /// Input path, or catalog address for `catalog emit`.
    pub input: Option<String>,
    pub format: Format,
    pub tolerance: f64,
    pub checks: Vec<String>,
    pub primes: Vec<u64>,
}

/// A command line that did not parse, with the exit code to use. Help and
/// version requests land here with code 0.
#[derive(Clone, Debug)]
pub struct UsageError {
    pub message: String,
    pub code: i32,
}

impl UsageError {
    fn new(message: String) -> Self {
        UsageError { message, code: 2 }
    }
}

fn check_tolerance(t: f64, source: &str) -> Result<f64, UsageError> {
    if t > 0.0 && t <= MAX_TOLERANCE {
        Ok(t)
    } else {
        Err(UsageError::new(format!(
            "{source}: tolerance {t} is outside (0, 1e-3]"
        )))
    }
}

impl RunConfig {
    /// Parses arguments (including the program name) with an optional
    /// tolerance taken from the environment.
    pub fn parse<I, T>(args: I, env_tol: Option<&str>) -> Result<Self, UsageError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let args = Args::try_parse_from(args).map_err(|e| UsageError {
            message: e.render().to_string(),
            code: e.exit_code(),
        })?;
        let tolerance = match (args.tol, env_tol) {
            (Some(t), _) => check_tolerance(t, "--tol")?,
            (None, Some(s)) => {
                let t = s.trim().parse::<f64>().map_err(|_| {
                    UsageError::new(format!("{TOLERANCE_ENV}: `{s}` is not a number"))
                })?;
                check_tolerance(t, TOLERANCE_ENV)?
            }
            (None, None) => DEFAULT_TOLERANCE,
        };
        let fmt = |json: bool| if json { Format::Json } else { Format::Text };
        let path = |p: PathBuf| Some(p.to_string_lossy().into_owned());
        let mut cfg = RunConfig {
            verb: Verb::CatalogList,
            input: None,
            format: Format::Text,
            tolerance,
            checks: Vec::new(),
            primes: Vec::new(),
        };
        match args.command {
            Command::Validate { input, json } => {
                (cfg.verb, cfg.input, cfg.format) = (Verb::Validate, path(input), fmt(json))
            }
            Command::Fpdim { input, json } => {
                (cfg.verb, cfg.input, cfg.format) = (Verb::Fpdim, path(input), fmt(json))
            }
            Command::Suite {
                input,
                json,
                checks,
                primes,
            } => {
                (cfg.verb, cfg.input, cfg.format) = (Verb::Suite, path(input), fmt(json));
                cfg.checks = checks;
                cfg.primes = primes;
            }
            Command::Modular { input, json } => {
                (cfg.verb, cfg.input, cfg.format) = (Verb::Modular, path(input), fmt(json))
            }
            Command::Classeq { input, json } => {
                (cfg.verb, cfg.input, cfg.format) = (Verb::Classeq, path(input), fmt(json))
            }
            Command::Module { input, json } => {
                (cfg.verb, cfg.input, cfg.format) = (Verb::Module, path(input), fmt(json))
            }
            Command::Catalog { action } => match action {
                CatalogAction::List { json } => cfg.format = fmt(json),
                CatalogAction::Emit { name } => {
                    (cfg.verb, cfg.input) = (Verb::CatalogEmit, Some(name))
                }
            },
        }
        Ok(cfg)
    }
}

fn read_input(path: &str) -> crate::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    Ok(std::fs::read_to_string(Path::new(path))?)
}

/// Exit code for an aggregate status.
fn exit_code(status: Status) -> i32 {
    match status {
        Status::Fail => 1,
        _ => 0,
    }
}

fn print_report(report: &Report, format: Format, out: &mut dyn Write) -> std::io::Result<i32> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Text => write!(out, "{}", report.to_text())?,
    }
    Ok(exit_code(report.aggregate))
}

/// `digits`-place decimal bounds with `lo` rounded down and `hi` rounded up.
fn decimal_bounds(lo: &BigRational, hi: &BigRational, digits: u32) -> (String, String) {
    let scale = BigInt::from(10).pow(digits);
    let render = |v: BigInt| {
        let neg = v.is_negative();
        let (int, frac) = v.abs().div_rem(&scale);
        format!(
            "{}{int}.{frac:0>width$}",
            if neg { "-" } else { "" },
            width = digits as usize
        )
    };
    let lo_scaled = (lo * BigRational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    let hi_scaled = (hi * BigRational::from_integer(scale.clone()))
        .ceil()
        .to_integer();
    (render(lo_scaled), render(hi_scaled))
}

fn describe(d: &AlgebraicReal) -> String {
    let mut d = d.clone();
    d.refine(&BigRational::new(1.into(), BigInt::from(10).pow(17)));
    let (lo, hi) = d.interval();
    let mut s = if lo == hi {
        lo.to_string()
    } else {
        let (a, b) = decimal_bounds(lo, hi, 15);
        format!("[{a}, {b}]")
    };
    if let Some(p) = d.certified_min_poly() {
        s.push_str(&format!("  min poly {p}"));
    }
    if let Some(e) = d.exact() {
        if d.rational_value().is_none() {
            s.push_str(&format!("  = {e}"));
        }
    }
    s
}

fn load_ring(cfg: &RunConfig) -> crate::Result<FusionRing> {
    FusionRing::from_json(&read_input(cfg.input.as_deref().unwrap_or("-"))?)
}

fn execute(cfg: &RunConfig, out: &mut dyn Write) -> crate::Result<i32> {
    let input = || read_input(cfg.input.as_deref().unwrap_or("-"));
    match cfg.verb {
        Verb::Validate => {
            let ring = load_ring(cfg)?;
            let report = ring.validate();
            match cfg.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(report)?)?,
                Format::Text if report.is_valid() => writeln!(out, "{}: valid", ring.name())?,
                Format::Text => write!(out, "{}: invalid\n{report}", ring.name())?,
            }
            Ok(if report.is_valid() { 0 } else { 1 })
        }
        Verb::Fpdim => {
            let ring = load_ring(cfg)?;
            if !ring.is_valid() {
                write!(out, "{}: invalid\n{}", ring.name(), ring.validate())?;
                return Ok(1);
            }
            let fp = fpdims(&ring)?;
            let ok = fp.homomorphism.holds(cfg.tolerance);
            match cfg.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&fp)?)?,
                Format::Text => {
                    let width = ring
                        .labels()
                        .iter()
                        .map(|l| l.chars().count())
                        .max()
                        .unwrap_or(0);
                    for (i, d) in fp.dims.iter().enumerate() {
                        writeln!(out, "{:width$}  {}", ring.label(i), describe(d))?;
                    }
                    writeln!(out, "FPdim  {}", describe(&fp.ring_dim))?;
                    if !ok {
                        writeln!(
                            out,
                            "homomorphism residual {:e} exceeds {:e}",
                            fp.homomorphism.max_residual, cfg.tolerance
                        )?;
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Verb::Suite => {
            let ring = load_ring(cfg)?;
            if !ring.is_valid() {
                write!(out, "{}: invalid\n{}", ring.name(), ring.validate())?;
                return Ok(1);
            }
            let options = SuiteOptions {
                primes: cfg.primes.clone(),
                squared_norms: None,
                tolerance: Some(cfg.tolerance),
                only: cfg.checks.clone(),
            };
            let report = run_suite(&ring, &options)?;
            Ok(print_report(&report, cfg.format, out)?)
        }
        Verb::Modular => {
            let md = ModularData::from_json(&input()?)?;
            Ok(print_report(
                &full_report(&md, cfg.tolerance),
                cfg.format,
                out,
            )?)
        }
        Verb::Classeq => {
            let cd = CenterDatum::from_json(&input()?)?;
            let checks = vec![
                class_equation_check(&cd),
                numobj_check(&cd),
                fpdim_square_check(&cd.ring, &cd.dims()),
            ];
            Ok(print_report(
                &Report::new(cd.name.clone(), checks),
                cfg.format,
                out,
            )?)
        }
        Verb::Module => {
            let m = BasedModule::from_json(&input()?)?;
            let report = validate_module(&m);
            let vector = if report.is_valid() && report.indecomposable {
                Some(fp_vector(&m)?)
            } else {
                None
            };
            match cfg.format {
                Format::Json => {
                    let v = serde_json::json!({ "report": report, "fp_vector": vector });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
                }
                Format::Text => {
                    writeln!(
                        out,
                        "valid: {}, indecomposable: {}",
                        report.is_valid(),
                        report.indecomposable
                    )?;
                    for v in &report.violations {
                        writeln!(out, "  {v:?}")?;
                    }
                    for (a, x) in vector.iter().flatten().enumerate() {
                        writeln!(out, "m{a}  {}", describe(x))?;
                    }
                }
            }
            Ok(if report.is_valid() { 0 } else { 1 })
        }
        Verb::CatalogList => {
            let list = catalog::list();
            match cfg.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&list)?)?,
                Format::Text => {
                    for l in list {
                        let note = if l.obstructed { " (obstructed)" } else { "" };
                        writeln!(
                            out,
                            "{:<20} {:<13} {}{note}",
                            l.name,
                            l.kind.to_string(),
                            l.provenance
                        )?;
                    }
                }
            }
            Ok(0)
        }
        Verb::CatalogEmit => {
            let e = catalog::entry(cfg.input.as_deref().unwrap_or(""))?;
            writeln!(out, "{}", e.payload.to_json())?;
            Ok(0)
        }
    }
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, env_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::parse(args, env_tol) {
        Ok(cfg) => cfg,
        Err(e) => {
            let sink: &mut dyn Write = if e.code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.message);
            if !e.message.ends_with('\n') {
                let _ = writeln!(sink);
            }
            return e.code;
        }
    };
    match execute(&cfg, out) {
        Ok(code) => code,
        // The reader went away (`| head`); nothing left to report.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidRing(_) | Error::NotAGrading(_) => 1,
                _ => 2,
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let env_tol = std::env::var(TOLERANCE_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        env_tol.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
