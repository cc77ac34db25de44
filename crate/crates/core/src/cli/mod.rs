//! Command-line front end: `compute`, `enumerate`, `verify` and `audit`.
//!
//! Exit codes: 0 success or pass, 1 identity fails, 2 argument error,
//! 3 domain or budget error, 4 pole, 5 inconclusive, 6 I/O error,
//! 7 internal consistency failure.

mod audit;
mod compute;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use audit::{
    build_audit, special_points, AuditEntry, AuditReport, IdentitySection, ParityAdditivity, SpecialValueTally,
    SCHEMA_VERSION,
};
pub use compute::Quantity;

use crate::closed_forms::Family;
use crate::error::Error;
use crate::series::{
    verify_identity, ArithmeticWeight, ComplexValue, GridSize, IdentityId, IdentityPoint, Verdict,
};
use crate::words::{self, DEFAULT_BUDGET};
use crate::Parity;

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_POLE: i32 = 4;
pub const EXIT_INCONCLUSIVE: i32 = 5;
pub const EXIT_IO: i32 = 6;
pub const EXIT_INTERNAL: i32 = 7;

#[derive(Debug, Parser)]
#[command(name = "lyndon-dirichlet", version, about = "Lyndon-word Dirichlet series, special values and Lambert identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity, exactly where possible.
    Compute(ComputeArgs),
    /// List Lyndon words in lexicographic order.
    Enumerate(EnumerateArgs),
    /// Check one identity at one point.
    Verify(VerifyArgs),
    /// Run every identity on its grid and every special-value family, and
    /// write a JSON report.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    /// Weight exponent of the cusp sum.
    #[arg(long)]
    pub d: Option<u64>,
    /// Rational "p/q", a decimal, or (for numeric quantities) a double.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Complex "a+bi".
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Polylogarithm argument, complex.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Point of the upper half-plane, complex.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    #[arg(long)]
    pub terms: Option<u64>,
    #[arg(long, value_enum, default_value_t = Parity::All)]
    pub parity: Parity,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long, value_enum)]
    pub which: Option<ArithmeticWeight>,
    #[arg(long)]
    pub json: bool,
    /// Print a CSV table over the range 0..=m or 1..=n instead of one value.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WordKind {
    Lyndon,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub kind: WordKind,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub n: u64,
    /// Largest k^n that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_identity_id)]
    pub id: IdentityId,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<f64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Retained terms; defaults to the identity's grid setting.
    #[arg(long)]
    pub terms: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, default_value = "report.json")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = GridSize::Default)]
    pub grid: GridSize,
    /// Seeds the random special-value points.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also write the special-value table as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

fn parse_identity_id(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|_| {
        let ids: Vec<_> = IdentityId::ALL.iter().map(|i| i.as_str()).collect();
        format!("unknown identity {s:?}; expected one of {}", ids.join(", "))
    })
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(e) => match e {
                Error::Zero { .. } | Error::Parse { .. } | Error::MissingParameter { .. } => EXIT_USAGE,
                Error::Domain(_) | Error::BudgetExceeded { .. } | Error::ResourceLimit(_) => EXIT_DOMAIN,
                Error::Pole(_) => EXIT_POLE,
                Error::Internal(_) => EXIT_INTERNAL,
            },
            CliError::Io(_) | CliError::Csv(_) => EXIT_IO,
            CliError::Json(_) => EXIT_INTERNAL,
        }
    }
}

pub(crate) fn required<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing required flag --{flag}")))
}

/// Runs a parsed command, writing results to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Compute(args) => compute::run(&args, out),
        Command::Enumerate(args) => {
            let WordKind::Lyndon = args.kind;
            let words = words::enumerate_lyndon_with_budget(args.k, args.n, args.budget)?;
            for w in words {
                writeln!(out, "{w}")?;
            }
            Ok(0)
        }
        Command::Verify(args) => verify(&args, out),
        Command::Audit(args) => audit::run(&args, out),
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let parse = |v: &Option<String>| v.as_deref().map(ComplexValue::parse).transpose();
    let point = IdentityPoint {
        s: parse(&args.s)?,
        k: args.k,
        x: args.x,
        y: args.y,
        n: args.n,
        m: args.m,
        z: parse(&args.z)?,
    };
    let terms = args.terms.unwrap_or_else(|| crate::series::default_grid(args.id, GridSize::Default).1);
    let report = verify_identity(args.id, &point, terms)?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

/// Parses `args` (including the program name) and runs the command.
/// Diagnostics go to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
