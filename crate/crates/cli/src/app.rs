//! Argument parsing and command dispatch.
//!
//! Exit codes are a total function of the computed result:
//! 0 success/clean, 1 internal error, 2 usage error, 3 identity-path
//! disagreement, 4 verification discrepancy.

use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;

use tripleforge::oracle::{self, OracleConfig};
use tripleforge::{chatetus, power_relations, Error, Interpretation, Mode};

use crate::records::{self, TripleRecord};
use crate::render::{self, Format, VerifySummary};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;
pub const EXIT_DISCREPANCY: u8 = 4;

/// Name of the environment variable overriding the oracle sweep limit.
pub const SWEEP_LIMIT_ENV: &str = "TRIPLEFORGE_SWEEP_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "tripleforge",
    version,
    about = "Pythagorean triples through a prescribed leg: enumeration, power identities, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    /// Exact integrality conditions; complete and sound
    Corrected,
    /// The published divisor-set rule, verbatim
    PaperStrict,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InterpretationArg {
    /// The even-leg set draws l from odd divisors of x^2 only
    OddL,
    /// The even-leg set draws l from all divisors of x^2
    AnyL,
}

fn to_mode(mode: ModeArg, interpretation: InterpretationArg) -> Mode {
    match mode {
        ModeArg::Corrected => Mode::Corrected,
        ModeArg::PaperStrict => Mode::PaperStrict(match interpretation {
            InterpretationArg::OddL => Interpretation::OddL,
            InterpretationArg::AnyL => Interpretation::AnyL,
        }),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every Pythagorean triple with the given leg
    Triples {
        /// The prescribed leg; any positive integer, arbitrary size
        x: String,
        #[arg(long, value_enum, default_value = "corrected")]
        mode: ModeArg,
        /// Reading of the even-leg set in paper-strict mode
        #[arg(long, value_enum, default_value = "odd-l")]
        interpretation: InterpretationArg,
        /// Keep primitive triples only
        #[arg(long)]
        primitive_only: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Relate the d=1 triple on odd leg x to the d=1 triple on x^m
    Relate {
        /// Odd leg, at least 3
        x: String,
        /// Power to raise the leg to, at least 1
        m: u64,
        /// Print the value computed by every route, labeled
        #[arg(long)]
        show_paths: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Cross-check enumeration against exhaustive search over a leg range
    Verify {
        /// Inclusive range of legs, written A..B
        range: String,
        #[arg(long, value_enum, default_value = "corrected")]
        mode: ModeArg,
        /// Reading of the even-leg set in paper-strict mode
        #[arg(long, value_enum, default_value = "odd-l")]
        interpretation: InterpretationArg,
        /// Worker threads for the sweep; defaults to all cores
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroLeg
            | Error::EvenLegRequired { .. }
            | Error::OddLegRequired { .. }
            | Error::ZeroExponent
            | Error::SweepLimitExceeded { .. }
            | Error::EmptyRange => Failure::usage(e.to_string()),
            other => Failure::internal(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            // The consumer closed the stream early (e.g. `| head`).
            Failure {
                code: EXIT_OK,
                message: String::new(),
            }
        } else {
            Failure::internal(format!("output failed: {e}"))
        }
    }
}

/// Runs a parsed invocation to completion and maps it to an exit code.
pub fn run(cli: Cli) -> ExitCode {
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            if !failure.message.is_empty() {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Triples {
            x,
            mode,
            interpretation,
            primitive_only,
            format,
        } => cmd_triples(&x, to_mode(mode, interpretation), primitive_only, format),
        Command::Relate {
            x,
            m,
            show_paths,
            format,
        } => cmd_relate(&x, m, show_paths, format),
        Command::Verify {
            range,
            mode,
            interpretation,
            jobs,
            format,
        } => cmd_verify(&range, to_mode(mode, interpretation), jobs, format),
    }
}

fn parse_leg(raw: &str) -> Result<BigUint, Failure> {
    let x: BigUint = raw
        .parse()
        .map_err(|_| Failure::usage(format!("{raw:?} is not a nonnegative integer")))?;
    if x.is_zero() {
        return Err(Failure::usage("leg must be >= 1"));
    }
    Ok(x)
}

fn cmd_triples(raw_x: &str, mode: Mode, primitive_only: bool, format: Format) -> Result<u8, Failure> {
    let x = parse_leg(raw_x)?;
    let legs = chatetus::triples_with_leg(&x, mode)?;
    for failure in &legs.failures {
        eprintln!("note: candidate d={} rejected: {}", failure.d, failure.error);
    }
    let records: Vec<TripleRecord> = legs
        .triples
        .iter()
        .filter(|t| !primitive_only || t.is_primitive())
        .map(TripleRecord::from)
        .collect();
    render::write_triples(&mut io::stdout().lock(), &records, format)?;
    Ok(EXIT_OK)
}

fn cmd_relate(raw_x: &str, m: u64, show_paths: bool, format: Format) -> Result<u8, Failure> {
    let x = parse_leg(raw_x)?;
    let report = power_relations::relate(&x, m)?;
    let record = records::relation_record(&report, show_paths);
    render::write_relation(&mut io::stdout().lock(), &record, format)?;
    Ok(if report.agreed {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    })
}

fn parse_range(raw: &str) -> Result<(u64, u64), Failure> {
    let malformed = || Failure::usage(format!("malformed range {raw:?}: expected A..B with 1 <= A <= B"));
    let (lo, hi) = raw.split_once("..").ok_or_else(malformed)?;
    let lo: u64 = lo.parse().map_err(|_| malformed())?;
    let hi: u64 = hi.parse().map_err(|_| malformed())?;
    if lo < 1 || hi < lo {
        return Err(malformed());
    }
    Ok((lo, hi))
}

fn oracle_config_from_env() -> Result<OracleConfig, Failure> {
    let mut config = OracleConfig::default();
    if let Some(raw) = std::env::var_os(SWEEP_LIMIT_ENV) {
        let raw = raw.to_string_lossy();
        match raw.parse::<u64>() {
            Ok(limit) if limit >= 1 => config.sweep_limit = limit,
            _ => {
                return Err(Failure::usage(format!(
                    "{SWEEP_LIMIT_ENV} must be a positive integer, got {raw:?}"
                )))
            }
        }
    }
    Ok(config)
}

fn cmd_verify(raw_range: &str, mode: Mode, jobs: Option<u64>, format: Format) -> Result<u8, Failure> {
    let (lo, hi) = parse_range(raw_range)?;
    let config = oracle_config_from_env()?;
    if hi > config.sweep_limit {
        return Err(Failure::usage(format!(
            "range end {hi} exceeds the sweep limit {} (override with {SWEEP_LIMIT_ENV})",
            config.sweep_limit
        )));
    }
    let report = match jobs {
        None => oracle::cross_check(lo, hi, mode, &config)?,
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(|e| Failure::internal(format!("could not start worker pool: {e}")))?
            .install(|| oracle::cross_check(lo, hi, mode, &config))?,
    };
    let records: Vec<_> = report
        .entries
        .iter()
        .map(records::discrepancy_record)
        .collect();
    let summary = VerifySummary {
        lo: report.lo,
        hi: report.hi,
        mode: report.mode.to_string(),
        records: &records,
        clean: report.clean,
    };
    render::write_discrepancies(&mut io::stdout().lock(), &summary, format)?;
    Ok(if report.clean {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    })
}
