//! `timing-diversity`: diversity tables, clip-point sweeps and Monte Carlo
//! runs from the command line.
//!
//! Exit codes: 0 on success, 1 on I/O failure, 2 for usage or parse errors,
//! 3 when a computation's preconditions fail. Every failure writes one JSON
//! record to standard error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod grid;
mod output;

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use output::{write_rows, CrossoverRow, Format, Row, SweepRow};
use rayon::prelude::*;
use serde::Serialize;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use timing_diversity::densities::Truncated;
use timing_diversity::detectors::LinearOptions;
use timing_diversity::diversity::{crossover_residual, crossover_tau, CrossoverOptions};
use timing_diversity::grid::{parse_m_grid, parse_trials};
use timing_diversity::montecarlo::{simulate_pe, write_csv, write_json, SimPlan, TrialBudget};
use timing_diversity::{full_report, parse_law, tables, DetectorKind, Error, Law};

/// Seed used when `--seed` is omitted.
const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "timing-diversity", version, about = "Diversity gains of timing-channel detectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file, or `-` for standard output.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    /// Seed for every random stream.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker thread cap (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// All four gains for one law and shift.
    Report {
        #[arg(long)]
        density: String,
        #[arg(long)]
        delta: f64,
    },
    /// One of the four reference tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
    },
    /// Gains of a law truncated at each clip point of a grid.
    SweepTau {
        /// Untruncated law on a half-line.
        #[arg(long)]
        base: String,
        #[arg(long)]
        delta: f64,
        /// `start:stop:step` or a comma list.
        #[arg(long)]
        tau: String,
    },
    /// Clip point where first- and last-arrival gains coincide.
    Crossover {
        #[arg(long)]
        base: String,
        #[arg(long)]
        delta: f64,
        /// Search limit beyond the shift, in units of the law's scale.
        #[arg(long, default_value_t = 1e4)]
        max_scales: f64,
    },
    /// Monte Carlo error rates over a particle grid.
    Simulate {
        #[arg(long)]
        density: String,
        #[arg(long)]
        delta: f64,
        /// ml, lin, fa or la.
        #[arg(long)]
        detector: String,
        /// Particle counts: `start:stop[:step]`, a count, or a comma list.
        #[arg(long)]
        m: String,
        /// Trials per grid point (the cap when `--adaptive` is set).
        #[arg(long, default_value = "1e6")]
        trials: String,
        /// Stop each grid point once `--min-errors` errors are seen.
        #[arg(long)]
        adaptive: bool,
        #[arg(long, default_value_t = 200)]
        min_errors: u64,
        /// Let the linear detector fall back to a median threshold for
        /// infinite-mean laws.
        #[arg(long)]
        median_fallback: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Serialize)]
struct ErrorRecord {
    error: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    position: Option<usize>,
    exit_code: u8,
}

impl Failure {
    fn record(&self) -> ErrorRecord {
        let (error, message, position, exit_code) = match self {
            Failure::Usage(m) => ("Usage", m.clone(), None, 2),
            Failure::Io(e) => ("Io", e.to_string(), None, 1),
            Failure::Core(e) => {
                let position = match e {
                    Error::Parse(p) => Some(p.position),
                    _ => None,
                };
                let code = match e {
                    Error::Parse(_) | Error::InvalidParameter(_) => 2,
                    _ => 3,
                };
                (e.kind(), e.to_string(), position, code)
            }
        };
        ErrorRecord { error, message, position, exit_code }
    }
}

fn check_delta(delta: f64) -> Result<(), Failure> {
    if delta > 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--delta must be positive and finite, got {delta}")))
    }
}

fn sink(path: &str) -> Result<Box<dyn Write>, Failure> {
    Ok(if path == "-" {
        Box::new(BufWriter::new(io::stdout().lock()))
    } else {
        Box::new(BufWriter::new(File::create(path)?))
    })
}

fn emit<R: Row>(common: &Common, rows: &[R]) -> Result<(), Failure> {
    let mut out = sink(&common.output)?;
    write_rows(&mut out, rows, common.format)?;
    out.flush()?;
    Ok(())
}

fn sweep(base: &Law, delta: f64, taus: &[f64]) -> Result<Vec<SweepRow>, Failure> {
    taus.par_iter()
        .map(|&tau| {
            let law: Law = Truncated::new(base.clone(), tau)?.into();
            Ok(SweepRow { tau, report: full_report(&law, delta) })
        })
        .collect::<Result<Vec<_>, Error>>()
        .map_err(Failure::from)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = &cli.common;
    match cli.command {
        Command::Report { density, delta } => {
            let law = parse_law(&density)?;
            check_delta(delta)?;
            emit(common, &[full_report(&law, delta)])
        }
        Command::Table { n } => emit(common, &tables::table(n)?),
        Command::SweepTau { base, delta, tau } => {
            let base = parse_law(&base)?;
            check_delta(delta)?;
            let taus = grid::parse_tau_grid(&tau).map_err(|m| Failure::Usage(format!("--tau: {m}")))?;
            emit(common, &sweep(&base, delta, &taus)?)
        }
        Command::Crossover { base, delta, max_scales } => {
            let base = parse_law(&base)?;
            check_delta(delta)?;
            if !(max_scales > 0.0 && max_scales.is_finite()) {
                return Err(Failure::Usage("--max-scales must be positive".into()));
            }
            let tau_star = crossover_tau(&base, delta, CrossoverOptions { max_scales })?;
            let row = CrossoverRow {
                base: base.to_string(),
                delta,
                tau_star,
                residual: crossover_residual(&base, delta, tau_star),
            };
            emit(common, &[row])
        }
        Command::Simulate { density, delta, detector, m, trials, adaptive, min_errors, median_fallback } => {
            let law = parse_law(&density)?;
            check_delta(delta)?;
            let detector: DetectorKind = detector.parse()?;
            let m_grid = parse_m_grid(&m)?;
            let trials = parse_trials(&trials)?;
            let budget = if adaptive {
                TrialBudget::Adaptive { min_errors, max_trials: trials }
            } else {
                TrialBudget::Fixed(trials)
            };
            let plan = SimPlan::new(law, delta, detector, m_grid, budget, common.seed)?
                .with_linear_options(LinearOptions { median_fallback });
            let results = plan.m_grid.iter().map(|&m| simulate_pe(&plan, m)).collect::<Result<Vec<_>, _>>()?;
            let mut out = sink(&common.output)?;
            match common.format {
                Format::Csv => write_csv(&mut out, &results)?,
                Format::Json => write_json(&mut out, &results)?,
            }
            out.flush()?;
            Ok(())
        }
    }
}

fn fail(f: Failure) -> ExitCode {
    let rec = f.record();
    let line = serde_json::to_string(&rec).unwrap_or_else(|_| format!("{{\"error\":\"{}\"}}", rec.error));
    eprintln!("{line}");
    ExitCode::from(rec.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(Failure::Usage(e.render().to_string().trim_end().to_string())),
    };
    let result = match cli.common.threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli)),
            Err(e) => Err(Failure::Usage(format!("cannot start {n} worker threads: {e}"))),
        },
        None => run(cli),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}
