//! `rework-rel`: solve, sweep and cross-check rework network reliability
//! instances from the command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage or validation error,
//! 3 engine/oracle mismatch.

mod render;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rework_core::oracle::{compare, oracle_solve, random_small_network, CheckOutcome, RandomNetworkParams};
use rework_core::{
    builtin_network, solve, summarize, unrestricted_space, Error, Network, RunReport, SolveOptions,
};

#[derive(Debug, Parser)]
#[command(name = "rework-rel", version, about = "Exact reliability of multi-state multi-rework networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one (b, d) instance.
    Solve(SolveArgs),
    /// Solve every (b, d) with b in a range and 1 ≤ d ≤ b.
    Sweep(SweepArgs),
    /// Compare the engine against the brute-force oracle.
    Check(CheckArgs),
    /// Print a network document as JSON.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in benchmark: test1..test5.
    #[arg(long, value_name = "ID")]
    builtin: Option<String>,
    /// Network document (JSON).
    #[arg(long, value_name = "PATH")]
    network: Option<PathBuf>,
    /// Seeded random small network (see --seed).
    #[arg(long)]
    random: bool,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Skip index prefixes that cannot lead to a feasible solution.
    #[arg(long)]
    prune: bool,
    /// Worker threads.
    #[arg(long, env = "REWORK_REL_WORKERS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    source: Source,
    /// Input batch size.
    #[arg(long)]
    b: u32,
    /// Demand.
    #[arg(long)]
    d: u32,
    /// Also list every feasible solution (i, j, Z, X, Pr).
    #[arg(long)]
    solutions: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    source: Source,
    /// Batch sizes: N or A..B.
    #[arg(long)]
    b: BRange,
    /// Append averages over the unflagged rows.
    #[arg(long)]
    summarize: bool,
    /// Reference search-space size for the summary ratio. Defaults to the
    /// capacity-bounded box of the network.
    #[arg(long, value_name = "COUNT", requires = "summarize")]
    s_star: Option<f64>,
    /// Average only the first N rows of the sweep.
    #[arg(long, value_name = "N", requires = "summarize")]
    summary_rows: Option<usize>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    source: Source,
    /// Batch sizes: N or A..B.
    #[arg(long)]
    b: BRange,
    /// Demand; every 1 ≤ d ≤ b when omitted.
    #[arg(long)]
    d: Option<u32>,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[command(flatten)]
    source: Source,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

/// `N` or `A..B`.
#[derive(Debug, Clone)]
struct BRange(RangeInclusive<u32>);

impl FromStr for BRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
        let range = match s.split_once("..") {
            Some((a, b)) => parse(a)?..=parse(b.trim_start_matches('='))?,
            None => {
                let n = parse(s)?;
                n..=n
            }
        };
        if range.is_empty() {
            return Err(format!("empty range `{s}`"));
        }
        Ok(BRange(range))
    }
}

enum Failure {
    Usage(String),
    Internal(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Io(_)
            | Error::InvalidNetwork(_)
            | Error::UnknownBuiltin(_)
            | Error::InvalidDemand { .. }
            | Error::BoxTooLarge { .. }
            | Error::CountOverflow
            | Error::EmptySummary => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn load(source: &Source, seed: u64) -> Result<Network, Failure> {
    if let Some(id) = &source.builtin {
        Ok(builtin_network(id)?)
    } else if let Some(path) = &source.network {
        Ok(Network::from_path(path)?)
    } else {
        Ok(random_small_network(&RandomNetworkParams::with_seed(seed)))
    }
}

fn options(run: &RunArgs, record_solutions: bool) -> SolveOptions {
    SolveOptions {
        prune: run.prune,
        workers: run.workers as usize,
        record_solutions,
        ..Default::default()
    }
}

fn warn(reports: &[RunReport]) {
    for r in reports {
        for w in &r.warnings {
            eprintln!("warning: b={} d={}: {w}", r.b, r.d);
        }
    }
}

fn run_solve(args: &SolveArgs, out: &mut impl Write) -> Result<(), Failure> {
    let net = load(&args.source, args.run.seed)?;
    let report = solve(&net, args.b, args.d, &options(&args.run, args.solutions))?;
    warn(std::slice::from_ref(&report));
    match args.run.format {
        Format::Table => render::solve_table(out, &net, &report)?,
        Format::Csv => render::solve_csv(out, &net, &report)?,
        Format::Json => render::json(out, &report)?,
    }
    Ok(())
}

fn run_sweep(args: &SweepArgs, out: &mut impl Write) -> Result<(), Failure> {
    let net = load(&args.source, args.run.seed)?;
    let opts = options(&args.run, false);
    let mut reports = Vec::new();
    for b in args.b.0.clone() {
        for d in 1..=b {
            reports.push(solve(&net, b, d, &opts)?);
        }
    }
    warn(&reports);
    let summary = if args.summarize {
        let rows = args.summary_rows.unwrap_or(reports.len()).min(reports.len());
        let s_star = args.s_star.unwrap_or_else(|| unrestricted_space(&net));
        Some(summarize(&reports[..rows], s_star)?)
    } else {
        None
    };
    let phi = net.lines.len();
    match args.run.format {
        Format::Table => render::sweep_table(out, phi, &reports, summary.as_ref())?,
        Format::Csv => render::sweep_csv(out, phi, &reports, summary.as_ref())?,
        Format::Json => render::sweep_json(out, &reports, summary.as_ref())?,
    }
    Ok(())
}

fn run_check(args: &CheckArgs, out: &mut impl Write) -> Result<(), Failure> {
    let net = load(&args.source, args.seed)?;
    let opts = SolveOptions {
        record_solutions: true,
        ..Default::default()
    };
    for b in args.b.0.clone() {
        let demands = match args.d {
            Some(d) => d..=d,
            None => 1..=b,
        };
        for d in demands {
            let oracle = oracle_solve(&net, b, d)?;
            let engine = solve(&net, b, d, &opts)?;
            match compare(&engine, &oracle) {
                CheckOutcome::Agree {
                    feasible,
                    relative_error,
                } => writeln!(
                    out,
                    "{} b={b} d={d}: s={feasible} agree, |ΔR|/R = {relative_error:.1e} < 1e-12",
                    net.name
                )?,
                CheckOutcome::Disagree { detail } => {
                    return Err(Failure::Mismatch(format!("{} b={b} d={d}: {detail}", net.name)))
                }
            }
        }
    }
    Ok(())
}

fn run_export(args: &ExportArgs, out: &mut impl Write) -> Result<(), Failure> {
    let net = load(&args.source, args.seed)?;
    writeln!(out, "{}", net.to_json())?;
    Ok(())
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 on --help / --version
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Solve(a) => run_solve(a, &mut out),
        Command::Sweep(a) => run_sweep(a, &mut out),
        Command::Check(a) => run_check(a, &mut out),
        Command::Export(a) => run_export(a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Ok(()), Err(e)) | (Err(Failure::Internal(_)), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (Err(Failure::Internal(msg)), Ok(())) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Mismatch(msg)), _) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(3)
        }
    }
}
