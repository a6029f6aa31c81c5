//! Command line front end: single Hilbert values, tables over a degree
//! range, the conic subroutine, curve-ideal powers, the generic-position
//! probe, and a randomized algorithm-vs-oracle verification campaign.
//!
//! Exit codes: 0 on success, 1 on invalid input or configuration, 2 when a
//! `--verify` comparison or the `verify` campaign finds a mismatch.

use std::io;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use rnc_hilbert::conic::{conic_hilbert_function, conic_ideal_dim_traced, ReductionKind};
use rnc_hilbert::cubic;
use rnc_hilbert::oracle::{Oracle, DEFAULT_PRIME};
use rnc_hilbert::schemes::binomial;
use rnc_hilbert::{ConicScheme, FatPointScheme};

const MAX_MULTIPLICITY: u32 = 60;
const MAX_DEGREE: u32 = 200;
const MAX_POINTS: usize = 10_000;
const MAX_ORACLE_COLUMNS: u64 = 100_000;
const PRIME_ENV_VAR: &str = "RNC_HILBERT_PRIME";

const EXIT_MISMATCH: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rnc-hilbert",
    version,
    about = "Hilbert functions of fat points on a rational normal cubic curve, \
             with an exact interpolation-matrix rank oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert data of one scheme in one degree
    Hilbert(HilbertArgs),
    /// Hilbert data for every degree t = 0..=tmax
    Table(TableArgs),
    /// Ideal dimension of fat points on a smooth plane conic, with the
    /// fixed-component reduction trace
    Conic(ConicArgs),
    /// Dimension of a power of the curve ideal in one degree
    Power(PowerArgs),
    /// Compare the curve value against random generic point placements
    Probe(ProbeArgs),
    /// Randomized campaign: combinatorial algorithm vs rank oracle
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Oracle modulus; must be prime (default: RNC_HILBERT_PRIME env var,
    /// then 2147483647)
    #[arg(long)]
    prime: Option<u64>,
    /// Seed for every random draw, for reproducibility
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CommonArgs {
    fn prime(&self) -> Result<u64> {
        if let Some(p) = self.prime {
            return Ok(p);
        }
        match std::env::var(PRIME_ENV_VAR) {
            Ok(v) => v
                .parse()
                .with_context(|| format!("invalid {PRIME_ENV_VAR} value {v:?}")),
            Err(_) => Ok(DEFAULT_PRIME),
        }
    }
}

/// Comma-separated multiplicity list. Unsorted entries and zeros are fine
/// (they are canonicalized away); the empty string is the empty scheme.
#[derive(Debug, Clone)]
struct MultList(Vec<i64>);

fn parse_mults(s: &str) -> Result<MultList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(MultList(Vec::new()));
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| format!("invalid multiplicity {tok:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(MultList)
}

#[derive(Debug, Args)]
struct HilbertArgs {
    /// Comma-separated multiplicities, e.g. "3,3,2,2,2,2,1"; order and zeros
    /// are irrelevant (canonicalized on ingestion), "" is the empty scheme
    #[arg(long, value_parser = parse_mults)]
    mults: MultList,
    /// Degree t
    #[arg(long)]
    t: u32,
    /// Also compute the oracle value and print MATCH/MISMATCH
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_mults)]
    mults: MultList,
    /// Largest degree to tabulate
    #[arg(long)]
    tmax: u32,
    /// Also compute the oracle value for every row
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct ConicArgs {
    /// Multiplicities at distinct points of a smooth conic; order and zeros
    /// are irrelevant (canonicalized on ingestion)
    #[arg(long, value_parser = parse_mults)]
    alphas: MultList,
    /// Curve degree d
    #[arg(long)]
    d: u32,
    /// Also compute the oracle value and print MATCH/MISMATCH
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct PowerArgs {
    /// Power of the curve ideal
    #[arg(long)]
    n: u32,
    /// Degree t
    #[arg(long)]
    t: u32,
    /// Also compute the generator-span oracle value
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    #[arg(long, value_parser = parse_mults)]
    mults: MultList,
    #[arg(long)]
    t: u32,
    /// Number of random placements to try
    #[arg(long, default_value_t = 5)]
    trials: u32,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Number of randomized instances
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Largest number of points per instance
    #[arg(long = "max-s", default_value_t = 8)]
    max_s: usize,
    /// Largest multiplicity per point
    #[arg(long = "max-m", default_value_t = 4)]
    max_m: u32,
    /// Largest degree
    #[arg(long = "max-t", default_value_t = 12)]
    max_t: u32,
    #[command(flatten)]
    common: CommonArgs,
}

// ---------------------------------------------------------------------------
// Machine-readable records
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
struct OracleReport {
    dim: u64,
    prime: u64,
    seed: u64,
}

#[derive(Debug, Clone, Serialize)]
struct HilbertReport {
    mults: Vec<u32>,
    t: u32,
    ideal_dim: u64,
    hilbert: u64,
    regular: bool,
    curve_mult: u32,
    line_mult_max: u32,
    oracle: Option<OracleReport>,
}

#[derive(Debug, Serialize)]
struct TraceStepReport {
    kind: &'static str,
    degree_before: i64,
    alphas_before: Vec<u32>,
}

#[derive(Debug, Serialize)]
struct ConicReport {
    alphas: Vec<u32>,
    d: u32,
    ideal_dim: u64,
    hilbert: u64,
    trace: Vec<TraceStepReport>,
    oracle: Option<OracleReport>,
}

#[derive(Debug, Serialize)]
struct PowerOracleReport {
    dim: u64,
    prime: u64,
}

#[derive(Debug, Serialize)]
struct PowerReport {
    n: u32,
    t: u32,
    dim: u64,
    oracle: Option<PowerOracleReport>,
}

#[derive(Debug, Serialize)]
struct ProbeOut {
    mults: Vec<u32>,
    t: u32,
    trials: u32,
    prime: u64,
    seed: u64,
    rnc_dim: u64,
    generic_dims: Vec<u64>,
    violations: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct VerifyInstance {
    index: usize,
    mults: Vec<u32>,
    t: u32,
    algorithm: u64,
    oracle: u64,
    matched: bool,
    oracle_seed: u64,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    instances: usize,
    matches: usize,
    prime: u64,
    seed: u64,
    max_s: usize,
    max_m: u32,
    max_t: u32,
    mismatches: Vec<VerifyInstance>,
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

fn validate_scheme_caps(mults: &[u32]) -> Result<()> {
    if mults.len() > MAX_POINTS {
        bail!("{} points exceeds the cap of {MAX_POINTS}", mults.len());
    }
    if let Some(&m) = mults.first() {
        if m > MAX_MULTIPLICITY {
            bail!("multiplicity {m} exceeds the cap of {MAX_MULTIPLICITY}");
        }
    }
    Ok(())
}

fn validate_degree(label: &str, value: u32) -> Result<()> {
    if value > MAX_DEGREE {
        bail!("{label} {value} exceeds the cap of {MAX_DEGREE}");
    }
    Ok(())
}

/// The oracle builds a column per monomial; refuse matrices past the cap.
fn validate_oracle_columns(columns: u64) -> Result<()> {
    if columns > MAX_ORACLE_COLUMNS {
        bail!("oracle matrix would need {columns} columns, cap is {MAX_ORACLE_COLUMNS}");
    }
    Ok(())
}

fn cubic_scheme(mults: &MultList) -> Result<FatPointScheme> {
    let scheme = FatPointScheme::canonicalize(&mults.0)?;
    validate_scheme_caps(scheme.multiplicities())?;
    Ok(scheme)
}

fn conic_scheme(alphas: &MultList) -> Result<ConicScheme> {
    let scheme = ConicScheme::canonicalize(&alphas.0)?;
    validate_scheme_caps(scheme.multiplicities())?;
    Ok(scheme)
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Table(args) => cmd_table(args),
        Command::Conic(args) => cmd_conic(args),
        Command::Power(args) => cmd_power(args),
        Command::Probe(args) => cmd_probe(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn hilbert_report(
    scheme: &FatPointScheme,
    t: u32,
    oracle: Option<&Oracle>,
    seed: u64,
) -> Result<HilbertReport> {
    let rec = cubic::hilbert_function(scheme, t);
    let oracle = oracle
        .map(|o| -> Result<OracleReport> {
            Ok(OracleReport {
                dim: o.dim_cubic(scheme, t, seed)?,
                prime: o.prime(),
                seed,
            })
        })
        .transpose()?;
    Ok(HilbertReport {
        mults: scheme.multiplicities().to_vec(),
        t,
        ideal_dim: rec.ideal_dim,
        hilbert: rec.hilbert_value,
        regular: rec.regular,
        curve_mult: rec.curve_mult,
        line_mult_max: rec.line_mult_max,
        oracle,
    })
}

fn mults_field(mults: &[u32]) -> String {
    mults
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn match_word(report: &HilbertReport) -> Option<&'static str> {
    report.oracle.as_ref().map(|o| {
        if o.dim == report.ideal_dim {
            "MATCH"
        } else {
            "MISMATCH"
        }
    })
}

const HILBERT_CSV_HEADER: [&str; 10] = [
    "mults",
    "t",
    "ideal_dim",
    "hilbert",
    "regular",
    "curve_mult",
    "line_mult_max",
    "oracle_dim",
    "oracle_prime",
    "oracle_seed",
];

fn hilbert_csv_row(report: &HilbertReport) -> Vec<String> {
    let (od, op, os) = match &report.oracle {
        Some(o) => (o.dim.to_string(), o.prime.to_string(), o.seed.to_string()),
        None => (String::new(), String::new(), String::new()),
    };
    vec![
        mults_field(&report.mults),
        report.t.to_string(),
        report.ideal_dim.to_string(),
        report.hilbert.to_string(),
        report.regular.to_string(),
        report.curve_mult.to_string(),
        report.line_mult_max.to_string(),
        od,
        op,
        os,
    ]
}

fn print_hilbert_human(report: &HilbertReport, marker: bool) {
    println!("scheme [{}], t = {}", mults_field(&report.mults), report.t);
    println!("  dim I_t       = {}", report.ideal_dim);
    println!("  H(R/I, t)     = {}", report.hilbert);
    println!("  regular       = {}", report.regular);
    println!("  curve mult    = {}", report.curve_mult);
    println!("  line mult max = {}", report.line_mult_max);
    if let Some(o) = &report.oracle {
        println!(
            "  oracle dim    = {} (prime {}, seed {}) -> {}",
            o.dim,
            o.prime,
            o.seed,
            match_word(report).unwrap()
        );
    }
    if marker {
        println!("  (regularity index)");
    }
}

fn cmd_hilbert(args: HilbertArgs) -> Result<ExitCode> {
    let scheme = cubic_scheme(&args.mults)?;
    validate_degree("t", args.t)?;
    let oracle = if args.verify {
        validate_oracle_columns(binomial(i64::from(args.t) + 3, 3))?;
        Some(Oracle::new(args.common.prime()?)?)
    } else {
        None
    };
    let report = hilbert_report(&scheme, args.t, oracle.as_ref(), args.common.seed)?;
    match args.common.format {
        Format::Human => print_hilbert_human(&report, false),
        Format::Json => println!("{}", serde_json::to_string(&report)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(HILBERT_CSV_HEADER)?;
            w.write_record(hilbert_csv_row(&report))?;
            w.flush()?;
        }
    }
    if match_word(&report) == Some("MISMATCH") {
        return Ok(ExitCode::from(EXIT_MISMATCH));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode> {
    let scheme = cubic_scheme(&args.mults)?;
    validate_degree("tmax", args.tmax)?;
    let oracle = if args.verify {
        validate_oracle_columns(binomial(i64::from(args.tmax) + 3, 3))?;
        Some(Oracle::new(args.common.prime()?)?)
    } else {
        None
    };
    let reg_index = cubic::regularity_index(&scheme);
    let reports: Vec<HilbertReport> = (0..=args.tmax)
        .map(|t| hilbert_report(&scheme, t, oracle.as_ref(), args.common.seed))
        .collect::<Result<_>>()?;
    match args.common.format {
        Format::Human => {
            println!(
                "scheme [{}]  degree {}  regularity index {}",
                mults_field(scheme.multiplicities()),
                scheme.degree(),
                reg_index
            );
            let oracle_header = if args.verify { "  oracle" } else { "" };
            println!("     t  dim I_t  H(R/I,t)  regular  curve  line{oracle_header}");
            for r in &reports {
                let oracle_cell = match (&r.oracle, match_word(r)) {
                    (Some(o), Some(word)) => format!("  {} {}", o.dim, word),
                    _ => String::new(),
                };
                let marker = if r.t == reg_index {
                    "  <- regularity index"
                } else {
                    ""
                };
                println!(
                    "  {:>4}  {:>7}  {:>8}  {:>7}  {:>5}  {:>4}{}{}",
                    r.t,
                    r.ideal_dim,
                    r.hilbert,
                    r.regular,
                    r.curve_mult,
                    r.line_mult_max,
                    oracle_cell,
                    marker
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&reports)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(HILBERT_CSV_HEADER)?;
            for r in &reports {
                w.write_record(hilbert_csv_row(r))?;
            }
            w.flush()?;
        }
    }
    if reports.iter().any(|r| match_word(r) == Some("MISMATCH")) {
        return Ok(ExitCode::from(EXIT_MISMATCH));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_conic(args: ConicArgs) -> Result<ExitCode> {
    let scheme = conic_scheme(&args.alphas)?;
    validate_degree("d", args.d)?;
    let (dim, trace) = conic_ideal_dim_traced(i64::from(args.d), &scheme);
    let oracle = if args.verify {
        validate_oracle_columns(binomial(i64::from(args.d) + 2, 2))?;
        let oracle = Oracle::new(args.common.prime()?)?;
        Some(OracleReport {
            dim: oracle.dim_conic(&scheme, args.d, args.common.seed)?,
            prime: oracle.prime(),
            seed: args.common.seed,
        })
    } else {
        None
    };
    let report = ConicReport {
        alphas: scheme.multiplicities().to_vec(),
        d: args.d,
        ideal_dim: dim,
        hilbert: conic_hilbert_function(i64::from(args.d), &scheme),
        trace: trace
            .steps
            .iter()
            .map(|s| TraceStepReport {
                kind: match s.kind {
                    ReductionKind::Line => "LINE",
                    ReductionKind::Conic => "CONIC",
                },
                degree_before: s.degree_before,
                alphas_before: s.alphas_before.clone(),
            })
            .collect(),
        oracle,
    };
    let mismatch = report
        .oracle
        .as_ref()
        .map(|o| o.dim != report.ideal_dim)
        .unwrap_or(false);
    match args.common.format {
        Format::Human => {
            println!(
                "conic scheme [{}], d = {}",
                mults_field(&report.alphas),
                report.d
            );
            println!("  dim = {}", report.ideal_dim);
            println!("  H   = {}", report.hilbert);
            if report.trace.is_empty() {
                println!("  trace: (no fixed components)");
            } else {
                let rendered: Vec<String> = report
                    .trace
                    .iter()
                    .map(|s| {
                        format!(
                            "{} at d={} [{}]",
                            s.kind,
                            s.degree_before,
                            mults_field(&s.alphas_before)
                        )
                    })
                    .collect();
                println!("  trace: {}", rendered.join("; "));
            }
            if let Some(o) = &report.oracle {
                println!(
                    "  oracle dim = {} (prime {}, seed {}) -> {}",
                    o.dim,
                    o.prime,
                    o.seed,
                    if mismatch { "MISMATCH" } else { "MATCH" }
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&report)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record([
                "alphas",
                "d",
                "ideal_dim",
                "hilbert",
                "trace",
                "oracle_dim",
                "oracle_prime",
                "oracle_seed",
            ])?;
            let kinds: Vec<&str> = report.trace.iter().map(|s| s.kind).collect();
            let (od, op, os) = match &report.oracle {
                Some(o) => (o.dim.to_string(), o.prime.to_string(), o.seed.to_string()),
                None => (String::new(), String::new(), String::new()),
            };
            w.write_record([
                mults_field(&report.alphas),
                report.d.to_string(),
                report.ideal_dim.to_string(),
                report.hilbert.to_string(),
                kinds.join(";"),
                od,
                op,
                os,
            ])?;
            w.flush()?;
        }
    }
    if mismatch {
        return Ok(ExitCode::from(EXIT_MISMATCH));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_power(args: PowerArgs) -> Result<ExitCode> {
    validate_degree("t", args.t)?;
    validate_degree("n", args.n)?;
    let dim = cubic::symbolic_power_dim(args.n, args.t);
    let oracle = if args.verify {
        validate_oracle_columns(binomial(i64::from(args.t) + 3, 3))?;
        let oracle = Oracle::new(args.common.prime()?)?;
        Some(PowerOracleReport {
            dim: oracle.dim_power(args.n, args.t),
            prime: oracle.prime(),
        })
    } else {
        None
    };
    let report = PowerReport {
        n: args.n,
        t: args.t,
        dim,
        oracle,
    };
    let mismatch = report
        .oracle
        .as_ref()
        .map(|o| o.dim != report.dim)
        .unwrap_or(false);
    match args.common.format {
        Format::Human => {
            println!(
                "dim of curve-ideal power n={} in degree t={}: {}",
                report.n, report.t, report.dim
            );
            if let Some(o) = &report.oracle {
                println!(
                    "  oracle dim = {} (prime {}) -> {}",
                    o.dim,
                    o.prime,
                    if mismatch { "MISMATCH" } else { "MATCH" }
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&report)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(["n", "t", "dim", "oracle_dim", "oracle_prime"])?;
            let (od, op) = match &report.oracle {
                Some(o) => (o.dim.to_string(), o.prime.to_string()),
                None => (String::new(), String::new()),
            };
            w.write_record([
                report.n.to_string(),
                report.t.to_string(),
                report.dim.to_string(),
                od,
                op,
            ])?;
            w.flush()?;
        }
    }
    if mismatch {
        return Ok(ExitCode::from(EXIT_MISMATCH));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_probe(args: ProbeArgs) -> Result<ExitCode> {
    let scheme = cubic_scheme(&args.mults)?;
    validate_degree("t", args.t)?;
    validate_oracle_columns(binomial(i64::from(args.t) + 3, 3))?;
    if args.trials == 0 {
        bail!("probe needs at least one trial");
    }
    let oracle = Oracle::new(args.common.prime()?)?;
    let report = oracle.generic_probe(&scheme, args.t, args.trials, args.common.seed)?;
    let out = ProbeOut {
        mults: scheme.multiplicities().to_vec(),
        t: args.t,
        trials: args.trials,
        prime: oracle.prime(),
        seed: args.common.seed,
        rnc_dim: report.rnc_dim,
        generic_dims: report.generic_dims.clone(),
        violations: report.violations(),
    };
    match args.common.format {
        Format::Human => {
            println!(
                "scheme [{}], t = {}: curve ideal dim = {}",
                mults_field(&out.mults),
                out.t,
                out.rnc_dim
            );
            for (i, d) in out.generic_dims.iter().enumerate() {
                let verdict = if *d <= out.rnc_dim {
                    "<= curve value"
                } else {
                    "VIOLATION: exceeds curve value"
                };
                println!("  trial {i}: generic dim = {d}  ({verdict})");
            }
            if out.violations.is_empty() {
                println!(
                    "  comparison held in all {} trials (prime {}, seed {})",
                    out.trials, out.prime, out.seed
                );
            } else {
                println!(
                    "  FINDING: {} trial(s) exceeded the curve value: {:?}",
                    out.violations.len(),
                    out.violations
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&out)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record([
                "mults",
                "t",
                "trials",
                "prime",
                "seed",
                "rnc_dim",
                "generic_dims",
                "violations",
            ])?;
            w.write_record([
                mults_field(&out.mults),
                out.t.to_string(),
                out.trials.to_string(),
                out.prime.to_string(),
                out.seed.to_string(),
                out.rnc_dim.to_string(),
                out.generic_dims
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
                out.violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            ])?;
            w.flush()?;
        }
    }
    // Violations are findings about an open comparison, not errors.
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    use rand::{Rng, SeedableRng};
    if args.instances == 0 {
        bail!("campaign needs at least one instance");
    }
    if args.max_s == 0 || args.max_s > MAX_POINTS {
        bail!("max-s must be between 1 and {MAX_POINTS}");
    }
    if args.max_m == 0 || args.max_m > MAX_MULTIPLICITY {
        bail!("max-m must be between 1 and {MAX_MULTIPLICITY}");
    }
    validate_degree("max-t", args.max_t)?;
    validate_oracle_columns(binomial(i64::from(args.max_t) + 3, 3))?;
    let oracle = Oracle::new(args.common.prime()?)?;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.common.seed);
    let instances: Vec<(Vec<u32>, u32, u64)> = (0..args.instances)
        .map(|_| {
            let s = rng.gen_range(1..=args.max_s);
            let mults: Vec<u32> = (0..s).map(|_| rng.gen_range(1..=args.max_m)).collect();
            (mults, rng.gen_range(0..=args.max_t), rng.gen())
        })
        .collect();

    // Instances are independent; evaluation order does not matter and the
    // collected vector keeps the generation order.
    let results: Vec<VerifyInstance> = instances
        .par_iter()
        .enumerate()
        .map(
            |(index, (mults, t, oracle_seed))| -> Result<VerifyInstance> {
                let scheme = FatPointScheme::from_multiplicities(mults);
                let algorithm = cubic::ideal_dim(&scheme, *t);
                let oracle_dim = oracle.dim_cubic(&scheme, *t, *oracle_seed)?;
                Ok(VerifyInstance {
                    index,
                    mults: scheme.multiplicities().to_vec(),
                    t: *t,
                    algorithm,
                    oracle: oracle_dim,
                    matched: algorithm == oracle_dim,
                    oracle_seed: *oracle_seed,
                })
            },
        )
        .collect::<Result<_>>()?;

    let matches = results.iter().filter(|r| r.matched).count();
    let report = VerifyReport {
        instances: args.instances,
        matches,
        prime: oracle.prime(),
        seed: args.common.seed,
        max_s: args.max_s,
        max_m: args.max_m,
        max_t: args.max_t,
        mismatches: results.into_iter().filter(|r| !r.matched).collect(),
    };
    match args.common.format {
        Format::Human => {
            println!(
                "{}/{} MATCH (max-s {}, max-m {}, max-t {}, prime {}, seed {})",
                report.matches,
                report.instances,
                report.max_s,
                report.max_m,
                report.max_t,
                report.prime,
                report.seed
            );
            for m in &report.mismatches {
                println!(
                    "MISMATCH at instance {}: mults [{}], t={}, algorithm={}, oracle={} (oracle seed {})",
                    m.index,
                    mults_field(&m.mults),
                    m.t,
                    m.algorithm,
                    m.oracle,
                    m.oracle_seed
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&report)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record([
                "index",
                "mults",
                "t",
                "algorithm",
                "oracle",
                "matched",
                "oracle_seed",
            ])?;
            for m in &report.mismatches {
                w.write_record([
                    m.index.to_string(),
                    mults_field(&m.mults),
                    m.t.to_string(),
                    m.algorithm.to_string(),
                    m.oracle.to_string(),
                    m.matched.to_string(),
                    m.oracle_seed.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    if report.matches != report.instances {
        return Ok(ExitCode::from(EXIT_MISMATCH));
    }
    Ok(ExitCode::SUCCESS)
}
