//! `schurpp`: runs the identity suites, compares plane-partition
//! generating functions, and prints the two-parameter weighted Schur sum.
//!
//! Exit codes: 0 all checks pass, 1 at least one identity falsified,
//! 2 usage or configuration error.

mod report;
mod suites;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigRational, One};
use rayon::prelude::*;

use schurpp_core::algebra::{Monomial, Var};
use schurpp_core::identities::bounded_f_sum;
use schurpp_core::planepart::{EnumerationCaps, GfSource, PlanePartError, ProductKind, WeightRule};
use schurpp_core::Polynomial;

use report::{EngineConfig, Run, VerificationReport};
use suites::{build_jobs, gf_class_sources, Grid, UsageError};

#[derive(Parser)]
#[command(name = "schurpp", version, about = "Exact verification of Schur-sum identities and plane partition counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one identity suite (or `all`) over a parameter grid
    Verify(VerifyArgs),
    /// Print a generating function's coefficients, optionally comparing
    /// against a closed product form
    Gf(GfArgs),
    /// Print the (t,v)-weighted Schur sum over shapes in an n x m box
    Explore(ExploreArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// thm1..thm4, littlewood, lemma1, lemma2, weyl, detvanish, gf-cross, all
    target: String,
    /// Values of n, e.g. "2", "1..3", or "2,4"
    #[arg(long)]
    n: Option<String>,
    /// Values of m, same syntax as --n
    #[arg(long)]
    m: Option<String>,
    /// Series truncation degree for the series-based checks
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// Restrict gf-cross to one comparison class
    #[arg(long)]
    class: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write the report to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for running checks (default: one per check, capped
    /// by the rayon default)
    #[arg(long)]
    workers: Option<usize>,
    /// Enumeration caps as rows,cols,height
    #[arg(long, value_parser = parse_caps)]
    max_box: Option<EnumerationCaps>,
    /// Omit timestamp and timings for byte-stable reports
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Weight {
    Size,
    Orbits,
}

#[derive(Args)]
struct GfArgs {
    /// sym, sym-orbit, column-strict, column-strict-even-rows,
    /// sym-diag-even, sym-diag-levels-even, sym-all-heights-even
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value_t = Weight::Size)]
    weight: Weight,
    /// Product formula to compare against: macmahon-sym, orbit-sym,
    /// bender-knuth, size-even, orbit-even, even-columns, thm3-cor,
    /// thm3-ssum
    #[arg(long)]
    compare: Option<String>,
    #[arg(long, value_parser = parse_caps)]
    max_box: Option<EnumerationCaps>,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: usize,
    /// Rational value for t, e.g. "0", "-1", "1/2"
    #[arg(long)]
    t: Option<String>,
    /// Rational value for v
    #[arg(long)]
    v: Option<String>,
}

fn parse_caps(s: &str) -> Result<EnumerationCaps, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected rows,cols,height".to_string());
    }
    Ok(EnumerationCaps {
        max_rows: parts[0].trim().parse().map_err(|e| format!("rows: {e}"))?,
        max_cols: parts[1].trim().parse().map_err(|e| format!("cols: {e}"))?,
        max_height: parts[2].trim().parse().map_err(|e| format!("height: {e}"))?,
    })
}

/// "3" -> [3]; "1..3" -> [1,2,3]; "2,4" -> [2,4]. Ranges are inclusive.
fn parse_values(s: &str) -> Result<Vec<u64>, UsageError> {
    let mut out = Vec::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        if let Some((lo, hi)) = piece.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .map_err(|_| UsageError(format!("bad range start '{lo}'")))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .map_err(|_| UsageError(format!("bad range end '{hi}'")))?;
            if lo > hi {
                return Err(UsageError(format!("empty range '{piece}'")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                piece
                    .parse()
                    .map_err(|_| UsageError(format!("bad value '{piece}'")))?,
            );
        }
    }
    Ok(out)
}

const USAGE_EXIT: u8 = 2;
const FALSIFIED_EXIT: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Gf(args) => cmd_gf(args),
        Command::Explore(args) => cmd_explore(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, UsageError> {
    let grid = Grid {
        n: args
            .n
            .as_deref()
            .map(|s| parse_values(s).map(|v| v.into_iter().map(|x| x as usize).collect()))
            .transpose()?,
        m: args
            .m
            .as_deref()
            .map(|s| parse_values(s).map(|v| v.into_iter().map(|x| x as u32).collect()))
            .transpose()?,
        degree: args.degree,
        class: args.class.clone(),
    };
    let caps = args.max_box.unwrap_or_default();
    let jobs = build_jobs(&args.target, &grid, caps)?;

    let workers = args.workers.unwrap_or_else(rayon::current_num_threads).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| UsageError(format!("worker pool: {e}")))?;

    let keep_times = !args.no_timestamp;
    let outcomes: Vec<Result<Run, String>> = pool.install(|| {
        jobs.par_iter()
            .map(|job| {
                let started = Instant::now();
                (job.check)().map(|result| {
                    let elapsed = started.elapsed().as_millis() as u64;
                    Run::from_result(&result, keep_times.then_some(elapsed))
                })
            })
            .collect()
    });
    let mut runs = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        runs.push(outcome.map_err(UsageError)?);
    }

    let timestamp = (!args.no_timestamp).then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    let report = VerificationReport::new(runs, EngineConfig::new(caps, args.degree, workers), timestamp);

    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(
            File::create(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let written = match args.format {
        Format::Pretty => report.write_pretty(&mut out),
        Format::Json => report.write_json(&mut out),
        Format::Csv => report.write_csv(&mut out),
    };
    written.map_err(|e| UsageError(format!("write: {e}")))?;

    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FALSIFIED_EXIT)
    })
}

fn product_kind(label: &str) -> Result<ProductKind, UsageError> {
    let kinds = [
        ProductKind::MacMahonSym,
        ProductKind::BenderKnuth,
        ProductKind::OrbitSym,
        ProductKind::SizeEven,
        ProductKind::OrbitEven,
        ProductKind::EvenColumnsThm2Cor,
        ProductKind::Thm3Cor,
        ProductKind::Thm3SSum,
    ];
    kinds
        .into_iter()
        .find(|k| k.label() == label)
        .ok_or_else(|| {
            UsageError(format!(
                "unknown product '{label}'; expected one of {}",
                kinds.map(|k| k.label()).join(", ")
            ))
        })
}

/// Coefficients of q^0..q^d as a comma-separated line.
fn coefficient_line(gf: &Polynomial) -> String {
    gf.q_coefficients()
        .iter()
        .map(|c| {
            if c.denom().is_one() {
                c.numer().to_string()
            } else {
                c.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_gf(args: GfArgs) -> Result<ExitCode, UsageError> {
    let caps = args.max_box.unwrap_or_default();
    let (enumerated, _) = gf_class_sources(&args.class, args.n, args.m)?;
    let enumerated = match (enumerated, args.weight) {
        (GfSource::Enumerated { class, .. }, Weight::Orbits) => GfSource::Enumerated {
            class,
            weight: WeightRule::OrbitCount,
        },
        (GfSource::Enumerated { class, .. }, Weight::Size) => GfSource::Enumerated {
            class,
            weight: WeightRule::Size,
        },
        _ => unreachable!("class sources always enumerate on the left"),
    };
    let gf = enumerated
        .evaluate(caps)
        .map_err(|e| UsageError(e.to_string()))?;
    println!("{}", coefficient_line(&gf));

    if let Some(label) = &args.compare {
        let kind = product_kind(label)?;
        let product = match schurpp_core::planepart::product_gf(kind, args.n, args.m) {
            Ok(p) => p,
            Err(PlanePartError::Algebra(schurpp_core::AlgebraError::NotDivisible { .. })) => {
                // a product that fails to expand is a falsified formula,
                // not a usage problem
                println!("NOT equal to {label} (product does not expand to a polynomial)");
                return Ok(ExitCode::from(FALSIFIED_EXIT));
            }
            Err(e) => return Err(UsageError(e.to_string())),
        };
        if gf == product {
            println!("equal to {label}");
        } else {
            let witness = (&gf - &product)
                .smallest_term()
                .map(|(mono, c)| Polynomial::term(mono.clone(), c.clone()).to_string())
                .unwrap_or_default();
            println!("NOT equal to {label}; difference begins with {witness}");
            return Ok(ExitCode::from(FALSIFIED_EXIT));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Caps for the explorer; the sum over the box grows quickly with n.
const EXPLORE_MAX_N: usize = 4;
const EXPLORE_MAX_M: u32 = 6;

fn parse_rational(s: &str) -> Result<BigRational, UsageError> {
    BigRational::from_str(s).map_err(|_| UsageError(format!("bad rational '{s}'")))
}

/// Renders a polynomial grouped by x-monomial: `1 + (t + v)*x1 + ...`,
/// smallest x-monomial first.
fn grouped_by_x(p: &Polynomial) -> String {
    let mut groups: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for (mono, c) in p.terms() {
        let x_part = Monomial::from_exps(mono.exps().filter(|(v, _)| v.is_x()));
        let rest = Monomial::from_exps(mono.exps().filter(|(v, _)| !v.is_x()));
        *groups.entry(x_part).or_insert_with(Polynomial::zero) +=
            &Polynomial::term(rest, c.clone());
    }
    if groups.is_empty() {
        return "0".to_string();
    }
    groups
        .iter()
        .map(|(x_part, coeff)| {
            if x_part.is_one() {
                format!("{coeff}")
            } else if coeff == &Polynomial::one() {
                format!("{x_part}")
            } else if coeff.num_terms() == 1 {
                format!("{coeff}*{x_part}")
            } else {
                format!("({coeff})*{x_part}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn cmd_explore(args: ExploreArgs) -> Result<ExitCode, UsageError> {
    if args.n == 0 || args.n > EXPLORE_MAX_N || args.m > EXPLORE_MAX_M {
        return Err(UsageError(format!(
            "explore is capped at 1 <= n <= {EXPLORE_MAX_N}, m <= {EXPLORE_MAX_M}"
        )));
    }
    let mut sum = bounded_f_sum(args.m, args.n).map_err(|e| UsageError(e.to_string()))?;

    if args.t.is_some() || args.v.is_some() {
        let mut assignment: BTreeMap<Var, Polynomial> = (1..=args.n)
            .map(|i| (Var::x(i), Polynomial::x(i)))
            .collect();
        assignment.insert(
            Var::T,
            match &args.t {
                Some(s) => Polynomial::rational(parse_rational(s)?),
                None => Polynomial::var(Var::T),
            },
        );
        assignment.insert(
            Var::V,
            match &args.v {
                Some(s) => Polynomial::rational(parse_rational(s)?),
                None => Polynomial::var(Var::V),
            },
        );
        sum = sum
            .substitute(&assignment)
            .map_err(|e| UsageError(e.to_string()))?;
    }

    println!("{}", grouped_by_x(&sum));
    Ok(ExitCode::SUCCESS)
}
