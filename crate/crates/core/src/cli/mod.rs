//! Command-line front end.
//!
//! Parsing produces a validated [`RunPlan`]; [`execute`] runs it and writes
//! results atomically (or to stdout when no output path is given). Progress
//! and warnings go to stderr only.
//!
//! Exit codes: 0 success, 2 usage or validation, 3 invariant violation,
//! 4 unresolved factorization, 1 I/O.

pub mod output;

use crate::arith::PlaceSet;
use crate::error::Error;
use crate::machinery::{build_witness_with_truncation, descent_check, inequality_report};
use crate::search::{
    brute_force_triples, frontier_stability, gcd_scan, gpf_table, pair_search, remark2_report,
    GpfMode, Triple, TripleHit, UncheckedPair,
};
use crate::sunits::{enumerate_sunits, factorize, FactorConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::*;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub const WORKERS_ENV: &str = "SUNIT_TRIPLES_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sunit-triples",
    version,
    about = "Search for triples a > b > c > 0 with (ab+1)(ac+1) smooth over a prime set, \
             and verify the exact linear-form machinery on every hit"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Exhaustive search by direct loops over (a, b, c)
    Brute(BruteArgs),
    /// Complete search driven by S-unit pair enumeration
    Search(SearchArgs),
    /// Build and check the witness machinery for one triple
    Verify(VerifyArgs),
    /// Table of minimal greatest prime factors G(a)
    GpfTable(GpfTableArgs),
    /// Scan gcd(u-1, v-1) exponents over S-unit pairs
    GcdScan(GcdScanArgs),
    /// Enumerate S-units up to a bound
    Smooth(SmoothArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write results to this file (atomically); stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Worker threads; defaults to $SUNIT_TRIPLES_WORKERS, then CPU count
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Args)]
struct FactorArgs {
    /// Trial-division bound before Pollard rho takes over
    #[arg(long, default_value_t = 1_000_000)]
    trial_bound: u64,
    /// Total rho iterations allowed per factorization
    #[arg(long, default_value_t = 4_000_000)]
    rho_budget: u64,
    /// First rho polynomial offset (successive retries increment it)
    #[arg(long, default_value_t = 1)]
    rho_seed: u64,
}

impl FactorArgs {
    fn config(&self) -> FactorConfig {
        FactorConfig {
            trial_bound: self.trial_bound,
            rho_budget: self.rho_budget,
            rho_seed: self.rho_seed,
        }
    }
}

#[derive(Debug, Args)]
struct BruteArgs {
    /// Comma-separated finite primes of the set
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    /// Largest a to search
    #[arg(long)]
    a_max: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    /// Largest u = ab+1 to consider
    #[arg(long)]
    u_bound: u64,
    /// Also search at this lower bound and report frontier stability
    #[arg(long)]
    stability_from: Option<u64>,
    #[command(flatten)]
    factor: FactorArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// The triple, as a,b,c
    #[arg(long, value_delimiter = ',', required = true)]
    triple: Vec<u64>,
    /// Comma-separated primes, or `auto` to derive them by factoring ab+1 and ac+1
    #[arg(long, required = true)]
    primes: String,
    /// Series truncation order (minimum 5)
    #[arg(long, default_value_t = 5)]
    truncation: u32,
    #[command(flatten)]
    factor: FactorArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct GpfTableArgs {
    #[arg(long, default_value_t = 3)]
    a_min: u64,
    #[arg(long)]
    a_max: u64,
    /// pair = (ab+1)(ac+1), gss = (ab+1)(ac+1)(bc+1)
    #[arg(long, value_enum, default_value_t = ModeArg::Pair)]
    mode: ModeArg,
    #[command(flatten)]
    factor: FactorArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Pair,
    Gss,
}

impl From<ModeArg> for GpfMode {
    fn from(m: ModeArg) -> GpfMode {
        match m {
            ModeArg::Pair => GpfMode::Pair,
            ModeArg::Gss => GpfMode::Gss,
        }
    }
}

#[derive(Debug, Args)]
struct GcdScanArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    /// Largest S-unit to include
    #[arg(long)]
    bound: u64,
    /// Smallest S-unit to include (suppresses additive-constant noise)
    #[arg(long, default_value_t = 16)]
    min_value: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SmoothArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    #[arg(long)]
    bound: u64,
    #[command(flatten)]
    output: OutputArgs,
}

/// A validated execution plan.
#[derive(Debug, Clone, PartialEq)]
pub struct RunPlan {
    pub command: PlanCommand,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PlanCommand {
    Brute {
        primes: PlaceSet,
        a_max: u64,
    },
    Search {
        primes: PlaceSet,
        u_bound: u64,
        stability_from: Option<u64>,
        factor: FactorConfig,
    },
    Verify {
        triple: Triple,
        /// `None` means: derive the set by factoring ab+1 and ac+1.
        primes: Option<PlaceSet>,
        truncation: u32,
        factor: FactorConfig,
    },
    GpfTable {
        a_min: u64,
        a_max: u64,
        mode: GpfMode,
        factor: FactorConfig,
    },
    GcdScan {
        primes: PlaceSet,
        bound: u64,
        min_value: u64,
    },
    Smooth {
        primes: PlaceSet,
        bound: u64,
    },
}

#[derive(Debug)]
pub enum ParseError {
    Clap(clap::Error),
    Usage(String),
}

impl ParseError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ParseError::Clap(e)
                if matches!(
                    e.kind(),
                    clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
                ) =>
            {
                0
            }
            _ => 2,
        }
    }

    pub fn print(&self) {
        match self {
            ParseError::Clap(e) => {
                let _ = e.print();
            }
            ParseError::Usage(msg) => eprintln!("error: {msg}"),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Clap(e) => write!(f, "{e}"),
            ParseError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> ParseError {
    ParseError::Usage(msg.into())
}

fn place_set(primes: &[u64]) -> Result<PlaceSet, ParseError> {
    PlaceSet::new(primes.iter().copied()).map_err(|e| match e {
        Error::NotPrime(p) => usage(format!("{p} is not prime")),
        other => usage(other.to_string()),
    })
}

fn resolve_workers(flag: Option<usize>) -> Result<usize, ParseError> {
    let workers = match flag {
        Some(w) => w,
        None => match std::env::var(WORKERS_ENV) {
            Ok(raw) => raw
                .parse::<usize>()
                .map_err(|_| usage(format!("{WORKERS_ENV} must be a positive integer")))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if workers == 0 {
        return Err(usage("worker count must be positive"));
    }
    Ok(workers)
}

/// Parse and validate an argument vector into a [`RunPlan`].
pub fn parse_args<I, T>(argv: I) -> Result<RunPlan, ParseError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(ParseError::Clap)?;
    let (command, out_args) = match cli.command {
        CliCommand::Brute(args) => {
            if args.a_max < 3 {
                return Err(usage("--a-max must be at least 3"));
            }
            (
                PlanCommand::Brute {
                    primes: place_set(&args.primes)?,
                    a_max: args.a_max,
                },
                args.output,
            )
        }
        CliCommand::Search(args) => {
            if args.u_bound < 7 {
                return Err(usage("--u-bound must be at least 7"));
            }
            if let Some(from) = args.stability_from {
                if from < 7 || from > args.u_bound {
                    return Err(usage("--stability-from must lie in [7, --u-bound]"));
                }
            }
            (
                PlanCommand::Search {
                    primes: place_set(&args.primes)?,
                    u_bound: args.u_bound,
                    stability_from: args.stability_from,
                    factor: args.factor.config(),
                },
                args.output,
            )
        }
        CliCommand::Verify(args) => {
            let [a, b, c]: [u64; 3] = args
                .triple
                .clone()
                .try_into()
                .map_err(|_| usage("--triple takes exactly three values a,b,c"))?;
            let triple = Triple::new(a, b, c).map_err(|e| usage(e.to_string()))?;
            let primes = if args.primes == "auto" {
                None
            } else {
                let parsed: Result<Vec<u64>, _> = args
                    .primes
                    .split(',')
                    .map(|tok| tok.trim().parse::<u64>())
                    .collect();
                let parsed = parsed
                    .map_err(|_| usage(format!("cannot parse --primes '{}'", args.primes)))?;
                Some(place_set(&parsed)?)
            };
            if args.truncation < 5 {
                return Err(usage("--truncation must be at least 5"));
            }
            (
                PlanCommand::Verify {
                    triple,
                    primes,
                    truncation: args.truncation,
                    factor: args.factor.config(),
                },
                args.output,
            )
        }
        CliCommand::GpfTable(args) => {
            if args.a_min < 3 || args.a_min > args.a_max {
                return Err(usage("need 3 <= --a-min <= --a-max"));
            }
            (
                PlanCommand::GpfTable {
                    a_min: args.a_min,
                    a_max: args.a_max,
                    mode: args.mode.into(),
                    factor: args.factor.config(),
                },
                args.output,
            )
        }
        CliCommand::GcdScan(args) => {
            if args.bound < 4 {
                return Err(usage("--bound must be at least 4"));
            }
            if args.min_value < 2 {
                return Err(usage("--min-value must be at least 2"));
            }
            (
                PlanCommand::GcdScan {
                    primes: place_set(&args.primes)?,
                    bound: args.bound,
                    min_value: args.min_value,
                },
                args.output,
            )
        }
        CliCommand::Smooth(args) => (
            PlanCommand::Smooth {
                primes: place_set(&args.primes)?,
                bound: args.bound,
            },
            args.output,
        ),
    };
    Ok(RunPlan {
        command,
        out: out_args.out,
        format: out_args.format,
        workers: resolve_workers(out_args.workers)?,
    })
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Core(e)
    }
}

/// What execution reports back for exit-code purposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExecSummary {
    /// Records affected by factorizations that ran out of budget.
    pub unresolved: u64,
}

/// Map an execution outcome onto the documented exit codes.
pub fn exit_code(outcome: &Result<ExecSummary, CliError>) -> i32 {
    match outcome {
        Ok(summary) if summary.unresolved == 0 => 0,
        Ok(_) => 4,
        Err(CliError::Core(Error::InvariantViolation(_))) => 3,
        Err(CliError::Core(Error::Unresolved { .. })) => 4,
        Err(CliError::Core(_)) => 2,
        Err(CliError::Io { .. }) => 1,
    }
}

fn deliver(plan: &RunPlan, bytes: &[u8]) -> Result<(), CliError> {
    match &plan.out {
        Some(path) => write_atomic(path, bytes).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn primes_json(s: &PlaceSet) -> Value {
    json!(s.primes())
}

/// Run a validated plan, write its output, and report the summary.
pub fn execute(plan: &RunPlan) -> Result<ExecSummary, CliError> {
    let started = Instant::now();
    let mut unresolved = 0u64;
    let bytes = match &plan.command {
        PlanCommand::Brute { primes, a_max } => {
            let mut hits = brute_force_triples(primes, *a_max, plan.workers)?;
            hits.sort_by_key(TripleHit::order_key);
            eprintln!(
                "brute: {} hits with a <= {a_max} in {:.2?}",
                hits.len(),
                started.elapsed()
            );
            let params = json!({
                "command": "brute",
                "primes": primes_json(primes),
                "a_max": a_max,
                "format": plan.format.name(),
            });
            render_hits(plan, params, primes, &hits, &[], None)
        }
        PlanCommand::Search {
            primes,
            u_bound,
            stability_from,
            factor,
        } => {
            let outcome = pair_search(primes, *u_bound, factor, plan.workers)?;
            let mut hits = outcome.hits;
            hits.sort_by_key(TripleHit::order_key);
            unresolved += outcome.unchecked.len() as u64;
            for pair in &outcome.unchecked {
                eprintln!(
                    "warning: pair u={} v={} has unresolved gcd factor(s) {:?}; divisor scan incomplete",
                    pair.u, pair.v, pair.unresolved
                );
            }
            let stability = match stability_from {
                None => None,
                Some(from) => {
                    let st = frontier_stability(primes, *from, *u_bound, factor, plan.workers)?;
                    eprintln!(
                        "stability: {} hits at u <= {}, {} at u <= {}, {} new, subset = {}",
                        st.lower_hits,
                        st.lower_bound,
                        st.upper_hits,
                        st.upper_bound,
                        st.new_hits,
                        st.lower_is_subset
                    );
                    Some(json!({
                        "lower_bound": st.lower_bound,
                        "upper_bound": st.upper_bound,
                        "lower_hits": st.lower_hits,
                        "upper_hits": st.upper_hits,
                        "new_hits": st.new_hits,
                        "lower_is_subset": st.lower_is_subset,
                    }))
                }
            };
            eprintln!(
                "search: {} hits with u <= {u_bound} in {:.2?}",
                hits.len(),
                started.elapsed()
            );
            let params = json!({
                "command": "search",
                "primes": primes_json(primes),
                "u_bound": u_bound,
                "stability_from": stability_from,
                "trial_bound": factor.trial_bound,
                "rho_budget": factor.rho_budget,
                "rho_seed": factor.rho_seed,
                "format": plan.format.name(),
            });
            render_hits(plan, params, primes, &hits, &outcome.unchecked, stability)
        }
        PlanCommand::Verify {
            triple,
            primes,
            truncation,
            factor,
        } => {
            let s = match primes {
                Some(s) => s.clone(),
                None => auto_place_set(triple, factor)?,
            };
            let witness = build_witness_with_truncation(*triple, &s, *truncation)?;
            let report = inequality_report(&witness, &s)?;
            let descent = descent_check(witness.hit())?;
            let remark2 = remark2_report(triple)?;
            eprintln!(
                "verify ({}, {}, {}) over {:?}: {} exact checks passed in {:.2?}",
                triple.a(),
                triple.b(),
                triple.c(),
                s.primes(),
                report.checks.len(),
                started.elapsed()
            );
            let record = verify_json(&s, &witness, &report, &descent, &remark2);
            let params = json!({
                "command": "verify",
                "triple": [triple.a(), triple.b(), triple.c()],
                "primes": primes_json(&s),
                "primes_auto": primes.is_none(),
                "truncation": truncation,
                "trial_bound": factor.trial_bound,
                "rho_budget": factor.rho_budget,
                "rho_seed": factor.rho_seed,
                "format": plan.format.name(),
            });
            match plan.format {
                OutputFormat::Csv => {
                    let rows = flatten_for_csv(&record);
                    csv_document(&["field", "value"], &rows).into_bytes()
                }
                OutputFormat::Json => {
                    json_document(params, vec![("records", json!([record]))]).into_bytes()
                }
            }
        }
        PlanCommand::GpfTable {
            a_min,
            a_max,
            mode,
            factor,
        } => {
            let records = gpf_table(*a_min, *a_max, *mode, factor, plan.workers)?;
            unresolved += records.iter().map(|r| r.unresolved_pairs).sum::<u64>();
            eprintln!(
                "gpf-table: {} rows for a in [{a_min}, {a_max}] in {:.2?}",
                records.len(),
                started.elapsed()
            );
            let params = json!({
                "command": "gpf-table",
                "a_min": a_min,
                "a_max": a_max,
                "mode": mode.to_string(),
                "trial_bound": factor.trial_bound,
                "rho_budget": factor.rho_budget,
                "rho_seed": factor.rho_seed,
                "format": plan.format.name(),
            });
            match plan.format {
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = records.iter().map(gpf_row).collect();
                    csv_document(&GPF_HEADER, &rows).into_bytes()
                }
                OutputFormat::Json => {
                    let recs: Vec<Value> = records.iter().map(gpf_json).collect();
                    json_document(params, vec![("records", json!(recs))]).into_bytes()
                }
            }
        }
        PlanCommand::GcdScan {
            primes,
            bound,
            min_value,
        } => {
            let records = gcd_scan(primes, *bound, *min_value, plan.workers)?;
            eprintln!(
                "gcd-scan: {} pairs with {min_value} <= v < u <= {bound} in {:.2?}",
                records.len(),
                started.elapsed()
            );
            let params = json!({
                "command": "gcd-scan",
                "primes": primes_json(primes),
                "bound": bound,
                "min_value": min_value,
                "format": plan.format.name(),
            });
            match plan.format {
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = records.iter().map(scan_row).collect();
                    csv_document(&SCAN_HEADER, &rows).into_bytes()
                }
                OutputFormat::Json => {
                    let recs: Vec<Value> = records.iter().map(scan_json).collect();
                    json_document(params, vec![("records", json!(recs))]).into_bytes()
                }
            }
        }
        PlanCommand::Smooth { primes, bound } => {
            let units: Vec<_> = enumerate_sunits(primes, *bound).collect();
            eprintln!(
                "smooth: {} S-units <= {bound} in {:.2?}",
                units.len(),
                started.elapsed()
            );
            let params = json!({
                "command": "smooth",
                "primes": primes_json(primes),
                "bound": bound,
                "format": plan.format.name(),
            });
            match plan.format {
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> =
                        units.iter().map(|u| smooth_row(u, primes)).collect();
                    csv_document(&SMOOTH_HEADER, &rows).into_bytes()
                }
                OutputFormat::Json => {
                    let recs: Vec<Value> = units.iter().map(|u| smooth_json(u, primes)).collect();
                    json_document(params, vec![("records", json!(recs))]).into_bytes()
                }
            }
        }
    };
    deliver(plan, &bytes)?;
    Ok(ExecSummary { unresolved })
}

fn render_hits(
    plan: &RunPlan,
    params: Value,
    s: &PlaceSet,
    hits: &[TripleHit],
    unchecked: &[UncheckedPair],
    stability: Option<Value>,
) -> Vec<u8> {
    match plan.format {
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = hits.iter().map(|h| hit_row(h, s)).collect();
            csv_document(&HIT_HEADER, &rows).into_bytes()
        }
        OutputFormat::Json => {
            let recs: Vec<Value> = hits.iter().map(|h| hit_json(h, s)).collect();
            let mut body = vec![("records", json!(recs))];
            let unchecked_values: Vec<Value> = unchecked.iter().map(unchecked_json).collect();
            body.push(("unchecked", json!(unchecked_values)));
            if let Some(st) = stability {
                body.push(("stability", st));
            }
            json_document(params, body).into_bytes()
        }
    }
}

/// Derive the place set for a triple by factoring both products.
fn auto_place_set(triple: &Triple, cfg: &FactorConfig) -> Result<PlaceSet, Error> {
    let u = triple
        .a()
        .checked_mul(triple.b())
        .and_then(|p| p.checked_add(1))
        .ok_or_else(|| Error::Domain("ab + 1 overflows u64".into()))?;
    let v = triple.a() * triple.c() + 1;
    let mut primes = Vec::new();
    for n in [u, v] {
        let f = factorize(n, cfg)?;
        if let Some(&composite) = f.unresolved.first() {
            return Err(Error::Unresolved { composite });
        }
        primes.extend(f.factors.iter().map(|&(p, _)| p));
    }
    PlaceSet::new(primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunPlan, ParseError> {
        let mut argv = vec!["sunit-triples"];
        argv.extend(args);
        parse_args(argv)
    }

    #[test]
    fn search_plan_round_trips() {
        let plan = parse(&[
            "search",
            "--primes",
            "2,3,5,7",
            "--u-bound",
            "1000000",
            "--out",
            "hits.json",
            "--format",
            "json",
            "--workers",
            "2",
        ])
        .unwrap();
        assert_eq!(plan.workers, 2);
        assert_eq!(plan.format, OutputFormat::Json);
        assert_eq!(plan.out.as_deref(), Some(std::path::Path::new("hits.json")));
        match plan.command {
            PlanCommand::Search {
                primes, u_bound, ..
            } => {
                assert_eq!(primes.primes(), &[2, 3, 5, 7]);
                assert_eq!(u_bound, 1_000_000);
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn non_prime_is_a_usage_error() {
        let err = parse(&["search", "--primes", "2,9", "--u-bound", "100"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("9 is not prime"));
    }

    #[test]
    fn bad_bounds_are_usage_errors() {
        assert!(parse(&["brute", "--primes", "2", "--a-max", "2"]).is_err());
        assert!(parse(&["search", "--primes", "2", "--u-bound", "6"]).is_err());
        assert!(parse(&["gcd-scan", "--primes", "2", "--bound", "3"]).is_err());
        assert!(parse(&["gpf-table", "--a-min", "10", "--a-max", "4"]).is_err());
        assert!(parse(&[
            "verify",
            "--triple",
            "3,2,1",
            "--primes",
            "2,7",
            "--truncation",
            "4"
        ])
        .is_err());
        assert!(parse(&["verify", "--triple", "1,2,3", "--primes", "auto"]).is_err());
    }

    #[test]
    fn verify_auto_leaves_primes_unset() {
        let plan = parse(&[
            "verify",
            "--triple",
            "3,2,1",
            "--primes",
            "auto",
            "--workers",
            "1",
        ])
        .unwrap();
        match plan.command {
            PlanCommand::Verify {
                primes,
                triple,
                truncation,
                ..
            } => {
                assert!(primes.is_none());
                assert_eq!((triple.a(), triple.b(), triple.c()), (3, 2, 1));
                assert_eq!(truncation, 5);
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn auto_place_set_factors_both_products() {
        let triple = Triple::new(3, 2, 1).unwrap();
        let s = auto_place_set(&triple, &FactorConfig::default()).unwrap();
        assert_eq!(s.primes(), &[2, 7]);
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(exit_code(&Ok(ExecSummary { unresolved: 0 })), 0);
        assert_eq!(exit_code(&Ok(ExecSummary { unresolved: 3 })), 4);
        assert_eq!(
            exit_code(&Err(CliError::Core(Error::InvariantViolation("x".into())))),
            3
        );
        assert_eq!(
            exit_code(&Err(CliError::Core(Error::Unresolved { composite: 91 }))),
            4
        );
        assert_eq!(exit_code(&Err(CliError::Core(Error::NotPrime(9)))), 2);
        assert_eq!(
            exit_code(&Err(CliError::Io {
                path: "x".into(),
                source: std::io::Error::other("nope"),
            })),
            1
        );
    }
}
