//! Command-line front end for the congruence registry.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use congrlab::checks::{self, CheckResult, SearchTarget, Status};
use congrlab::modring::{PadicRational, PrimePower};
use congrlab::oracle::{
    identity_sizes, oracle_sum_exact, reduce_mod, to_big, verify_poly_identity, IdentityKind,
    NumberTables,
};
use congrlab::primes::{is_prime, sieve_primes};

/// `println!` that stops quietly when the reader has gone away (`| head`).
macro_rules! out {
    ($($t:tt)*) => {
        if let Err(e) = writeln!(io::stdout().lock(), $($t)*) {
            if e.kind() == io::ErrorKind::BrokenPipe {
                std::process::exit(EXIT_OK);
            }
            panic!("writing to stdout: {e}");
        }
    };
}
use congrlab::special::PrimeContext;
use congrlab::sums::{central_binomial_sum_with, jacobi_like_sum_with, CentralFamily, WeightKind};

pub const P_LIMIT: u64 = 10_000;
const SEARCH_LIMIT: u64 = 1_000_000;
const ORACLE_LIMIT: u64 = 101;
const ORACLE_SPECIAL_LIMIT: u64 = 13;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "congrlab", version, about = "Exact congruence checks modulo prime powers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run registered congruence checks over a range of primes.
    Verify(VerifyArgs),
    /// List primes where a special value vanishes mod p.
    Search(SearchArgs),
    /// Evaluate one sum modulo p^e.
    Eval(EvalArgs),
    /// Check the polynomial identities behind the sums.
    Identities(IdentityArgs),
    /// Compare modular values with exact rational evaluation.
    Oracle(OracleArgs),
    /// List the registered checks.
    List,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of check names.
    #[arg(long, default_value = "all")]
    pub checks: String,
    #[arg(long, default_value_t = 5)]
    pub p_min: u64,
    #[arg(long, default_value_t = 499)]
    pub p_max: u64,
    /// `default` or a comma-separated list of rationals `c/d`.
    #[arg(long, default_value = "default")]
    pub a_set: String,
    #[arg(long)]
    pub include_conjectures: bool,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "CONGRLAB_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Jsonl,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    EulerQuarter,
    BernoulliThird,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long)]
    pub p_max: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Generic,
    Cb2,
    Cb3,
    Cb4,
    Cb6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Weight {
    One,
    H,
    H2,
    #[value(name = "h-over-k")]
    HOverK,
    Inv2k1,
    #[value(name = "h2-over-2k1")]
    H2Over2k1,
}

impl From<Weight> for WeightKind {
    fn from(w: Weight) -> Self {
        match w {
            Weight::One => WeightKind::One,
            Weight::H => WeightKind::H,
            Weight::H2 => WeightKind::H2,
            Weight::HOverK => WeightKind::HoverK,
            Weight::Inv2k1 => WeightKind::Inv2k1,
            Weight::H2Over2k1 => WeightKind::H2over2k1,
        }
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long = "exp")]
    pub exp: u32,
    #[arg(long, value_enum, default_value_t = Family::Generic)]
    pub family: Family,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long, value_enum)]
    pub weight: Weight,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long)]
    pub max_size: Option<usize>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long = "exp")]
    pub exp: u32,
    #[arg(long, default_value = "1/2")]
    pub a: String,
}

/// One output record; field order is the wire order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub check: String,
    pub p: u64,
    pub a: Option<String>,
    pub modulus: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
    pub status: String,
}

impl From<&CheckResult> for ReportLine {
    fn from(r: &CheckResult) -> Self {
        Self {
            check: r.name.clone(),
            p: r.p,
            a: r.a.map(|a| a.to_string()),
            modulus: r.modulus as u64,
            lhs: r.lhs.value() as u64,
            rhs: r.rhs.value() as u64,
            pass: r.pass,
            status: r.status.as_str().to_string(),
        }
    }
}

#[derive(Debug)]
pub struct UsageError(pub String);

type CliResult<T> = std::result::Result<T, UsageError>;

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

fn validate_range(p_min: u64, p_max: u64) -> CliResult<()> {
    if p_min < 5 || p_min > p_max || p_max > P_LIMIT {
        return Err(UsageError(format!(
            "prime range must satisfy 5 <= p-min <= p-max <= {P_LIMIT}, got [{p_min}, {p_max}]"
        )));
    }
    Ok(())
}

fn validate_prime(p: u64) -> CliResult<()> {
    if p < 5 || !is_prime(p) {
        return Err(UsageError(format!("p must be a prime >= 5, got {p}")));
    }
    Ok(())
}

fn parse_a_set(list: &str) -> CliResult<Option<Vec<PadicRational>>> {
    if list.trim() == "default" {
        return Ok(None);
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<PadicRational>().map_err(usage))
        .collect::<CliResult<Vec<_>>>()
        .map(Some)
}

/// Run the suite; results come back in (check, p, a) order whatever `jobs` is.
pub fn verify_results(args: &VerifyArgs) -> CliResult<Vec<CheckResult>> {
    validate_range(args.p_min, args.p_max)?;
    if args.jobs == 0 {
        return Err(UsageError("--jobs must be at least 1".into()));
    }
    let descs = checks::resolve_checks(&args.checks, args.include_conjectures).map_err(usage)?;
    let custom = parse_a_set(&args.a_set)?;
    let primes = sieve_primes(args.p_min, args.p_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(usage)?;
    let per_prime = pool
        .install(|| {
            primes
                .par_iter()
                .map(|&p| checks::run_prime(&descs, p, custom.as_deref()))
                .collect::<congrlab::Result<Vec<_>>>()
        })
        .map_err(usage)?;
    Ok(checks::interleave(per_prime, descs.len()))
}

fn write_report(results: &[CheckResult], format: Format, out: &mut dyn Write) -> io::Result<()> {
    let lines: Vec<ReportLine> = results.iter().map(ReportLine::from).collect();
    match format {
        Format::Jsonl => {
            for l in &lines {
                serde_json::to_writer(&mut *out, l)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for l in &lines {
                w.serialize(l)?;
            }
            if lines.is_empty() {
                w.write_record(["check", "p", "a", "modulus", "lhs", "rhs", "pass", "status"])?;
            }
            w.flush()?;
        }
        Format::Table => {
            let name_w = lines.iter().map(|l| l.check.len()).max().unwrap_or(5).max(5);
            let a_w = lines
                .iter()
                .map(|l| l.a.as_deref().unwrap_or("-").len())
                .max()
                .unwrap_or(1)
                .max(1);
            writeln!(
                out,
                "{:<name_w$}  {:>5}  {:<a_w$}  {:>16}  {:>16}  {:>16}  {:<4}  status",
                "check", "p", "a", "modulus", "lhs", "rhs", "pass"
            )?;
            for l in &lines {
                writeln!(
                    out,
                    "{:<name_w$}  {:>5}  {:<a_w$}  {:>16}  {:>16}  {:>16}  {:<4}  {}",
                    l.check,
                    l.p,
                    l.a.as_deref().unwrap_or("-"),
                    l.modulus,
                    l.lhs,
                    l.rhs,
                    if l.pass { "ok" } else { "FAIL" },
                    l.status
                )?;
            }
        }
    }
    out.flush()
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<i32> {
    let results = verify_results(args)?;
    let io_err = |e: io::Error| UsageError(format!("cannot write report: {e}"));
    match &args.out {
        Some(path) => {
            let f = File::create(path).map_err(io_err)?;
            write_report(&results, args.format, &mut BufWriter::new(f)).map_err(io_err)?;
        }
        None => {
            let stdout = io::stdout();
            write_report(&results, args.format, &mut stdout.lock()).map_err(io_err)?;
        }
    }
    let proven_failures = results
        .iter()
        .filter(|r| r.status == Status::Proven && !r.pass)
        .count();
    let other = results
        .iter()
        .filter(|r| r.status != Status::Proven && !r.pass)
        .count();
    eprintln!(
        "{} results, {} proven failures, {} inconsistent conjecture/recorded results",
        results.len(),
        proven_failures,
        other
    );
    Ok(if proven_failures > 0 { EXIT_FAILED } else { EXIT_OK })
}

fn cmd_search(args: &SearchArgs) -> CliResult<i32> {
    if args.p_max < 5 || args.p_max > SEARCH_LIMIT {
        return Err(UsageError(format!(
            "--p-max must lie in [5, {SEARCH_LIMIT}], got {}",
            args.p_max
        )));
    }
    let target = match args.target {
        Target::EulerQuarter => SearchTarget::EulerQuarter,
        Target::BernoulliThird => SearchTarget::BernoulliThird,
    };
    for p in checks::search_zero(target, args.p_max).map_err(usage)? {
        out!("{p}");
    }
    Ok(EXIT_OK)
}

fn cmd_eval(args: &EvalArgs) -> CliResult<i32> {
    validate_prime(args.p)?;
    let ctx = PrimeContext::new(args.p).map_err(usage)?;
    let w = WeightKind::from(args.weight);
    let family = match args.family {
        Family::Generic => None,
        Family::Cb2 => Some(CentralFamily::Cb2),
        Family::Cb3 => Some(CentralFamily::Cb3),
        Family::Cb4 => Some(CentralFamily::Cb4),
        Family::Cb6 => Some(CentralFamily::Cb6),
    };
    let value = match family {
        Some(f) => {
            if args.a.is_some() {
                return Err(UsageError("--a only applies to --family generic".into()));
            }
            central_binomial_sum_with(&ctx, f, w, args.exp)
        }
        None => {
            let a: PadicRational = args
                .a
                .as_deref()
                .ok_or_else(|| UsageError("--family generic needs --a".into()))?
                .parse()
                .map_err(usage)?;
            jacobi_like_sum_with(&ctx, &a, w, args.exp)
        }
    }
    .map_err(usage)?;
    out!("{} (mod {})", value.value(), value.modulus().modulus());
    Ok(EXIT_OK)
}

fn cmd_identities(args: &IdentityArgs) -> CliResult<i32> {
    let mut code = EXIT_OK;
    for kind in IdentityKind::ALL {
        let cap = args.max_size.unwrap_or(kind.default_bound());
        let sizes = identity_sizes(kind, cap);
        let mut failed = Vec::new();
        for size in &sizes {
            if !verify_poly_identity(kind, size).map_err(usage)? {
                failed.push(size.clone());
            }
        }
        if failed.is_empty() {
            out!("{:<24} ok    {} instances", kind.name(), sizes.len());
        } else {
            code = EXIT_FAILED;
            out!("{:<24} FAIL  {} of {} instances, first {:?}", kind.name(), failed.len(), sizes.len(), failed[0]);
        }
    }
    Ok(code)
}

fn cmd_oracle(args: &OracleArgs) -> CliResult<i32> {
    validate_prime(args.p)?;
    if args.p > ORACLE_LIMIT {
        return Err(UsageError(format!("oracle comparisons support p <= {ORACLE_LIMIT}")));
    }
    if args.exp == 0 || args.exp > 4 {
        return Err(UsageError("--exp must lie in [1, 4]".into()));
    }
    let p = args.p;
    let a: PadicRational = args.a.parse().map_err(usage)?;
    if !a.is_p_integral(p) {
        return Err(UsageError(format!("{a} is not p-integral at p = {p}")));
    }
    let ctx = PrimeContext::new(p).map_err(usage)?;
    let m = PrimePower::new(p, args.exp).map_err(usage)?;
    let show = |r: &congrlab::Result<congrlab::Residue>| match r {
        Ok(v) => v.value().to_string(),
        Err(e) => format!("error: {e}"),
    };
    let mut all_match = true;
    let mut row = |label: &str, fast: congrlab::Result<congrlab::Residue>, slow: congrlab::Result<congrlab::Residue>| {
        let ok = match (&fast, &slow) {
            (Ok(x), Ok(y)) => x == y,
            (Err(_), Err(_)) => true,
            _ => false,
        };
        all_match &= ok;
        out!("{label:<24} {:>18} {:>18}  {}", show(&fast), show(&slow), if ok { "ok" } else { "MISMATCH" });
    };
    out!("p = {p}, a = {a}, modulus {}", m.modulus());
    out!("{:<24} {:>18} {:>18}", "quantity", "modular", "exact");
    for w in WeightKind::ALL {
        let fast = jacobi_like_sum_with(&ctx, &a, w, args.exp);
        let slow = oracle_sum_exact(&a, w, p).and_then(|q| reduce_mod(&q, m));
        row(&format!("sum[{w}]"), fast, slow);
    }
    if p <= ORACLE_SPECIAL_LIMIT {
        let n = p as usize;
        let n2 = (p * p - p) as usize;
        let t = NumberTables::new(n2);
        let x = to_big(&a);
        let m1 = PrimePower::new(p, 1).map_err(usage)?;
        let m2 = PrimePower::new(p, 2).map_err(usage)?;
        let b = |k: usize| t.bernoulli_poly(k, &x);
        let e = |k: usize| t.euler_poly(k, &x);
        let diff = b(n - 1).and_then(|v| Ok(v - t.bernoulli(n - 1)?));
        row("B_{p-2}(a) mod p", ctx.bpoly_p2_value(&a), b(n - 2).and_then(|v| reduce_mod(&v, m1)));
        row("B_{p-1}(a)-B_{p-1} mod p", ctx.bpoly_p1_diff(&a), diff.and_then(|v| reduce_mod(&v, m1)));
        row("E_{p-3}(a) mod p", ctx.epoly_p3_value(&a), e(n - 3).and_then(|v| reduce_mod(&v, m1)));
        row("E_{p^2-p-2}(a) mod p^2", ctx.epoly_phi2_value(&a), e(n2 - 2).and_then(|v| reduce_mod(&v, m2)));
        row("B_{p^2-p-1}(a) mod p^2", ctx.bpoly_phi1_value(&a), b(n2 - 1).and_then(|v| reduce_mod(&v, m2)));
    }
    Ok(if all_match { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_list() -> CliResult<i32> {
    let mut out = io::stdout().lock();
    for c in checks::registry() {
        let args = match c.args {
            checks::ArgMode::None => "-".to_string(),
            checks::ArgMode::Standard => "a".to_string(),
            checks::ArgMode::Fraction(d) => format!("c/{d}"),
        };
        let line = writeln!(
            out,
            "{:<18} mod p^{}  p >= {:<3} {:<5} {:<10} {}",
            c.name,
            c.exponent,
            c.min_p,
            args,
            c.status.as_str(),
            c.summary
        );
        if line.is_err() {
            break;
        }
    }
    Ok(EXIT_OK)
}

pub fn run(cli: &Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Search(a) => cmd_search(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Identities(a) => cmd_identities(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::List => cmd_list(),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}
