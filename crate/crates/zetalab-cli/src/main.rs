//! zetalab command line: zero scans, decomposition verification,
//! short-interval density checks, and critical-line ratio scans.
//!
//! Exit codes: 0 success, 2 certification failure, 3 regression-baseline
//! exceedance, 4 hypothesis violation (including repulsion guards), 5
//! density condition violated, 64 usage, 65 malformed input file, 74
//! i/o, 70 internal error.

use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use zetalab::catalog::{NontrivialZero, ZeroCatalog};
use zetalab::error::Error;
use zetalab::explicit::VonMangoldtTable;
use zetalab::report;
use zetalab::sizdc::{check_sizdc, SizdcParams};
use zetalab::verify::{self, baselines, BoundInputs, LemmaId};

/// Default condition parameters for the verify subcommands: constant
/// density 3 and a wide domain function, so that desk-scale x and a
/// satisfy the stated hypotheses.
const DEFAULT_SIZDC: &str = "l=recip_loglog;v=one;phi=const:3;psi=const:100";

#[derive(Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Zero catalogs, log-zeta decompositions, and zero-density checks",
    after_help = "Exit codes: 0 ok, 2 certification, 3 baseline, 4 hypothesis, \
                  5 condition violated, 64 usage, 65 bad input file, 74 i/o, 70 internal.\n\
                  ZETALAB_ZERO_CACHE supplies a default --zeros path."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan [from, to] for zeros, certify completeness, write a cache file.
    Zeros(ZerosArgs),
    /// Verify a decomposition identity or proof-layer bound; JSON report.
    Verify(VerifyArgs),
    /// Evaluate the short-interval zero-density condition on a grid; CSV.
    Sizdc(SizdcArgs),
    /// Littlewood-type ratio scan on the critical line; CSV.
    Scan(ScanArgs),
}

#[derive(Args)]
struct ZerosArgs {
    /// Lower end of the scan (>= 14).
    #[arg(long)]
    from: f64,
    /// Upper end of the scan (<= 1e6).
    #[arg(long)]
    to: f64,
    /// Output cache path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma1 | theorem1 | theorem2 | corollary | bound:<id>
    /// with <id> one of near, zero1, zero_real, near_critical, prop1,
    /// prop_uncon.
    #[arg(long)]
    what: String,
    /// Height t >= 14, at distance >= 1e-3 from every ordinate.
    #[arg(long)]
    t: f64,
    /// Smoothing parameter x in [3, 1e3] (also <= t^2 and, for
    /// theorem1, <= e^{Psi(t/2)}).
    #[arg(long, default_value_t = 10.0)]
    x: f64,
    /// Real part sigma in [1/2, 2] ([0.4, 3] for lemma1).
    #[arg(long, default_value_t = 2.0)]
    sigma: f64,
    /// Shift a in [1/Psi(t/2), 1] (theorem2 and bound checks).
    #[arg(long, default_value_t = 0.25)]
    a: f64,
    /// Corollary exponent eps0 > 0; x = (log(t/2))^{eps0/4} must reach 3.
    #[arg(long, default_value_t = 0.1)]
    eps0: f64,
    /// Zero-sum truncation height for lemma1 (<= certified top).
    #[arg(long, default_value_t = 1000.0)]
    cutoff: f64,
    /// Zero cache (defaults to ZETALAB_ZERO_CACHE).
    #[arg(long)]
    zeros: Option<PathBuf>,
    /// Condition parameters, grammar key=family[:arg] joined by `;`.
    #[arg(long, default_value = DEFAULT_SIZDC)]
    sizdc: String,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SizdcArgs {
    /// Condition parameters, grammar key=family[:arg] joined by `;`.
    #[arg(long)]
    params: String,
    /// Zero cache (defaults to ZETALAB_ZERO_CACHE).
    #[arg(long)]
    zeros: Option<PathBuf>,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    /// Grid as nT,nSigma.
    #[arg(long, default_value = "20,4")]
    grid: String,
    /// Extra synthetic zeros to inject, in cache format.
    #[arg(long)]
    synthetic: Option<PathBuf>,
    /// Inject N pseudo-random off-line zeros (hypothesis mode).
    #[arg(long, default_value_t = 0)]
    synthetic_random: usize,
    /// Seed for --synthetic-random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Littlewood-type ratio columns (the only scan currently).
    #[arg(long)]
    littlewood: bool,
    /// Grid start (>= 14; the catalog must cover [t_min-1, t_max+1]).
    #[arg(long)]
    t_min: f64,
    /// Grid end (<= certified top minus 1).
    #[arg(long)]
    t_max: f64,
    /// Number of log-spaced grid points.
    #[arg(long, default_value_t = 200)]
    n: usize,
    #[arg(long, default_value_t = 0.1)]
    eps0: f64,
    /// Zero cache (defaults to ZETALAB_ZERO_CACHE).
    #[arg(long)]
    zeros: Option<PathBuf>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() {
    let code = match std::panic::catch_unwind(run) {
        Ok(code) => code,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("zetalab: internal error: {msg}");
            70
        }
    };
    std::process::exit(code);
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Zeros(args) => cmd_zeros(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sizdc(args) => cmd_sizdc(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("zetalab: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Certification { .. } => 2,
        Error::Hypothesis(_) | Error::NearZero { .. } | Error::Domain(_) => 4,
        Error::UncertifiedRange(_) => 4,
        Error::BranchTrack(_) => 4,
        Error::Monotonicity(_) => 4,
        Error::Usage(_) => 64,
        Error::Format { .. } | Error::Ordering(_) => 65,
        Error::Io(_) => 74,
    }
}

fn load_catalog(flag: &Option<PathBuf>) -> Result<ZeroCatalog, Error> {
    let path = match flag {
        Some(p) => p.clone(),
        None => std::env::var_os("ZETALAB_ZERO_CACHE")
            .map(PathBuf::from)
            .ok_or_else(|| {
                Error::Usage("--zeros FILE (or ZETALAB_ZERO_CACHE) is required".into())
            })?,
    };
    ZeroCatalog::load(&path)
}

fn emit(path: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_zeros(args: ZerosArgs) -> Result<i32, Error> {
    if !(14.0 <= args.from && args.from < args.to && args.to <= 1.0e6) {
        return Err(Error::Usage(format!(
            "need 14 <= from < to <= 1e6, got from={} to={}",
            args.from, args.to
        )));
    }
    let catalog = zetalab::catalog::scan_zeros(args.from, args.to)?;
    catalog.save(&args.out)?;
    eprintln!(
        "zetalab: {} zeros certified on [{}, {}] -> {}",
        catalog.zeros().len(),
        args.from,
        args.to,
        args.out.display()
    );
    Ok(0)
}

fn table_for(x: f64) -> Result<VonMangoldtTable, Error> {
    VonMangoldtTable::new(((x * x).ceil() as u64 + 2).max(16))
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    let catalog = load_catalog(&args.zeros)?;
    let sizdc = SizdcParams::parse(&args.sizdc)?;
    let (json, ok) = match args.what.as_str() {
        "lemma1" => {
            let table = table_for(args.x)?;
            let s = zetalab::Complex64::new(args.sigma, args.t);
            let check = verify::check_lemma1(&table, &catalog, s, args.x, args.cutoff)?;
            (
                report::lemma1_json(&check, args.t, args.sigma, args.x),
                check.passes,
            )
        }
        "theorem1" => {
            let table = table_for(args.x)?;
            let r = verify::verify_theorem1(&table, &catalog, &sizdc, args.t, args.x, args.sigma)?;
            let ok = r.ratio.is_finite() && r.ratio <= 1.0;
            (report::decomposition_json(&r), ok)
        }
        "theorem2" => {
            let table = table_for(args.x)?;
            let r = verify::verify_theorem2(
                &table, &catalog, &sizdc, args.t, args.x, args.a, args.sigma,
            )?;
            let ok = r.ratio.is_finite() && r.ratio <= 1.0;
            (report::decomposition_json(&r), ok)
        }
        "corollary" => {
            let (r, _row) = verify::verify_corollary(&catalog, args.t, args.eps0)?;
            let ok = baselines::within(r.ratio, baselines::COROLLARY_RATIO_MAX);
            (report::decomposition_json(&r), ok)
        }
        what if what.starts_with("bound:") => {
            let lemma = LemmaId::parse(&what["bound:".len()..])?;
            let table = table_for(args.x)?;
            let inputs = BoundInputs {
                t: args.t,
                x: args.x,
                a: args.a,
                sigma: args.sigma,
                catalog: &catalog,
                sizdc: &sizdc,
                table: &table,
            };
            let r = verify::check_proof_bound(lemma, &inputs)?;
            let ok = r.ratio.is_finite();
            (report::bound_check_json(&r), ok)
        }
        other => {
            return Err(Error::Usage(format!(
                "--what must be lemma1, theorem1, theorem2, corollary, or bound:<id>, got `{other}`"
            )));
        }
    };
    emit(&args.json, &json)?;
    Ok(if ok { 0 } else { 3 })
}

fn cmd_sizdc(args: SizdcArgs) -> Result<i32, Error> {
    let params = SizdcParams::parse(&args.params)?;
    let mut catalog = load_catalog(&args.zeros)?;
    if let Some(path) = &args.synthetic {
        let extra = load_synthetic(path)?;
        catalog = catalog.inject_synthetic(&extra)?;
    }
    if args.synthetic_random > 0 {
        let extra = random_synthetic(args.seed, args.synthetic_random, args.from, args.to);
        catalog = catalog.inject_synthetic(&extra)?;
    }
    let (n_t, n_sigma) = parse_grid(&args.grid)?;
    let report_data = check_sizdc(&catalog, &params, (args.from, args.to), (n_t, n_sigma))?;
    emit(&args.out, &report::sizdc_csv(&report_data))?;
    if report_data.all_satisfied {
        Ok(0)
    } else {
        let first = report_data
            .rows
            .iter()
            .find(|r| !r.satisfied)
            .expect("a violated row exists");
        eprintln!(
            "zetalab: condition violated at T = {:.6}, sigma = {:.6}: count {} > bound {:.6e}",
            first.t, first.sigma, first.lhs_count, first.rhs_bound
        );
        Ok(5)
    }
}

fn parse_grid(text: &str) -> Result<(usize, usize), Error> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::Usage(format!("--grid must be nT,nSigma, got `{text}`")))?;
    let n_t = a
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Usage(format!("bad grid count `{a}`")))?;
    let n_sigma = b
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Usage(format!("bad grid count `{b}`")))?;
    if n_t == 0 || n_sigma == 0 {
        return Err(Error::Usage("grid counts must be positive".into()));
    }
    Ok((n_t, n_sigma))
}

/// Synthetic zeros from a cache-format file (provenance is forced to
/// synthetic on injection).
fn load_synthetic(path: &Path) -> Result<Vec<NontrivialZero>, Error> {
    let catalog = ZeroCatalog::load(path)?;
    Ok(catalog.zeros().to_vec())
}

/// Deterministic pseudo-random off-line zeros via splitmix64.
fn random_synthetic(seed: u64, n: usize, lo: f64, hi: f64) -> Vec<NontrivialZero> {
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut zeros = Vec::with_capacity(n);
    for _ in 0..n {
        let beta = 0.55 + 0.40 * next();
        let gamma = lo + (hi - lo) * next();
        zeros.push(NontrivialZero::synthetic(beta, gamma));
    }
    zeros.sort_by(|a, b| a.gamma.partial_cmp(&b.gamma).unwrap());
    zeros
}

fn cmd_scan(args: ScanArgs) -> Result<i32, Error> {
    if !args.littlewood {
        return Err(Error::Usage("scan currently requires --littlewood".into()));
    }
    let catalog = load_catalog(&args.zeros)?;
    let scan = verify::littlewood_scan(&catalog, args.t_min, args.t_max, args.n, args.eps0)?;
    emit(&args.csv, &report::littlewood_csv(&scan))?;
    eprintln!(
        "zetalab: {} points, max littlewood ratio {:.6e}, max S ratio {:.6e}",
        scan.rows.len(),
        scan.max_littlewood_ratio,
        scan.max_s_ratio
    );
    let ok = baselines::within(scan.max_littlewood_ratio, baselines::LITTLEWOOD_RATIO_MAX)
        && baselines::within(scan.max_s_ratio, baselines::S_RATIO_MAX);
    Ok(if ok { 0 } else { 3 })
}
