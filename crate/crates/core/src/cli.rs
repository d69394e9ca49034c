//! Command-line surface: compute tables, run the self-test, benchmark.
//!
//! Exit codes: 0 ok, 1 self-test failure, 2 usage error, 3 input file error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::catalog;
use crate::coeff::{big_pow, CoeffMode, CoeffPoly};
use crate::selftest;
use crate::series::{Series, SeriesKind};
use crate::table::{extract_table, write_csv, write_json, FamilyTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT_FILE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ggf",
    about = "Exact enumeration of labeled digraph families via generating functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a family count table and write it as CSV or JSON
    Table(TableArgs),
    /// Run the built-in verification suites against the brute-force oracle
    Selftest(SelftestArgs),
    /// Time the computation of DAG and strongly connected totals
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Poly,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
pub struct TableArgs {
    /// Family name: all-graphs, all-digraphs, set, dag, dag-sources, scc,
    /// initially-connected, restricted-scc, restricted-scc-sources,
    /// marked-subfamily
    #[arg(long)]
    pub family: String,
    #[arg(long, value_name = "N")]
    pub max_n: u32,
    #[arg(long, value_enum, default_value = "poly")]
    pub mode: Mode,
    /// Edge marker value (numeric mode)
    #[arg(long, default_value = "1")]
    pub w: i64,
    /// Feature marker value (numeric mode)
    #[arg(long, default_value = "1")]
    pub u: i64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// EGF coefficient file for the A/B family of restricted-scc,
    /// restricted-scc-sources and marked-subfamily
    #[arg(long)]
    pub custom_family: Option<PathBuf>,
}

#[derive(Parser, Debug)]
pub struct SelftestArgs {
    /// Oracle depth (at most 5; n=5 adds the exhaustive aggregate pass)
    #[arg(long, value_name = "N", default_value = "5")]
    pub max_n: u32,
}

#[derive(Parser, Debug)]
pub struct BenchArgs {
    #[arg(long, value_name = "N")]
    pub max_n: u32,
    #[arg(long, value_enum, default_value = "numeric")]
    pub mode: Mode,
    #[arg(long, default_value = "1")]
    pub w: i64,
    #[arg(long, default_value = "1")]
    pub u: i64,
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Table(args) => cmd_table(&args),
        Command::Selftest(args) => cmd_selftest(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn coeff_mode(mode: Mode, w: i64, u: i64) -> CoeffMode {
    match mode {
        Mode::Poly => CoeffMode::Polynomial,
        Mode::Numeric => CoeffMode::numeric(w, u),
    }
}

/// Parse a custom family file: one line per `n`, `n: c_0 c_1 ... c_m`,
/// giving the edge-count refinement of the EGF coefficient. Missing `n`
/// means zero. Blank lines and `#` comments are skipped.
pub fn load_custom_family(
    path: &Path,
    order: usize,
    mode: &CoeffMode,
) -> Result<Series, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut coeffs = vec![CoeffPoly::zero(); order + 1];
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| format!("{}:{}: {e}", path.display(), lineno + 1))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = |what: &str| format!("{}:{}: {what}: `{trimmed}`", path.display(), lineno + 1);
        let (n_part, rest) = trimmed.split_once(':').ok_or_else(|| bad("missing `n:` prefix"))?;
        let n: usize = n_part.trim().parse().map_err(|_| bad("invalid vertex count"))?;
        let mut poly = CoeffPoly::zero();
        for (m, token) in rest.split_whitespace().enumerate() {
            let value: BigInt = token.parse().map_err(|_| bad("invalid coefficient"))?;
            poly = poly.add(&CoeffPoly::term(value, m as u32, 0));
        }
        if n <= order {
            if let CoeffMode::Numeric { w, .. } = mode {
                poly = CoeffPoly::from_big(poly.eval(w, &BigInt::one()));
            }
            coeffs[n] = poly;
        }
    }
    Ok(Series::from_coeffs(SeriesKind::Egf, mode.clone(), coeffs))
}

fn build_family_table(args: &TableArgs) -> Result<FamilyTable, i32> {
    let mode = coeff_mode(args.mode, args.w, args.u);
    let order = args.max_n as usize;
    let needs_custom = matches!(
        args.family.as_str(),
        "restricted-scc" | "restricted-scc-sources" | "marked-subfamily"
    );
    let custom = if needs_custom {
        let Some(path) = &args.custom_family else {
            eprintln!("error: --custom-family is required for family `{}`", args.family);
            return Err(EXIT_USAGE);
        };
        match load_custom_family(path, order, &mode) {
            Ok(series) => Some(series),
            Err(msg) => {
                eprintln!("error: {msg}");
                return Err(EXIT_INPUT_FILE);
            }
        }
    } else {
        None
    };

    let (series, track_p) = match args.family.as_str() {
        "all-graphs" => (catalog::base_graph_egf(order, &mode), false),
        "all-digraphs" => (catalog::base_digraph_ggf(order, &mode), false),
        "set" => (catalog::base_set_ggf(order, &mode), false),
        "dag" => (catalog::dag_ggf(order, &mode), false),
        "dag-sources" => (catalog::dag_sources_ggf(order, &mode), true),
        "scc" => (catalog::scc_egf(order, &mode), false),
        "initially-connected" => (catalog::initially_connected_ggf(order, &mode), false),
        "restricted-scc" => {
            match catalog::restricted_scc_ggf(custom.as_ref().unwrap(), order) {
                Ok(s) => (s, false),
                Err(e) => {
                    eprintln!("error: custom family rejected: {e}");
                    return Err(EXIT_INPUT_FILE);
                }
            }
        }
        "restricted-scc-sources" => {
            match catalog::restricted_scc_sources_ggf(custom.as_ref().unwrap(), order) {
                Ok(s) => (s, true),
                Err(e) => {
                    eprintln!("error: custom family rejected: {e}");
                    return Err(EXIT_INPUT_FILE);
                }
            }
        }
        "marked-subfamily" => {
            match catalog::marked_subfamily_ggf(custom.as_ref().unwrap(), order) {
                Ok(s) => (s, true),
                Err(e) => {
                    eprintln!("error: custom family rejected: {e}");
                    return Err(EXIT_INPUT_FILE);
                }
            }
        }
        other => {
            eprintln!("error: unknown family `{other}`");
            return Err(EXIT_USAGE);
        }
    };
    extract_table(&series, &args.family, track_p).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

pub fn cmd_table(args: &TableArgs) -> i32 {
    let table = match build_family_table(args) {
        Ok(table) => table,
        Err(code) => return code,
    };
    let result = match &args.out {
        Some(path) => match File::create(path) {
            Ok(mut file) => emit(&table, args.format, &mut file),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT_FILE;
            }
        },
        None => emit(&table, args.format, &mut io::stdout().lock()),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return EXIT_INPUT_FILE;
    }
    EXIT_OK
}

fn emit(table: &FamilyTable, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => write_csv(table, out),
        Format::Json => write_json(table, out),
    }
}

pub fn cmd_selftest(args: &SelftestArgs) -> i32 {
    if args.max_n > 5 {
        eprintln!("error: --max-n must be at most 5 (oracle cap)");
        return EXIT_USAGE;
    }
    let outcomes = match selftest::run_all(args.max_n) {
        Ok(outcomes) => outcomes,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut failed = false;
    for outcome in &outcomes {
        match &outcome.detail {
            None => println!("PASS {}", outcome.name),
            Some(detail) => {
                println!("FAIL {} ({detail})", outcome.name);
                failed = true;
            }
        }
    }
    if failed {
        EXIT_SELFTEST_FAILURE
    } else {
        EXIT_OK
    }
}

pub fn cmd_bench(args: &BenchArgs) -> i32 {
    if args.mode == Mode::Poly && args.max_n > 30 {
        eprintln!("error: polynomial mode is capped at --max-n 30 for bench");
        return EXIT_USAGE;
    }
    let mode = coeff_mode(args.mode, args.w, args.u);
    let order = args.max_n as usize;
    let w = BigInt::from(args.w);
    let u = BigInt::from(args.u);
    let total = |c: &CoeffPoly| -> BigInt {
        match &mode {
            CoeffMode::Polynomial => c.eval(&w, &u),
            CoeffMode::Numeric { .. } => c.constant_value().expect("numeric constant"),
        }
    };

    let started = Instant::now();
    let dag = catalog::dag_ggf(order, &mode);
    let dag_elapsed = started.elapsed();
    let started = Instant::now();
    let scc = catalog::scc_egf(order, &mode);
    let scc_elapsed = started.elapsed();

    let mut out = io::stdout().lock();
    for n in 1..=order {
        let _ = writeln!(out, "{n},{},{}", total(dag.coeff(n)), total(scc.coeff(n)));
    }
    let _ = writeln!(out, "# dag totals to n={order}: {:.3?}", dag_elapsed);
    let _ = writeln!(out, "# scc totals to n={order}: {:.3?}", scc_elapsed);
    EXIT_OK
}

// keep the helper visible to integration tests that cross-check bench values
pub fn scc_totals_reference(order: usize) -> Vec<BigInt> {
    // independent straightforward evaluation at w=1: plain EGF recurrences
    // over Vec<BigInt>, no shared code with the series engine
    let binom = crate::binomial::BinomialTable::new(order.max(1));
    let g: Vec<BigInt> = (0..=order)
        .map(|n| big_pow(&BigInt::from(2), crate::binomial::choose2(n as u32)))
        .collect();
    let mut r: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            acc += binom.get_ref(n, k) * &g[k] * &r[n - k];
        }
        r.push(-acc);
    }
    let h: Vec<BigInt> = (0..=order).map(|n| &g[n] * &r[n]).collect();
    let mut l: Vec<BigInt> = vec![BigInt::zero()];
    for n in 1..=order {
        let mut acc = h[n].clone();
        for k in 1..n {
            acc -= binom.get_ref(n - 1, k - 1) * &l[k] * &h[n - k];
        }
        l.push(acc);
    }
    l.iter().map(|v| -v).collect()
}
