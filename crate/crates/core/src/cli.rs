//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or agreement check
//! fails, 2 on usage errors (bad flags, unreadable or malformed input,
//! size limits).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::{build_r_circulant, DenseMatrix, MatrixJson, RCirculantSpec, RowKind};
use crate::multiplier::{parse_grid, Multiplier};
use crate::norms::{
    frobenius_norm, spectral_norm_circulant, spectral_norm_jacobi, spectral_norm_power, NormResult,
    DEFAULT_POWER_MAX_ITER, DEFAULT_POWER_TOL, JACOBI_MAX_ORDER,
};
use crate::sequences::{FloatSequenceTable, RationalJson, SequenceTable, EXACT_K_MAX, EXACT_N_MAX};
use crate::theorems::{
    parse_selection, relative_error, run_sweep, SweepConfig, VerificationReport, Verifier,
    EQUALITY_REL_TOL,
};

/// Largest order accepted by the DFT route in `bench`.
pub const BENCH_DFT_MAX: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "hfnorm",
    version,
    about = "Norms of circulant matrices with harmonic Fibonacci entries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Fibonacci, harmonic and hyperharmonic Fibonacci numbers.
    Seq(SeqArgs),
    /// Build a circulant or r-circulant matrix as JSON.
    Build(BuildArgs),
    /// Compute a norm of a matrix read from JSON.
    Norm(NormArgs),
    /// Check closed forms and bounds against independent computations.
    Verify(VerifyArgs),
    /// Report the spectral sandwich for one (n, k, r).
    Bounds(BoundsArgs),
    /// Time the DFT route against the Jacobi oracle.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    Fib,
    Harmonic,
    Hyperharmonic,
}

#[derive(Debug, Args)]
struct SeqArgs {
    /// Print a single sequence instead of the full table.
    #[arg(long, value_enum)]
    kind: Option<SeqKind>,
    /// Last index for a single sequence.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Level for `--kind hyperharmonic`.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Last index of the full table.
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Highest level of the full table.
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Raw,
    Harmonic,
    Hyperharmonic,
    FibHarmonic,
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: MatrixKind,
    /// Order; taken from `--row` for raw matrices.
    #[arg(long)]
    n: Option<usize>,
    /// Hyperharmonic level.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Multiplier of the wrapped entries, e.g. `2`, `1/2`, `1+i`, `2@45`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    r: String,
    /// Comma-separated first row for raw matrices, e.g. `1,2-0.5i,3i`.
    #[arg(long, allow_hyphen_values = true)]
    row: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Frobenius,
    Dft,
    Power,
    Jacobi,
}

#[derive(Debug, Args)]
struct NormArgs {
    /// Matrix JSON file, or `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_POWER_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_POWER_MAX_ITER)]
    max_iter: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `3.1` .. `3.9`, `eq10`, `eq7_8`, `l2.1`, `l2.2` or `all`; comma-separated.
    #[arg(long, default_value = "all")]
    theorem: String,
    #[arg(long, default_value_t = 32)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    /// Comma-separated multipliers replacing the default grids.
    #[arg(long, allow_hyphen_values = true)]
    r_grid: Option<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    r: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated orders.
    #[arg(long, default_value = "16,64,256,1024,2048")]
    n_list: String,
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parse `argv` (including the program name), run the subcommand writing
/// its output to `out`, and return the exit code. Diagnostics go to stderr.
pub fn run<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Seq(a) => seq(&a, out),
        Command::Build(a) => build(&a, out),
        Command::Norm(a) => norm(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Bounds(a) => bounds(&a, out),
        Command::Bench(a) => bench(&a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Check(msg)) => {
            eprintln!("hfnorm: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("hfnorm: {msg}");
            2
        }
    }
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// `re+imi`, with both parts in shortest round-trip form.
pub fn format_complex(z: Complex64) -> String {
    // normalize negative zeros
    let z = z + Complex64::new(0.0, 0.0);
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parse `a`, `bi`, `a+bi` or `a-bi` with floating-point parts.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a complex number: {s:?}"));
    let num = |t: &str| {
        t.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(bad)
    };
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(num(s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (num(&body[..i])?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => num(other)?,
    };
    Ok(Complex64::new(re, im))
}

fn check_exact_limits(n: usize, k: usize) -> CliResult {
    if n > EXACT_N_MAX || k > EXACT_K_MAX {
        return Err(Error::ExactLimit {
            n,
            k,
            n_limit: EXACT_N_MAX,
            k_limit: EXACT_K_MAX,
        }
        .into());
    }
    Ok(())
}

#[derive(Serialize)]
struct SequenceOutput<V> {
    kind: &'static str,
    mode: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    values: Vec<V>,
}

#[derive(Serialize)]
struct FloatTableOutput {
    mode: &'static str,
    n_max: usize,
    k_max: usize,
    fib: Vec<f64>,
    hyper: Vec<Vec<Option<f64>>>,
}

/// One value of a sequence in either mode, for CSV.
enum SeqValue {
    Exact(Option<BigRational>),
    Float(Option<f64>),
}

fn seq_csv(
    out: &mut dyn Write,
    mode: Mode,
    rows: Vec<(&str, Option<usize>, usize, SeqValue)>,
) -> CliResult {
    let mut w = csv::Writer::from_writer(out);
    match mode {
        Mode::Exact => w.write_record(["sequence", "k", "n", "num", "den"])?,
        Mode::Float => w.write_record(["sequence", "k", "n", "value"])?,
    }
    for (name, k, n, v) in rows {
        let k = k.map(|k| k.to_string()).unwrap_or_default();
        match v {
            SeqValue::Exact(q) => {
                let (num, den) = q
                    .map(|q| (q.numer().to_string(), q.denom().to_string()))
                    .unwrap_or_default();
                w.write_record([name, &k, &n.to_string(), &num, &den])?;
            }
            SeqValue::Float(x) => {
                let x = x.map(|x| x.to_string()).unwrap_or_default();
                w.write_record([name, &k, &n.to_string(), &x])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn seq(a: &SeqArgs, out: &mut dyn Write) -> CliResult {
    let (n_max, k_max) = match a.kind {
        None => (a.n_max, a.k_max),
        Some(SeqKind::Fib) => (a.n, 0),
        Some(SeqKind::Harmonic) => (a.n, 1),
        Some(SeqKind::Hyperharmonic) => (a.n, a.k),
    };
    if a.mode == Mode::Exact {
        check_exact_limits(n_max, k_max)?;
    }
    let level = |kind: SeqKind| match kind {
        SeqKind::Fib => None,
        SeqKind::Harmonic => Some(1),
        SeqKind::Hyperharmonic => Some(a.k),
    };
    let name = |kind: SeqKind| match kind {
        SeqKind::Fib => "fib",
        SeqKind::Harmonic => "harmonic",
        SeqKind::Hyperharmonic => "hyperharmonic",
    };

    match a.mode {
        Mode::Exact => {
            let table = SequenceTable::new(n_max, k_max)?;
            let value = |kind: SeqKind, n: usize| -> Result<Option<BigRational>> {
                match level(kind) {
                    None => Ok(Some(BigRational::from_integer(
                        table.fib(n as i64)?.clone(),
                    ))),
                    Some(0) if n == 0 => Ok(None),
                    Some(k) => Ok(Some(table.hyper(n, k)?.clone())),
                }
            };
            match (a.kind, a.format) {
                (None, Format::Json) => write_json(out, &table.to_json()),
                (Some(kind), Format::Json) => {
                    let values = (0..=n_max)
                        .map(|n| Ok(value(kind, n)?.as_ref().map(RationalJson::from)))
                        .collect::<Result<Vec<_>>>()?;
                    write_json(
                        out,
                        &SequenceOutput {
                            kind: name(kind),
                            mode: "exact",
                            n: n_max,
                            k: level(kind),
                            values,
                        },
                    )
                }
                (kind, Format::Csv) => {
                    let mut rows = Vec::new();
                    let kinds: Vec<(SeqKind, Option<usize>)> = match kind {
                        Some(kind) => vec![(kind, level(kind))],
                        None => std::iter::once((SeqKind::Fib, None))
                            .chain((0..=k_max).map(|k| (SeqKind::Hyperharmonic, Some(k))))
                            .collect(),
                    };
                    for (kind, k) in kinds {
                        for n in 0..=n_max {
                            let v = match k {
                                None => {
                                    Some(BigRational::from_integer(table.fib(n as i64)?.clone()))
                                }
                                Some(0) if n == 0 => None,
                                Some(k) => Some(table.hyper(n, k)?.clone()),
                            };
                            rows.push((name(kind), k, n, SeqValue::Exact(v)));
                        }
                    }
                    seq_csv(out, Mode::Exact, rows)
                }
            }
        }
        Mode::Float => {
            let table = FloatSequenceTable::new(n_max, k_max);
            let value = |k: Option<usize>, n: usize| -> Result<Option<f64>> {
                match k {
                    None => Ok(Some(table.fib(n as i64)?)),
                    Some(0) if n == 0 => Ok(None),
                    Some(k) => Ok(Some(table.hyper(n, k)?)),
                }
            };
            match (a.kind, a.format) {
                (None, Format::Json) => {
                    let fib = (0..=n_max)
                        .map(|n| table.fib(n as i64))
                        .collect::<Result<Vec<_>>>()?;
                    let hyper = (0..=k_max)
                        .map(|k| {
                            (0..=n_max)
                                .map(|n| value(Some(k), n))
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    write_json(
                        out,
                        &FloatTableOutput {
                            mode: "float",
                            n_max,
                            k_max,
                            fib,
                            hyper,
                        },
                    )
                }
                (Some(kind), Format::Json) => {
                    let values = (0..=n_max)
                        .map(|n| value(level(kind), n))
                        .collect::<Result<Vec<_>>>()?;
                    write_json(
                        out,
                        &SequenceOutput {
                            kind: name(kind),
                            mode: "float",
                            n: n_max,
                            k: level(kind),
                            values,
                        },
                    )
                }
                (kind, Format::Csv) => {
                    let kinds: Vec<(SeqKind, Option<usize>)> = match kind {
                        Some(kind) => vec![(kind, level(kind))],
                        None => std::iter::once((SeqKind::Fib, None))
                            .chain((0..=k_max).map(|k| (SeqKind::Hyperharmonic, Some(k))))
                            .collect(),
                    };
                    let mut rows = Vec::new();
                    for (kind, k) in kinds {
                        for n in 0..=n_max {
                            rows.push((name(kind), k, n, SeqValue::Float(value(k, n)?)));
                        }
                    }
                    seq_csv(out, Mode::Float, rows)
                }
            }
        }
    }
}

fn parse_multiplier(s: &str) -> std::result::Result<Multiplier, Failure> {
    s.parse()
        .map_err(|e: Error| Failure::Usage(format!("--r: {e}")))
}

fn build(a: &BuildArgs, out: &mut dyn Write) -> CliResult {
    let r = parse_multiplier(&a.r)?;
    let (n, kind) = match a.kind {
        MatrixKind::Raw => {
            let row = a
                .row
                .as_deref()
                .ok_or_else(|| Failure::Usage("--kind raw needs --row".into()))?
                .split(',')
                .map(parse_complex)
                .collect::<Result<Vec<_>>>()?;
            if a.n.is_some_and(|n| n != row.len()) {
                return Err(Failure::Usage(format!(
                    "--n does not match the {} row entries",
                    row.len()
                )));
            }
            (row.len(), RowKind::Raw(row))
        }
        other => {
            let n =
                a.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
            let kind = match other {
                MatrixKind::Harmonic => RowKind::HarmonicFib,
                MatrixKind::Hyperharmonic => RowKind::HyperharmonicFib { level: a.k },
                _ => RowKind::FibTimesHarmonic,
            };
            (n, kind)
        }
    };
    let m = build_r_circulant(&RCirculantSpec::new(n, r.value(), kind)?)?;
    let mut buf = Vec::new();
    match a.format {
        Format::Json => write_json(&mut buf, &m.to_json())?,
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(&mut buf);
            for i in 0..m.rows() {
                w.write_record(m.row(i).iter().map(|&z| format_complex(z)))?;
            }
            w.flush()?;
        }
    }
    match &a.output {
        Some(path) => {
            fs::write(path, buf).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => out.write_all(&buf)?,
    }
    Ok(())
}

fn read_matrix(path: &PathBuf) -> std::result::Result<DenseMatrix<f64>, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    let json: MatrixJson = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: malformed matrix JSON: {e}", path.display())))?;
    DenseMatrix::from_json(&json).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn norm(a: &NormArgs, out: &mut dyn Write) -> CliResult {
    let m = read_matrix(&a.input)?;
    let result: NormResult<f64> = match a.method {
        Method::Frobenius => frobenius_norm(&m)?,
        Method::Dft => {
            let row = m
                .circulant_first_row()
                .ok_or_else(|| Failure::Usage("--method dft needs a circulant matrix".into()))?;
            spectral_norm_circulant(&row)?
        }
        Method::Power => spectral_norm_power(&m, a.tol, a.max_iter)?,
        Method::Jacobi => spectral_norm_jacobi(&m)?,
    };
    match a.format {
        Format::Json => write_json(out, &result),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(result)?;
            w.flush()?;
            Ok(())
        }
    }
}

/// Flat CSV row of a report.
#[derive(Serialize)]
struct ReportRow<'a> {
    theorem_id: &'static str,
    n: usize,
    k: Option<usize>,
    r: Option<String>,
    r_label: Option<&'a str>,
    seed: Option<u64>,
    case: Option<usize>,
    closed_form: f64,
    independent: f64,
    oracle: Option<f64>,
    lower: Option<f64>,
    upper: Option<f64>,
    abs_err: f64,
    rel_err: f64,
    tolerance: f64,
    passed: bool,
    detail: Option<&'a str>,
}

impl<'a> From<&'a VerificationReport> for ReportRow<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        Self {
            theorem_id: r.theorem_id.wire_name(),
            n: r.n,
            k: r.k,
            r: r.r.map(|[re, im]| format_complex(Complex64::new(re, im))),
            r_label: r.r_label.as_deref(),
            seed: r.seed,
            case: r.case,
            closed_form: r.closed_form,
            independent: r.independent,
            oracle: r.oracle,
            lower: r.lower,
            upper: r.upper,
            abs_err: r.abs_err,
            rel_err: r.rel_err,
            tolerance: r.tolerance,
            passed: r.passed,
            detail: r.detail.as_deref(),
        }
    }
}

fn write_reports(out: &mut dyn Write, format: Format, reports: &[VerificationReport]) -> CliResult {
    match format {
        Format::Json => write_json(out, reports)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in reports {
                w.serialize(ReportRow::from(r))?;
            }
            w.flush()?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Failure::Check(format!(
            "{failed} of {} checks failed",
            reports.len()
        )));
    }
    Ok(())
}

/// Worker count from `HFNORM_THREADS`, default 1.
fn sweep_threads() -> std::result::Result<usize, Failure> {
    match std::env::var("HFNORM_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(Failure::Usage(format!(
                "HFNORM_THREADS must be an integer >= 1, got {v:?}"
            ))),
        },
    }
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let groups = parse_selection(&a.theorem)?;
    let r_grid = match &a.r_grid {
        Some(s) => {
            let grid = parse_grid(s)?;
            if grid.is_empty() {
                return Err(Failure::Usage("--r-grid is empty".into()));
            }
            Some(grid)
        }
        None => None,
    };
    let cfg = SweepConfig {
        n_max: a.n_max,
        k_max: a.k_max,
        r_grid,
        seed: a.seed,
        threads: sweep_threads()?,
    };
    let reports = run_sweep(&groups, &cfg)?;
    eprintln!(
        "hfnorm: {} checks, {} passed (seed {})",
        reports.len(),
        reports.iter().filter(|r| r.passed).count(),
        a.seed
    );
    write_reports(out, a.format, &reports)
}

fn bounds(a: &BoundsArgs, out: &mut dyn Write) -> CliResult {
    let r = parse_multiplier(&a.r)?;
    let verifier = Verifier::new(a.n, a.k)?;
    let report = verifier.spectral_sandwich(a.n, a.k, &r)?;
    write_reports(out, a.format, std::slice::from_ref(&report))
}

/// Wall time in milliseconds, rounded to microseconds.
fn elapsed_millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    method: &'static str,
    millis: f64,
    value: f64,
}

fn bench(a: &BenchArgs, out: &mut dyn Write) -> CliResult {
    let ns = a
        .n_list
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("--n-list: not an order: {t:?}")))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if let Some(&n) = ns.iter().find(|&&n| n == 0 || n > BENCH_DFT_MAX) {
        return Err(Failure::Usage(format!(
            "--n-list: order {n} outside 1..={BENCH_DFT_MAX}"
        )));
    }
    let mut w = csv::Writer::from_writer(out);
    let mut disagreements = Vec::new();
    for n in ns {
        let spec = RCirculantSpec::new(n, Complex64::one(), RowKind::HarmonicFib)?;
        let row = spec.first_row()?;
        let start = Instant::now();
        let dft = spectral_norm_circulant(&row)?.value;
        let millis = elapsed_millis(start);
        w.serialize(BenchRow {
            n,
            method: "dft",
            millis,
            value: dft,
        })?;
        if n <= JACOBI_MAX_ORDER {
            let m = build_r_circulant(&spec)?;
            let start = Instant::now();
            let jacobi = spectral_norm_jacobi(&m)?.value;
            let millis = elapsed_millis(start);
            w.serialize(BenchRow {
                n,
                method: "jacobi",
                millis,
                value: jacobi,
            })?;
            if relative_error(dft, jacobi) > EQUALITY_REL_TOL {
                disagreements.push(n);
            }
        }
    }
    w.flush()?;
    if !disagreements.is_empty() {
        return Err(Failure::Check(format!(
            "dft and jacobi disagree at n = {disagreements:?}"
        )));
    }
    Ok(())
}
