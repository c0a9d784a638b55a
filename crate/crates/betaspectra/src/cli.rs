//! Command-line surface: density evaluation, reference tables, identity
//! checks, Monte Carlo sampling and soft-edge scaling reports.
//!
//! Every command is a thin adapter over the library modules — no numerics
//! live here.  Output goes to stdout or `--out` as CSV (header row,
//! 17-significant-digit floats plus display-rounded companions where a
//! table is meant for eyeballing) or JSON (`{"meta": ..., "rows": [...]}`
//! mirroring the CSV columns).
//!
//! Exit codes: 0 on success, 1 when a `check` suite fails, 2 on invalid
//! parameters or usage (with a diagnostic naming the violated
//! precondition).
//!
//! Internal parallelism honors `--threads`; for fixed seed and flags the
//! output is byte-identical regardless of the worker count (per-sample
//! counter-mode RNG streams plus ordered reductions).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::bulk::{corrected_density_jacobi, corrected_density_laguerre};
use crate::ensemble::{EnsembleError, JacobiEnsemble, LaguerreEnsemble, Region};
use crate::exact::{cd_density_jacobi, cd_density_laguerre, SkewGramDensity};
use crate::fluctuation::{self, oracle};
use crate::largedev::{asym_density_jacobi, asym_density_laguerre, rate_identity_residuals};
use crate::sampler;
use crate::softedge::{scaling_limit_check_jacobi, scaling_limit_check_laguerre};
use crate::table;

const DEFAULT_TOLERANCES: &str = include_str!("../config/tolerances.toml");

// ---------------------------------------------------------------------------
// Argument model
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "betaspec",
    about = "Eigenvalue densities of Laguerre/Jacobi beta-ensembles: exact, bulk and tail formulas, reference tables, checks and Monte Carlo"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a density (exact, bulk law, or tail asymptote) on an x-grid
    Density(DensityArgs),
    /// Recompute a reference ratio table (tail asymptote / exact density)
    Table(TableArgs),
    /// Run a named invariant-check suite against its tolerances
    Check(CheckArgs),
    /// Draw spectra and emit histogram / extreme-value / gap estimates
    Sample(SampleArgs),
    /// Soft-edge collapse report: scaled tail density vs the universal law
    Scaling(ScalingArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FlavorOpt {
    Laguerre,
    Jacobi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Regime {
    Exact,
    Bulk,
    Asym,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct EnsembleArgs {
    /// Ensemble family
    #[arg(long, value_enum)]
    flavor: FlavorOpt,
    /// Dyson index β > 0
    #[arg(long)]
    beta: f64,
    /// Laguerre rate α (exponent a = αN)
    #[arg(long)]
    alpha: Option<f64>,
    /// Jacobi first rate α₁
    #[arg(long)]
    alpha1: Option<f64>,
    /// Jacobi second rate α₂
    #[arg(long)]
    alpha2: Option<f64>,
    /// Matrix size N
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for parallel sections (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    ens: EnsembleArgs,
    /// Evaluation points: value or range a:b:step, repeatable
    #[arg(long = "x", required = true)]
    xs: Vec<String>,
    #[arg(long, value_enum)]
    regime: Regime,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    flavor: FlavorOpt,
    /// β ∈ {1, 2}
    #[arg(long)]
    beta: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Rates,
    Fluctuation,
    Scaling,
    All,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Tolerance file (TOML); defaults to the shipped versioned config
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = "1")]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SampleKind {
    /// Raw sorted spectra, one row per eigenvalue
    Spectrum,
    /// Pooled eigenvalue histogram with across-sample standard errors
    Density,
    /// Largest-eigenvalue PDF histogram (Laguerre)
    Maxpdf,
    /// Smallest-eigenvalue survival function, fixed exponent (hard edge)
    Gap,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(value_enum)]
    kind: SampleKind,
    #[arg(long, value_enum, default_value = "laguerre")]
    flavor: FlavorOpt,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    alpha1: Option<f64>,
    #[arg(long)]
    alpha2: Option<f64>,
    /// Fixed (non-extensive) weight exponent for `gap`
    #[arg(long, default_value = "0")]
    a: f64,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, default_value = "1000")]
    samples: usize,
    #[arg(long, default_value = "40")]
    bins: usize,
    /// Gap thresholds in the hard-edge variable X = 4Ns: lo:hi:step
    #[arg(long, default_value = "5:40:2.5")]
    x_scaled: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ScalingArgs {
    #[arg(long, value_enum)]
    flavor: FlavorOpt,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    alpha1: Option<f64>,
    #[arg(long)]
    alpha2: Option<f64>,
    /// Scaled edge coordinates: value or a:b:step, repeatable
    #[arg(long = "x", default_value = "2:6:2")]
    xs: Vec<String>,
    /// Sizes to test, repeatable
    #[arg(long = "n", default_values = ["100", "10000"])]
    ns: Vec<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

// ---------------------------------------------------------------------------
// Tolerance config
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
struct Tolerances {
    #[allow(dead_code)]
    version: u32,
    rates: RateTol,
    fluctuation: FlucTol,
    scaling: ScalTol,
}

#[derive(Debug, Deserialize)]
struct RateTol {
    max_residual: f64,
    points_per_tail: usize,
}

#[derive(Debug, Deserialize)]
struct FlucTol {
    max_residual: f64,
    quadrature_points: usize,
}

#[derive(Debug, Deserialize)]
struct ScalTol {
    rel_window: f64,
    n_low: usize,
    n_mid: usize,
    n_deep: usize,
}

// ---------------------------------------------------------------------------
// Row/table output model
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Empty,
}

struct OutTable {
    meta: Vec<(String, String)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl OutTable {
    fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Float(v) => format!("{v:.16e}"),
                    Cell::Int(v) => v.to_string(),
                    Cell::Text(s) => csv_quote(s),
                    Cell::Empty => String::new(),
                })
                .collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    fn to_json(&self) -> String {
        let meta: serde_json::Map<String, serde_json::Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(&k, c)| {
                        let v = match c {
                            Cell::Float(v) => serde_json::json!(v),
                            Cell::Int(v) => serde_json::json!(v),
                            Cell::Text(s) => serde_json::json!(s),
                            Cell::Empty => serde_json::Value::Null,
                        };
                        (k.to_string(), v)
                    })
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "meta": meta, "rows": rows });
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    fn emit(&self, output: &OutputArgs) -> Result<(), CliError> {
        let text = match output.format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        };
        match &output.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Debug)]
enum CliError {
    /// Parameter/usage error -> exit 2
    Usage(String),
    /// A check suite failed -> exit 1
    CheckFailed,
}

impl From<EnsembleError> for CliError {
    fn from(e: EnsembleError) -> Self {
        CliError::Usage(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Parse the process arguments, run the command, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Density(args) => with_pool(args.output.threads, || cmd_density(&args)),
        Command::Table(args) => with_pool(args.output.threads, || cmd_table(&args)),
        Command::Check(args) => with_pool(args.output.threads, || cmd_check(&args)),
        Command::Sample(args) => with_pool(args.output.threads, || cmd_sample(&args)),
        Command::Scaling(args) => with_pool(args.output.threads, || cmd_scaling(&args)),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::CheckFailed) => 1,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn with_pool<T>(threads: Option<usize>, body: impl FnOnce() -> T + Send) -> T
where
    T: Send,
{
    match threads {
        None => body(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(body),
    }
}

/// Expand `--x` arguments: plain values or inclusive ranges `a:b:step`.
fn parse_grid(specs: &[String]) -> Result<Vec<f64>, CliError> {
    let mut out = Vec::new();
    for spec in specs {
        if let Some((a, rest)) = spec.split_once(':') {
            let (b, step) = rest
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("bad range '{spec}', want a:b:step")))?;
            let (a, b, step): (f64, f64, f64) = (
                a.parse().map_err(|_| CliError::Usage(format!("bad number in '{spec}'")))?,
                b.parse().map_err(|_| CliError::Usage(format!("bad number in '{spec}'")))?,
                step.parse().map_err(|_| CliError::Usage(format!("bad number in '{spec}'")))?,
            );
            if step <= 0.0 || b < a {
                return Err(CliError::Usage(format!("empty range '{spec}'")));
            }
            let count = ((b - a) / step + 1.5).floor() as usize;
            out.extend((0..count).map(|i| a + i as f64 * step).filter(|&x| x <= b + 1e-12 * step));
        } else {
            out.push(
                spec.parse()
                    .map_err(|_| CliError::Usage(format!("bad number '{spec}'")))?,
            );
        }
    }
    Ok(out)
}

fn laguerre_rates(args: &EnsembleArgs) -> Result<f64, CliError> {
    args.alpha
        .ok_or_else(|| CliError::Usage("laguerre flavor requires --alpha".into()))
}

fn jacobi_rates(args: &EnsembleArgs) -> Result<(f64, f64), CliError> {
    match (args.alpha1, args.alpha2) {
        (Some(a1), Some(a2)) => Ok((a1, a2)),
        _ => Err(CliError::Usage(
            "jacobi flavor requires --alpha1 and --alpha2".into(),
        )),
    }
}

fn region_note(region: Region) -> String {
    match region {
        Region::Bulk => "rejected: inside the limiting support".into(),
        Region::EdgeBand => "rejected: inside the edge guard band".into(),
        _ => String::new(),
    }
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

/// All densities are reported in the macroscopic variable: for Laguerre the
/// eigenvalue is N·x and the reported value is N·ρ(N·x), matching the tail
/// asymptote's normalization; Jacobi lives on (0, 1) directly.
fn cmd_density(args: &DensityArgs) -> Result<(), CliError> {
    let xs = parse_grid(&args.xs)?;
    let mut rows = Vec::new();
    let mut push = |x: f64, ln: Option<f64>, note: String| {
        let (logd, d) = match ln {
            Some(v) => (Cell::Float(v), Cell::Float(v.exp())),
            None => (Cell::Empty, Cell::Empty),
        };
        rows.push(vec![
            Cell::Float(x),
            Cell::Text(format!("{:?}", args.regime).to_lowercase()),
            logd,
            d,
            Cell::Text(note),
        ]);
    };
    match args.ens.flavor {
        FlavorOpt::Laguerre => {
            let alpha = laguerre_rates(&args.ens)?;
            let ens = LaguerreEnsemble::new(args.ens.beta, alpha, args.ens.n)?;
            let nf = ens.n as f64;
            let skew = match (args.regime, args.ens.beta as u32) {
                (Regime::Exact, 1) => Some(SkewGramDensity::laguerre(&ens)?),
                (Regime::Exact, 2) => None,
                (Regime::Exact, _) => {
                    return Err(CliError::Usage(format!(
                        "exact densities require beta 1 or 2, got {}",
                        args.ens.beta
                    )))
                }
                _ => None,
            };
            for &x in &xs {
                match args.regime {
                    Regime::Exact => {
                        let ln = match &skew {
                            None => cd_density_laguerre(&ens, nf * x)?.ln_abs,
                            Some(s) => s.density(nf * x)?.ln_abs,
                        } + nf.ln();
                        push(x, Some(ln), String::new());
                    }
                    Regime::Bulk => {
                        let d = corrected_density_laguerre(&ens);
                        let v = (d.smooth)(x);
                        if v > 0.0 {
                            push(x, Some(v.ln()), String::new());
                        } else {
                            push(x, None, "outside the limiting support".into());
                        }
                    }
                    Regime::Asym => match asym_density_laguerre(&ens, x) {
                        Ok(d) => push(x, Some(d.log_density().ln_abs), String::new()),
                        Err(e) => push(x, None, region_note(e.0)),
                    },
                }
            }
        }
        FlavorOpt::Jacobi => {
            let (a1, a2) = jacobi_rates(&args.ens)?;
            let ens = JacobiEnsemble::new(args.ens.beta, a1, a2, args.ens.n)?;
            let skew = match (args.regime, args.ens.beta as u32) {
                (Regime::Exact, 1) => Some(SkewGramDensity::jacobi(&ens)?),
                (Regime::Exact, 2) => None,
                (Regime::Exact, _) => {
                    return Err(CliError::Usage(format!(
                        "exact densities require beta 1 or 2, got {}",
                        args.ens.beta
                    )))
                }
                _ => None,
            };
            for &x in &xs {
                match args.regime {
                    Regime::Exact => {
                        let ln = match &skew {
                            None => cd_density_jacobi(&ens, x)?.ln_abs,
                            Some(s) => s.density(x)?.ln_abs,
                        };
                        push(x, Some(ln), String::new());
                    }
                    Regime::Bulk => {
                        let d = corrected_density_jacobi(&ens);
                        let v = (d.smooth)(x);
                        if v > 0.0 {
                            push(x, Some(v.ln()), String::new());
                        } else {
                            push(x, None, "outside the limiting support".into());
                        }
                    }
                    Regime::Asym => match asym_density_jacobi(&ens, x) {
                        Ok(d) => push(x, Some(d.log_density().ln_abs), String::new()),
                        Err(e) => push(x, None, region_note(e.0)),
                    },
                }
            }
        }
    }
    OutTable {
        meta: vec![
            ("command".into(), "density".into()),
            ("flavor".into(), format!("{:?}", args.ens.flavor).to_lowercase()),
            ("beta".into(), args.ens.beta.to_string()),
            ("n".into(), args.ens.n.to_string()),
        ],
        columns: vec!["x", "regime", "log_density", "density", "note"],
        rows,
    }
    .emit(&args.output)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn cmd_table(args: &TableArgs) -> Result<(), CliError> {
    let t = match args.flavor {
        FlavorOpt::Laguerre => table::laguerre_reference_table(args.beta)?,
        FlavorOpt::Jacobi => table::jacobi_reference_table(args.beta)?,
    };
    let rows = t
        .cells
        .iter()
        .map(|c| {
            vec![
                Cell::Int(c.n as i64),
                Cell::Float(c.x),
                Cell::Float(c.reference),
                Cell::Float(c.computed),
                Cell::Text(format!("{:.3}", c.computed)),
                Cell::Text(c.annotation.clone().unwrap_or_default()),
            ]
        })
        .collect();
    OutTable {
        meta: vec![
            ("command".into(), "table".into()),
            ("flavor".into(), format!("{:?}", t.flavor).to_lowercase()),
            ("beta".into(), t.beta.to_string()),
            ("rates".into(), format!("{},{}", t.rates.0, t.rates.1)),
        ],
        columns: vec!["n", "x", "reference", "computed", "computed_display", "annotation"],
        rows,
    }
    .emit(&args.output)
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckRow {
    name: String,
    residual: f64,
    threshold: f64,
}

impl CheckRow {
    fn pass(&self) -> bool {
        self.residual < self.threshold
    }
}

fn check_rates(tol: &RateTol, seed: u64) -> Vec<CheckRow> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for alpha in [0.5f64, 1.0, 2.0] {
        let lo = ((alpha + 1.0).sqrt() - 1.0).powi(2);
        let hi = ((alpha + 1.0).sqrt() + 1.0).powi(2);
        let mut worst_gc = 0.0f64;
        let mut worst_ga = 0.0f64;
        for _ in 0..tol.points_per_tail {
            let xl = lo * rng.gen_range(0.05..0.95);
            let xr = hi + rng.gen_range(0.1..10.0);
            let rl = rate_identity_residuals(2.0, alpha, xl);
            let rr = rate_identity_residuals(2.0, alpha, xr);
            worst_gc = worst_gc.max(rl.gas_vs_constrained.unwrap_or(0.0));
            worst_ga = worst_ga.max(rl.gas_vs_arcosh).max(rr.gas_vs_arcosh);
        }
        rows.push(CheckRow {
            name: format!("rate log-gas vs constrained-min, left tail, alpha={alpha}"),
            residual: worst_gc,
            threshold: tol.max_residual,
        });
        rows.push(CheckRow {
            name: format!("rate log-gas vs arcosh form, both tails, alpha={alpha}"),
            residual: worst_ga,
            threshold: tol.max_residual,
        });
    }
    rows
}

fn check_fluctuation(tol: &FlucTol) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for alpha in [0.5f64, 1.0, 2.0] {
        let lo = ((alpha + 1.0).sqrt() - 1.0).powi(2);
        let hi = ((alpha + 1.0).sqrt() + 1.0).powi(2);
        let mut worst_mp = 0.0f64;
        let mut worst_arc = 0.0f64;
        let mut worst_var = 0.0f64;
        for i in 0..20 {
            let xr = hi + 0.3 + 0.45 * i as f64;
            let xl = lo * (0.04 + 0.045 * i as f64);
            for x in [xr, xl] {
                worst_mp = worst_mp.max(
                    (fluctuation::mp_log_integral(alpha, x)
                        - oracle::mp_log_integral(alpha, x, tol.quadrature_points))
                    .abs(),
                );
                worst_arc = worst_arc.max(
                    (fluctuation::arcsine_log_integral(alpha, x)
                        - oracle::arcsine_log_integral(alpha, x, tol.quadrature_points / 2))
                    .abs(),
                );
                for beta in [1.0, 2.0, 4.0] {
                    if let Ok(series) = fluctuation::variance_diff_series_laguerre(beta, alpha, x)
                    {
                        worst_var = worst_var.max(
                            (fluctuation::variance_diff_laguerre(beta, alpha, x) - series).abs(),
                        );
                    }
                }
            }
        }
        rows.push(CheckRow {
            name: format!("mean integral (bulk-law part) vs quadrature, alpha={alpha}"),
            residual: worst_mp,
            threshold: tol.max_residual,
        });
        rows.push(CheckRow {
            name: format!("mean integral (arcsine part) vs quadrature, alpha={alpha}"),
            residual: worst_arc,
            threshold: tol.max_residual,
        });
        rows.push(CheckRow {
            name: format!("laguerre variance closed form vs series, alpha={alpha}"),
            residual: worst_var,
            threshold: tol.max_residual,
        });
    }
    for (a1, a2) in [(5.0f64, 5.0f64), (2.0, 7.0)] {
        let (c1, c2) = crate::ensemble::jacobi_support(a1, a2);
        let mut worst_pot = 0.0f64;
        let mut worst_var = 0.0f64;
        for i in 0..20 {
            let f = (i as f64 + 0.5) / 20.0;
            let x = if i % 2 == 0 { c1 * f } else { c2 + (1.0 - c2) * f };
            worst_pot = worst_pot.max(
                (fluctuation::jacobi_log_potential(a1, a2, x)
                    - oracle::jacobi_log_potential(a1, a2, x, tol.quadrature_points))
                .abs(),
            );
            for beta in [1.0, 2.0, 4.0] {
                if let Ok(series) = fluctuation::variance_diff_series_jacobi(beta, a1, a2, x) {
                    worst_var = worst_var
                        .max((fluctuation::variance_diff_jacobi(beta, a1, a2, x) - series).abs());
                }
            }
        }
        rows.push(CheckRow {
            name: format!("jacobi log-potential vs quadrature, rates=({a1},{a2})"),
            residual: worst_pot,
            threshold: tol.max_residual,
        });
        rows.push(CheckRow {
            name: format!("jacobi variance closed form vs series, rates=({a1},{a2})"),
            residual: worst_var,
            threshold: tol.max_residual,
        });
    }
    rows
}

fn check_scaling(tol: &ScalTol) -> Result<Vec<CheckRow>, CliError> {
    let mut rows = Vec::new();
    for beta in [1.0, 2.0, 4.0] {
        for x in [2.0, 4.0, 6.0] {
            let pts = scaling_limit_check_laguerre(
                beta,
                1.0,
                &[x],
                &[tol.n_low, tol.n_mid, tol.n_deep],
            )?;
            let dev =
                |i: usize| pts[i].ratio.map(|r| (r - 1.0).abs()).unwrap_or(f64::INFINITY);
            rows.push(CheckRow {
                name: format!("soft-edge collapse improves with N, beta={beta}, X={x}"),
                residual: dev(1) / dev(0),
                threshold: 1.0,
            });
            if beta == 2.0 {
                rows.push(CheckRow {
                    name: format!("soft-edge ratio near 1 at mid N, beta={beta}, X={x}"),
                    residual: dev(1),
                    threshold: tol.rel_window,
                });
            }
            rows.push(CheckRow {
                name: format!("soft-edge ratio near 1 at deep N, beta={beta}, X={x}"),
                residual: dev(2),
                threshold: tol.rel_window,
            });
        }
    }
    // one Jacobi spot check of the collapse at the mid size
    let j = scaling_limit_check_jacobi(2.0, 5.0, 5.0, &[4.0], &[tol.n_mid])?;
    rows.push(CheckRow {
        name: "soft-edge ratio near 1 at mid N, jacobi (5,5), X=4".into(),
        residual: j[0].ratio.map(|r| (r - 1.0).abs()).unwrap_or(f64::INFINITY),
        threshold: tol.rel_window,
    });
    Ok(rows)
}

fn cmd_check(args: &CheckArgs) -> Result<(), CliError> {
    let text = match &args.config {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => DEFAULT_TOLERANCES.to_string(),
    };
    let tol: Tolerances =
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad tolerance file: {e}")))?;
    let mut rows = Vec::new();
    match args.suite {
        Suite::Rates => rows.extend(check_rates(&tol.rates, args.seed)),
        Suite::Fluctuation => rows.extend(check_fluctuation(&tol.fluctuation)),
        Suite::Scaling => rows.extend(check_scaling(&tol.scaling)?),
        Suite::All => {
            rows.extend(check_rates(&tol.rates, args.seed));
            rows.extend(check_fluctuation(&tol.fluctuation));
            rows.extend(check_scaling(&tol.scaling)?);
        }
    }
    let failed = rows.iter().any(|r| !r.pass());
    let out_rows = rows
        .iter()
        .map(|r| {
            vec![
                Cell::Text(r.name.clone()),
                Cell::Float(r.residual),
                Cell::Float(r.threshold),
                Cell::Text(if r.pass() { "pass".into() } else { "FAIL".into() }),
            ]
        })
        .collect();
    OutTable {
        meta: vec![
            ("command".into(), "check".into()),
            ("suite".into(), format!("{:?}", args.suite).to_lowercase()),
        ],
        columns: vec!["check", "residual", "threshold", "status"],
        rows: out_rows,
    }
    .emit(&args.output)?;
    if failed {
        Err(CliError::CheckFailed)
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

fn summary_rows(s: &sampler::EmpiricalSummary) -> Vec<Vec<Cell>> {
    match s.kind {
        sampler::EstimatorKind::GapProbability => (0..s.values.len())
            .map(|i| {
                vec![
                    Cell::Float(s.bin_edges[i]),
                    Cell::Float(s.values[i]),
                    Cell::Float(s.standard_errors[i]),
                ]
            })
            .collect(),
        _ => (0..s.values.len())
            .map(|i| {
                vec![
                    Cell::Float(s.bin_edges[i]),
                    Cell::Float(s.bin_edges[i + 1]),
                    Cell::Float(s.counts[i]),
                    Cell::Float(s.values[i]),
                    Cell::Float(s.standard_errors[i]),
                ]
            })
            .collect(),
    }
}

fn cmd_sample(args: &SampleArgs) -> Result<(), CliError> {
    let meta = vec![
        ("command".into(), "sample".into()),
        ("kind".into(), format!("{:?}", args.kind).to_lowercase()),
        ("seed".into(), args.seed.to_string()),
        ("samples".into(), args.samples.to_string()),
        ("n".into(), args.n.to_string()),
        ("beta".into(), args.beta.to_string()),
    ];
    match args.kind {
        SampleKind::Spectrum => {
            let mut rows = Vec::new();
            for i in 0..args.samples as u64 {
                let sample = match args.flavor {
                    FlavorOpt::Laguerre => {
                        let alpha = args.alpha.ok_or_else(|| {
                            CliError::Usage("laguerre spectrum requires --alpha".into())
                        })?;
                        let ens = LaguerreEnsemble::new(args.beta, alpha, args.n)?;
                        sampler::sample_laguerre(&ens, args.seed, i)?
                    }
                    FlavorOpt::Jacobi => {
                        let (a1, a2) = match (args.alpha1, args.alpha2) {
                            (Some(a1), Some(a2)) => (a1, a2),
                            _ => {
                                return Err(CliError::Usage(
                                    "jacobi spectrum requires --alpha1 and --alpha2".into(),
                                ))
                            }
                        };
                        let ens = JacobiEnsemble::new(args.beta, a1, a2, args.n)?;
                        sampler::sample_jacobi(&ens, args.seed, i)?
                    }
                };
                for (j, &v) in sample.eigenvalues.iter().enumerate() {
                    rows.push(vec![
                        Cell::Int(i as i64),
                        Cell::Int(j as i64),
                        Cell::Float(v),
                    ]);
                }
            }
            OutTable {
                meta,
                columns: vec!["sample", "index", "eigenvalue"],
                rows,
            }
            .emit(&args.output)
        }
        SampleKind::Density => {
            let summary = match args.flavor {
                FlavorOpt::Laguerre => {
                    let alpha = args.alpha.ok_or_else(|| {
                        CliError::Usage("laguerre density requires --alpha".into())
                    })?;
                    let ens = LaguerreEnsemble::new(args.beta, alpha, args.n)?;
                    let samples = sampler::sample_batch_laguerre(&ens, args.seed, args.samples)?;
                    let (_, hi) = ens.support();
                    sampler::density_histogram(&samples, 0.0, args.n as f64 * hi * 1.05, args.bins)
                }
                FlavorOpt::Jacobi => {
                    let (a1, a2) = match (args.alpha1, args.alpha2) {
                        (Some(a1), Some(a2)) => (a1, a2),
                        _ => {
                            return Err(CliError::Usage(
                                "jacobi density requires --alpha1 and --alpha2".into(),
                            ))
                        }
                    };
                    let ens = JacobiEnsemble::new(args.beta, a1, a2, args.n)?;
                    let samples = sampler::sample_batch_jacobi(&ens, args.seed, args.samples)?;
                    sampler::density_histogram(&samples, 0.0, 1.0, args.bins)
                }
            };
            OutTable {
                meta,
                columns: vec!["bin_lo", "bin_hi", "count", "density", "stderr"],
                rows: summary_rows(&summary),
            }
            .emit(&args.output)
        }
        SampleKind::Maxpdf => {
            let alpha = args
                .alpha
                .ok_or_else(|| CliError::Usage("maxpdf requires --alpha".into()))?;
            let ens = LaguerreEnsemble::new(args.beta, alpha, args.n)?;
            let summary = sampler::estimate_max_pdf(&ens, args.seed, args.samples, args.bins)?;
            OutTable {
                meta,
                columns: vec!["bin_lo", "bin_hi", "count", "pdf", "stderr"],
                rows: summary_rows(&summary),
            }
            .emit(&args.output)
        }
        SampleKind::Gap => {
            let x_grid = parse_grid(std::slice::from_ref(&args.x_scaled))?;
            // thresholds in the eigenvalue variable: s = X / 4N
            let s_grid: Vec<f64> =
                x_grid.iter().map(|x| x / (4.0 * args.n as f64)).collect();
            let summary = sampler::estimate_gap_probability(
                args.beta,
                args.a,
                args.n,
                args.seed,
                args.samples,
                &s_grid,
            )?;
            let rows = (0..s_grid.len())
                .map(|i| {
                    vec![
                        Cell::Float(s_grid[i]),
                        Cell::Float(x_grid[i]),
                        Cell::Float(summary.values[i]),
                        Cell::Float(summary.standard_errors[i]),
                    ]
                })
                .collect();
            OutTable {
                meta,
                columns: vec!["s", "x_scaled", "gap_probability", "stderr"],
                rows,
            }
            .emit(&args.output)
        }
    }
}

// ---------------------------------------------------------------------------
// scaling
// ---------------------------------------------------------------------------

fn cmd_scaling(args: &ScalingArgs) -> Result<(), CliError> {
    let xs = parse_grid(&args.xs)?;
    let pts = match args.flavor {
        FlavorOpt::Laguerre => {
            let alpha = args
                .alpha
                .ok_or_else(|| CliError::Usage("laguerre scaling requires --alpha".into()))?;
            scaling_limit_check_laguerre(args.beta, alpha, &xs, &args.ns)?
        }
        FlavorOpt::Jacobi => {
            let (a1, a2) = match (args.alpha1, args.alpha2) {
                (Some(a1), Some(a2)) => (a1, a2),
                _ => {
                    return Err(CliError::Usage(
                        "jacobi scaling requires --alpha1 and --alpha2".into(),
                    ))
                }
            };
            scaling_limit_check_jacobi(args.beta, a1, a2, &xs, &args.ns)?
        }
    };
    let rows = pts
        .iter()
        .map(|p| {
            vec![
                Cell::Float(p.x_scaled),
                Cell::Int(p.n as i64),
                match p.ratio {
                    Some(r) => Cell::Float(r),
                    None => Cell::Empty,
                },
                Cell::Text(if p.ratio.is_none() {
                    "mapped point inside support/edge band".into()
                } else {
                    String::new()
                }),
            ]
        })
        .collect();
    OutTable {
        meta: vec![
            ("command".into(), "scaling".into()),
            ("flavor".into(), format!("{:?}", args.flavor).to_lowercase()),
            ("beta".into(), args.beta.to_string()),
        ],
        columns: vec!["x_scaled", "n", "ratio", "note"],
        rows,
    }
    .emit(&args.output)
}
