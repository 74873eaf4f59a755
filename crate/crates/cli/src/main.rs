//! Command-line front end: grid dumps, coefficient transforms, spline
//! evaluation, basis curves, determinant tables and the verification suite.
//! All numerical logic lives in the library; this binary parses flags,
//! reads sample CSVs and formats output.

mod io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use io::{emit, fail, read_samples, Cell, Format, Table, EXIT_CHECK, EXIT_NUMERICAL, EXIT_USAGE};
use std::f64::consts::PI;
use std::path::PathBuf;
use trigspline::fundamental::FundamentalBasis;
use trigspline::{
    check, fourier, Error, FactorKind, GridSpec, Interpolant, Parity, SplineConfig,
    TruncationPolicy,
};

#[derive(Parser)]
#[command(
    name = "trigspline",
    about = "Trigonometric interpolation splines on uniform grids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Full,
    Even,
    Odd,
}

impl From<FamilyArg> for Parity {
    fn from(f: FamilyArg) -> Parity {
        match f {
            FamilyArg::Full => Parity::Full,
            FamilyArg::Even => Parity::Even,
            FamilyArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorArg {
    Riemann,
    Power,
}

impl From<FactorArg> for FactorKind {
    fn from(f: FactorArg) -> FactorKind {
        match f {
            FactorArg::Riemann => FactorKind::Riemann,
            FactorArg::Power => FactorKind::Power,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Args)]
struct TruncArgs {
    /// Fixed number of tail terms per harmonic
    #[arg(long, conflicts_with = "trunc_tol")]
    trunc_terms: Option<usize>,
    /// Tail tolerance (default 1e-12, env TRIGSPLINE_TRUNC_TOL)
    #[arg(long)]
    trunc_tol: Option<f64>,
}

impl TruncArgs {
    fn policy(&self, r: u32, q: u32) -> TruncationPolicy {
        if let Some(m) = self.trunc_terms {
            return TruncationPolicy::FixedTerms(m);
        }
        let default = TruncationPolicy::default_for(r, q);
        let env_tol = std::env::var("TRIGSPLINE_TRUNC_TOL")
            .ok()
            .and_then(|v| v.parse::<f64>().ok());
        let tol = self.trunc_tol.or(env_tol);
        match (tol, default) {
            (Some(eps), TruncationPolicy::TailTolerance { m_max, .. }) => {
                TruncationPolicy::TailTolerance { eps, m_max }
            }
            (_, d) => d,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dump grid nodes as `j,x`
    Grid {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Grid phase indicator
        #[arg(long, default_value_t = 0)]
        i: u8,
        /// Node count
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Discrete Fourier coefficients of a sample file, as `k,a_k,b_k`
    Coeffs {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Interpolation grid phase
        #[arg(long, default_value_t = 0)]
        i2: u8,
        /// Sample CSV (`j,f` or `x,f`); the node count is its row count
        #[arg(long)]
        samples: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate a spline (or its derivative) from samples, as `t,value`
    Eval {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        i1: u8,
        #[arg(long, default_value_t = 0)]
        i2: u8,
        #[arg(long, value_enum, default_value = "power")]
        factor: FactorArg,
        /// Spline order
        #[arg(long)]
        r: u32,
        /// Derivative order
        #[arg(long, default_value_t = 0)]
        q: u32,
        #[arg(long)]
        samples: PathBuf,
        /// `dense:K` over the natural domain, or `list:FILE` with one t per line
        #[arg(long)]
        points: String,
        #[command(flatten)]
        trunc: TruncArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dump basis curves (B-spline kinds or cardinal functions), one column per index
    Basis {
        /// bc | br | bc0 | br0 | bc1 | br1 | fundamental
        #[arg(long)]
        kind: String,
        /// Spline family (fundamental kind only)
        #[arg(long, value_enum, default_value = "full")]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        i1: u8,
        #[arg(long, default_value_t = 0)]
        i2: u8,
        #[arg(long, value_enum, default_value = "power")]
        factor: FactorArg,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Grid phase hosting the basis centers (B-spline kinds)
        #[arg(long, default_value_t = 0)]
        grid_indicator: u8,
        /// `dense:K`
        #[arg(long, default_value = "dense:200")]
        points: String,
        #[command(flatten)]
        trunc: TruncArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Collocation determinant table: rows = kinds, columns = orders
    Det {
        /// `all` or a comma list of bc,br,bc0,br0,bc1,br1
        #[arg(long, default_value = "all")]
        kinds: String,
        /// Comma list of orders
        #[arg(long, default_value = "1,2,3,4,5,11")]
        r: String,
        #[arg(long, default_value_t = 9)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        grid_indicator: u8,
        #[command(flatten)]
        trunc: TruncArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the verification suite (exit 1 on any failure)
    Check {
        /// Comma list of check numbers (default: all)
        #[arg(long)]
        only: Option<String>,
    },
}

fn grid_or_usage(family: Parity, indicator: u8, n: usize) -> GridSpec {
    match GridSpec::new(family.grid_family(), indicator, n) {
        Ok(g) => g,
        Err(e) => fail(EXIT_USAGE, &e.to_string()),
    }
}

fn numerical_exit(e: &Error) -> ! {
    let code = match e {
        Error::DegenerateKernel { .. } | Error::SingularCollocation { .. } => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    };
    fail(code, &e.to_string())
}

fn parse_points(spec: &str, family: Parity) -> Vec<f64> {
    if let Some(k) = spec.strip_prefix("dense:") {
        let k: usize = match k.parse() {
            Ok(v) if v >= 2 => v,
            _ => fail(EXIT_USAGE, "dense:K needs an integer K >= 2"),
        };
        return match family {
            Parity::Full => (0..k).map(|i| 2.0 * PI * i as f64 / k as f64).collect(),
            _ => (0..k).map(|i| PI * i as f64 / (k - 1) as f64).collect(),
        };
    }
    if let Some(path) = spec.strip_prefix("list:") {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => fail(EXIT_USAGE, &format!("{path}: {e}")),
        };
        let mut pts = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line == "t" {
                continue;
            }
            match line.parse::<f64>() {
                Ok(v) => pts.push(v),
                Err(e) => fail(EXIT_USAGE, &format!("{path} line {}: {e}", lineno + 1)),
            }
        }
        if pts.is_empty() {
            fail(EXIT_USAGE, "point list is empty");
        }
        if family != Parity::Full && pts.iter().any(|t| *t < 0.0 || *t > PI) {
            eprintln!(
                "warning: evaluation points outside [0, pi]; the series extends the spline by symmetry"
            );
        }
        return pts;
    }
    fail(EXIT_USAGE, "points must be `dense:K` or `list:FILE`")
}

fn count_sample_rows(path: &PathBuf) -> usize {
    match std::fs::read_to_string(path) {
        Ok(text) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .count()
            .saturating_sub(1),
        Err(e) => fail(EXIT_USAGE, &format!("{}: {e}", path.display())),
    }
}

fn cmd_grid(family: Parity, i: u8, n: usize, out: &OutputArgs) {
    let grid = grid_or_usage(family, i, n);
    let mut table = Table::new(vec!["j".into(), "x".into()]);
    for (j, x) in grid.nodes().into_iter().enumerate() {
        table.push(vec![Cell::Int(j as u64 + 1), Cell::Float(x)]);
    }
    emit(&table, out.format.into(), out.output.as_deref());
}

fn cmd_coeffs(family: Parity, i2: u8, samples_path: &PathBuf, out: &OutputArgs) {
    let n = count_sample_rows(samples_path);
    let grid = grid_or_usage(family, i2, n);
    let samples = match read_samples(samples_path, grid) {
        Ok(s) => s,
        Err(e) => fail(EXIT_USAGE, &e),
    };
    let coeffs = match fourier::coeffs(&samples) {
        Ok(c) => c,
        Err(e) => numerical_exit(&e),
    };
    let mut table = Table::new(vec!["k".into(), "a_k".into(), "b_k".into()]);
    if family != Parity::Odd {
        table.push(vec![Cell::Int(0), Cell::Float(coeffs.a0), Cell::Float(0.0)]);
    }
    let k_max = coeffs.a.len().max(coeffs.b.len());
    for k in 0..k_max {
        table.push(vec![
            Cell::Int(k as u64 + 1),
            Cell::Float(coeffs.a.get(k).copied().unwrap_or(0.0)),
            Cell::Float(coeffs.b.get(k).copied().unwrap_or(0.0)),
        ]);
    }
    emit(&table, out.format.into(), out.output.as_deref());
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    family: Parity,
    i1: u8,
    i2: u8,
    factor: FactorKind,
    r: u32,
    q: u32,
    samples_path: &PathBuf,
    points: &str,
    trunc: &TruncArgs,
    out: &OutputArgs,
) {
    let n = count_sample_rows(samples_path);
    let cfg = match SplineConfig::new(family, i1, i2, factor, r, q, n) {
        Ok(c) => c.with_truncation(trunc.policy(r, q)),
        Err(e) => fail(EXIT_USAGE, &e.to_string()),
    };
    let samples = match read_samples(samples_path, cfg.grid().unwrap()) {
        Ok(s) => s,
        Err(e) => fail(EXIT_USAGE, &e),
    };
    let spline = match Interpolant::new(cfg, &samples) {
        Ok(s) => s,
        Err(e) => numerical_exit(&e),
    };
    let ts = parse_points(points, family);
    let values = spline.eval_many(&ts);
    let mut table = Table::new(vec!["t".into(), "value".into()]);
    for (t, v) in ts.into_iter().zip(values) {
        table.push(vec![Cell::Float(t), Cell::Float(v)]);
    }
    emit(&table, out.format.into(), out.output.as_deref());
}

#[allow(clippy::too_many_arguments)]
fn cmd_basis(
    kind: &str,
    family: Parity,
    i1: u8,
    i2: u8,
    factor: FactorKind,
    r: u32,
    q: u32,
    n: usize,
    grid_indicator: u8,
    points: &str,
    trunc: &TruncArgs,
    out: &OutputArgs,
) {
    let policy = trunc.policy(r, q);
    let (ts, curves) = if kind == "fundamental" {
        let cfg = match SplineConfig::new(family, i1, i2, factor, r, q, n) {
            Ok(c) => c.with_truncation(policy),
            Err(e) => fail(EXIT_USAGE, &e.to_string()),
        };
        let basis = match FundamentalBasis::new(cfg) {
            Ok(b) => b,
            Err(e) => numerical_exit(&e),
        };
        let ts = parse_points(points, family);
        let curves: Vec<Vec<f64>> = ts.iter().map(|t| basis.eval_all(*t)).collect();
        (ts, curves)
    } else {
        let kind = match check::kind_by_label(kind, r, q, n) {
            Some(k) => k.with_truncation(policy),
            None => fail(EXIT_USAGE, &format!("unknown basis kind {kind:?}")),
        };
        let grid = grid_or_usage(Parity::Full, grid_indicator, n);
        let basis = match trigspline::bspline::BSplineBasis::on_grid(kind, grid) {
            Ok(b) => b,
            Err(e) => numerical_exit(&e),
        };
        let ts = parse_points(points, Parity::Full);
        let curves: Vec<Vec<f64>> = ts.iter().map(|t| basis.eval_all(*t)).collect();
        (ts, curves)
    };
    let mut columns = vec!["t".to_string()];
    columns.extend((1..=n).map(|j| format!("b{j}")));
    let mut table = Table::new(columns);
    for (t, row) in ts.into_iter().zip(curves) {
        let mut cells = vec![Cell::Float(t)];
        cells.extend(row.into_iter().map(Cell::Float));
        table.push(cells);
    }
    emit(&table, out.format.into(), out.output.as_deref());
}

fn cmd_det(
    kinds: &str,
    rs: &str,
    n: usize,
    grid_indicator: u8,
    trunc: &TruncArgs,
    out: &OutputArgs,
) {
    let kind_list: Vec<String> = if kinds == "all" {
        check::kind_labels().iter().map(|s| s.to_string()).collect()
    } else {
        kinds.split(',').map(|s| s.trim().to_lowercase()).collect()
    };
    let r_list: Vec<u32> = rs
        .split(',')
        .map(|s| match s.trim().parse() {
            Ok(v) => v,
            Err(e) => fail(EXIT_USAGE, &format!("bad order {s:?}: {e}")),
        })
        .collect();
    let grid = grid_or_usage(Parity::Full, grid_indicator, n);
    let mut columns = vec!["kind".to_string()];
    columns.extend(r_list.iter().map(|r| format!("r={r}")));
    let mut table = Table::new(columns);
    for label in &kind_list {
        let mut cells = vec![Cell::Text(label.clone())];
        for &r in &r_list {
            let kind = match check::kind_by_label(label, r, 0, n) {
                Some(k) => k.with_truncation(trunc.policy(r, 0)),
                None => fail(EXIT_USAGE, &format!("unknown basis kind {label:?}")),
            };
            let basis = match trigspline::bspline::BSplineBasis::on_grid(kind, grid) {
                Ok(b) => b,
                Err(e) => numerical_exit(&e),
            };
            let sys = match basis.collocation_matrix() {
                Ok(s) => s,
                Err(e) => numerical_exit(&e),
            };
            cells.push(Cell::Float(sys.det().abs()));
        }
        table.push(cells);
    }
    emit(&table, out.format.into(), out.output.as_deref());
}

fn cmd_check(only: Option<&str>) {
    let ids: Vec<usize> = match only {
        None => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|s| match s.trim().parse() {
                Ok(v @ 1..=9) => v,
                _ => fail(EXIT_USAGE, &format!("bad check id {s:?} (1..9)")),
            })
            .collect(),
    };
    let reports = check::run(&ids);
    let mut all_passed = true;
    for report in &reports {
        println!("{}", report.summary());
        for d in &report.details {
            println!("    {d}");
        }
        all_passed &= report.passed;
    }
    if !all_passed {
        std::process::exit(EXIT_CHECK);
    }
}

fn main() {
    let cli = Cli::parse();
    match &cli.command {
        Command::Grid { family, i, n, out } => cmd_grid((*family).into(), *i, *n, out),
        Command::Coeffs {
            family,
            i2,
            samples,
            out,
        } => cmd_coeffs((*family).into(), *i2, samples, out),
        Command::Eval {
            family,
            i1,
            i2,
            factor,
            r,
            q,
            samples,
            points,
            trunc,
            out,
        } => cmd_eval(
            (*family).into(),
            *i1,
            *i2,
            (*factor).into(),
            *r,
            *q,
            samples,
            points,
            trunc,
            out,
        ),
        Command::Basis {
            kind,
            family,
            i1,
            i2,
            factor,
            r,
            q,
            n,
            grid_indicator,
            points,
            trunc,
            out,
        } => cmd_basis(
            kind,
            (*family).into(),
            *i1,
            *i2,
            (*factor).into(),
            *r,
            *q,
            *n,
            *grid_indicator,
            points,
            trunc,
            out,
        ),
        Command::Det {
            kinds,
            r,
            n,
            grid_indicator,
            trunc,
            out,
        } => cmd_det(kinds, r, *n, *grid_indicator, trunc, out),
        Command::Check { only } => cmd_check(only.as_deref()),
    }
}
