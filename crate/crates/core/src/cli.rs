//! Command-line front end.
//!
//! Every command renders CSV (plain text for `check-bounds`): a metadata line
//! `# vp-interp v<version> <command> <params>`, a header line, then rows with
//! 17 significant digits.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::{
    divergence_probe, lagrange_conditions, lagrange_sweep, lebesgue_sweep, vp_conditions, weighted_errors,
    weighted_sup_error, EvaluationGrid, DEFAULT_BASE_COUNT,
};
use crate::basis::{make_nodes, ChebyshevKind};
use crate::error::Error;
use crate::operators::{lagrange_interpolate, vp_interpolate, JacobiWeight};
use crate::testfns::{sample_at_nodes, TestFunction};
use crate::vp::{fundamental_vp_sum, VpParams};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Grid size for figure and interpolation output.
pub const DEFAULT_PLOT_POINTS: usize = 1024;

pub const THETAS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// Rows of the sup-Lebesgue-constant table: kind, gamma, delta.
pub const TABLE_LC_ROWS: [(ChebyshevKind, f64, f64); 4] = [
    (ChebyshevKind::W1, 0.0, 0.0),
    (ChebyshevKind::W2, 0.5, 0.4),
    (ChebyshevKind::W3, 0.2, 0.3),
    (ChebyshevKind::W4, 0.5, 0.4),
];

/// Reference sup values per row, for `theta = 0.1, ..., 0.9`.
pub const TABLE_LC_REFERENCE: [[f64; 9]; 4] = [
    [2.43, 1.99, 1.73, 1.53, 1.42, 1.26, 1.16, 1.10, 1.04],
    [2.42, 1.98, 1.72, 1.52, 1.41, 1.26, 1.16, 1.10, 1.04],
    [2.47, 2.03, 1.76, 1.55, 1.44, 1.28, 1.18, 1.11, 1.06],
    [2.44, 2.00, 1.74, 1.54, 1.43, 1.28, 1.17, 1.10, 1.05],
];

pub const TABLE_LC_TOL: f64 = 0.05;

/// Default cap of the `n = 10, 20, ...` sweep behind each table cell.
pub const TABLE_LC_N_MAX: usize = 1000;

/// Reference error rows: `(n, vp, lagrange)`.
pub fn error_reference(func: TestFunction) -> &'static [(usize, f64, f64)] {
    match func {
        TestFunction::F1 => &[
            (50, 3.7e-7, 4.1e-7),
            (150, 9.9e-9, 9.9e-9),
            (250, 3.6e-9, 2.2e-9),
            (350, 4.7e-10, 4.7e-10),
            (450, 2.0e-10, 2.1e-10),
        ],
        TestFunction::F2 => &[
            (400, 2.9e-2, 1.9e-1),
            (1200, 9.5e-2, 1.9e-1),
            (1600, 3.8e-3, 1.3e-1),
            (2800, 2.0e-3, 8.9e-2),
            (3800, 3.9e-3, 2.7e-2),
        ],
        TestFunction::F3 => &[
            (51, 3.4e-3, 3.3e-3),
            (101, 1.8e-3, 1.7e-3),
            (201, 9.0e-4, 8.8e-4),
            (301, 6.0e-4, 5.9e-4),
            (401, 4.5e-4, 4.4e-4),
            (501, 3.6e-4, 3.5e-4),
            (601, 2.3e-4, 2.2e-4),
        ],
        TestFunction::F4 => &[
            (100, 1.7e-2, 4.1e-2),
            (600, 2.6e-3, 2.5e-1),
            (1100, 1.2e-3, 4.7e-1),
            (1600, 6.7e-4, 6.7e-1),
            (2100, 3.8e-4, 8.7e-1),
            (2600, 2.1e-4, 1.1),
            (3100, 1.0e-4, 1.3),
        ],
        TestFunction::F5 => &[],
    }
}

/// Error tables are compared up to this factor.
pub const ERROR_FACTOR: f64 = 2.0;

/// Weight pairs of the boundedness figures: kind, gamma, delta.
pub const LC_FIGURE_CASES: [(ChebyshevKind, f64, f64); 8] = [
    (ChebyshevKind::W1, 0.5, 0.5),
    (ChebyshevKind::W1, 0.3, 1.5),
    (ChebyshevKind::W2, 0.7, 1.3),
    (ChebyshevKind::W2, 0.0, 1.5),
    (ChebyshevKind::W3, 0.4, 1.5),
    (ChebyshevKind::W3, 0.4, 0.0),
    (ChebyshevKind::W4, 0.5, 1.0),
    (ChebyshevKind::W4, 0.0, 0.5),
];

pub const GIBBS_THETAS: [f64; 3] = [0.4, 0.6, 0.8];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Args(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Args(_) => 2,
            Self::Numeric(_) => 3,
            Self::Io { .. } => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonFinite { .. } => Self::Numeric(e.to_string()),
            other => Self::Args(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "vp-interp", version, about = "Filtered VP interpolation at Chebyshev zeros")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sup of the weighted Lebesgue constants, four weight pairs by nine thetas.
    TableLc(TableLcArgs),
    /// VP and Lagrange weighted errors for the benchmark functions.
    TableErrors(TableErrorsArgs),
    /// Data behind the figures.
    Figure(FigureArgs),
    /// Boundedness verdicts for a Chebyshev kind and Jacobi weight.
    CheckBounds(WeightArgs),
    /// Weighted Lebesgue constants for a list of n.
    Lebesgue(LebesgueArgs),
    /// Evaluate an interpolant of a test function or of random data.
    Interp(InterpArgs),
}

#[derive(Args, Debug)]
pub struct TableLcArgs {
    #[arg(long, default_value_t = TABLE_LC_N_MAX)]
    pub n_max: usize,
    #[arg(long, default_value_t = DEFAULT_BASE_COUNT)]
    pub grid: usize,
    /// Compare against the reference values and exit 1 on any mismatch.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Panel {
    F1f2,
    F3f4,
}

impl Panel {
    pub fn functions(self) -> [TestFunction; 2] {
        match self {
            Self::F1f2 => [TestFunction::F1, TestFunction::F2],
            Self::F3f4 => [TestFunction::F3, TestFunction::F4],
        }
    }
}

#[derive(Args, Debug)]
pub struct TableErrorsArgs {
    #[arg(long, value_enum)]
    pub panel: Panel,
    #[arg(long, default_value_t = DEFAULT_BASE_COUNT)]
    pub grid: usize,
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    Fund,
    Lc,
    Pointwise,
    Gibbs,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub id: FigureId,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1024)]
    pub n_max: usize,
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<ChebyshevKind>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long, value_parser = parse_func)]
    pub func: Option<TestFunction>,
    #[arg(long)]
    pub grid: Option<usize>,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: ChebyshevKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub delta: f64,
}

#[derive(Args, Debug)]
pub struct LebesgueArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Omit for Lagrange interpolation.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Comma-separated list of n.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Sweep n = 10, 20, ..., n_max instead of `--n`.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BASE_COUNT)]
    pub grid: usize,
}

#[derive(Args, Debug)]
pub struct InterpArgs {
    #[arg(long)]
    pub n: usize,
    /// Omit for Lagrange interpolation.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Interpolate a test function; random node data otherwise.
    #[arg(long, value_parser = parse_func)]
    pub func: Option<TestFunction>,
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<ChebyshevKind>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_PLOT_POINTS)]
    pub grid: usize,
}

fn parse_kind(s: &str) -> std::result::Result<ChebyshevKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_func(s: &str) -> std::result::Result<TestFunction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Text produced by a command and whether every `--check` comparison passed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub checks_passed: bool,
}

impl Output {
    fn plain(text: String) -> Self {
        Self {
            text,
            checks_passed: true,
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = run(&cli.command).and_then(|out| {
        emit(cli.out.as_deref(), &out.text)?;
        Ok(out.checks_passed)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("vp-interp: some values are outside tolerance");
            1
        }
        Err(e) => {
            eprintln!("vp-interp: {e}");
            e.exit_code()
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

pub fn run(command: &Command) -> CliResult<Output> {
    match command {
        Command::TableLc(a) => cmd_table_lc(a),
        Command::TableErrors(a) => cmd_table_errors(a),
        Command::Figure(a) => cmd_figure(a),
        Command::CheckBounds(a) => cmd_check_bounds(a),
        Command::Lebesgue(a) => cmd_lebesgue(a),
        Command::Interp(a) => cmd_interp(a),
    }
}

/// Formats with 17 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn preamble(command: &str, params: &str, header: &str) -> String {
    format!("# vp-interp v{VERSION} {command} {params}\n{header}\n")
}

fn weight(gamma: f64, delta: f64) -> CliResult<JacobiWeight> {
    Ok(JacobiWeight::new(gamma, delta)?)
}

fn check_theta(theta: f64) -> CliResult<f64> {
    if theta > 0.0 && theta < 1.0 {
        Ok(theta)
    } else {
        Err(Error::Theta(theta).into())
    }
}

/// Sup over `n = 10, 20, ..., n_max` for every row and theta.
pub fn table_lc_values(n_max: usize, base_count: usize) -> crate::Result<Vec<[f64; 9]>> {
    if n_max < 10 {
        return Err(Error::InvalidArgument(format!(
            "n-max must be at least 10, got {n_max}"
        )));
    }
    let n_values: Vec<usize> = (10..=n_max).step_by(10).collect();
    let cells: Vec<(usize, usize)> = (0..4).flat_map(|r| (0..9).map(move |c| (r, c))).collect();
    let sups = cells
        .par_iter()
        .map(|&(r, c)| {
            let (kind, g, d) = TABLE_LC_ROWS[r];
            let w = JacobiWeight::new(g, d)?;
            Ok(lebesgue_sweep(kind, w, THETAS[c], &n_values, base_count)?.sup_value)
        })
        .collect::<crate::Result<Vec<f64>>>()?;
    Ok(sups
        .chunks(9)
        .map(|c| c.try_into().expect("nine thetas per row"))
        .collect())
}

fn cmd_table_lc(a: &TableLcArgs) -> CliResult<Output> {
    let values = table_lc_values(a.n_max, a.grid)?;
    let mut header = "kind,gamma,delta,theta,sup_lebesgue".to_string();
    if a.check {
        header += ",reference,abs_diff,pass";
    }
    let mut text = preamble(
        "table-lc",
        &format!("n_min=10 n_step=10 n_max={} grid={}", a.n_max, a.grid),
        &header,
    );
    let mut ok = true;
    for (r, row) in values.iter().enumerate() {
        let (kind, g, d) = TABLE_LC_ROWS[r];
        for (c, v) in row.iter().enumerate() {
            write!(text, "{kind},{},{},{},{}", num(g), num(d), num(THETAS[c]), num(*v)).unwrap();
            if a.check {
                let reference = TABLE_LC_REFERENCE[r][c];
                let diff = (v - reference).abs();
                let pass = diff <= TABLE_LC_TOL;
                ok &= pass;
                write!(text, ",{},{},{pass}", num(reference), num(diff)).unwrap();
            }
            text.push('\n');
        }
    }
    Ok(Output {
        text,
        checks_passed: ok,
    })
}

/// One row of an error table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorRow {
    pub func: TestFunction,
    pub n: usize,
    pub m: usize,
    pub vp: f64,
    pub lagrange: f64,
}

/// VP (with the function's default theta) and Lagrange weighted errors of `func`.
pub fn error_row(func: TestFunction, n: usize, base_count: usize) -> crate::Result<ErrorRow> {
    let case = func.case();
    let params = VpParams::from_theta(n, case.theta_default)?;
    let data = sample_at_nodes(func, case.kind, n)?;
    let nodes = make_nodes(case.kind, n)?;
    let grid = EvaluationGrid::for_nodes(base_count, &nodes)?;
    let vp = vp_interpolate(case.kind, params, &data)?;
    let lag = lagrange_interpolate(case.kind, n, &data)?;
    Ok(ErrorRow {
        func,
        n,
        m: params.m(),
        vp: weighted_sup_error(&vp, |x| func.value(x), case.weight, &grid)?,
        lagrange: weighted_sup_error(&lag, |x| func.value(x), case.weight, &grid)?,
    })
}

/// Per-cell verdicts `(vp, lagrange)` against the reference values.
///
/// For `f4` the VP error only has to stay below twice the reference and the
/// Lagrange error above half of it; otherwise both must be within a factor 2.
pub fn error_row_checks(func: TestFunction, vp: f64, lagrange: f64, ref_vp: f64, ref_lag: f64) -> (bool, bool) {
    let within = |v: f64, r: f64| v <= ERROR_FACTOR * r && v >= r / ERROR_FACTOR;
    match func {
        TestFunction::F4 => (vp <= ERROR_FACTOR * ref_vp, lagrange >= ref_lag / ERROR_FACTOR),
        _ => (within(vp, ref_vp), within(lagrange, ref_lag)),
    }
}

fn cmd_table_errors(a: &TableErrorsArgs) -> CliResult<Output> {
    let jobs: Vec<(TestFunction, usize, f64, f64)> = a
        .panel
        .functions()
        .iter()
        .flat_map(|&f| error_reference(f).iter().map(move |&(n, v, l)| (f, n, v, l)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(f, n, _, _)| error_row(f, n, a.grid))
        .collect::<crate::Result<Vec<_>>>()?;
    let mut header = "function,kind,gamma,delta,theta,n,m,vp_error,lagrange_error".to_string();
    if a.check {
        header += ",reference_vp,reference_lagrange,vp_pass,lagrange_pass";
    }
    let panel = match a.panel {
        Panel::F1f2 => "f1f2",
        Panel::F3f4 => "f3f4",
    };
    let mut text = preamble("table-errors", &format!("panel={panel} grid={}", a.grid), &header);
    let mut ok = true;
    for (row, &(_, _, ref_vp, ref_lag)) in rows.iter().zip(&jobs) {
        let case = row.func.case();
        write!(
            text,
            "{},{},{},{},{},{},{},{},{}",
            row.func,
            case.kind,
            num(case.weight.gamma()),
            num(case.weight.delta()),
            num(case.theta_default),
            row.n,
            row.m,
            num(row.vp),
            num(row.lagrange)
        )
        .unwrap();
        if a.check {
            let (pv, pl) = error_row_checks(row.func, row.vp, row.lagrange, ref_vp, ref_lag);
            ok &= pv && pl;
            write!(text, ",{},{},{pv},{pl}", num(ref_vp), num(ref_lag)).unwrap();
        }
        text.push('\n');
    }
    Ok(Output {
        text,
        checks_passed: ok,
    })
}

fn cmd_figure(a: &FigureArgs) -> CliResult<Output> {
    match a.id {
        FigureId::Fund => figure_fund(a),
        FigureId::Lc => figure_lc(a),
        FigureId::Pointwise => figure_pointwise(a),
        FigureId::Gibbs => figure_gibbs(a),
    }
}

fn figure_fund(a: &FigureArgs) -> CliResult<Output> {
    let n = a.n.unwrap_or(30);
    let kind = a.kind.unwrap_or(ChebyshevKind::W1);
    let points = a.grid.unwrap_or(DEFAULT_PLOT_POINTS);
    if n < 2 {
        return Err(CliError::Args(format!("fund figure needs n >= 2, got {n}")));
    }
    // node 15 of 30 in 1-based numbering
    let k = n / 2 - 1;
    let mut ms = vec![0, n / 4, n / 2, n - 1];
    ms.dedup();
    let nodes = make_nodes(kind, n)?;
    let grid = EvaluationGrid::new(points, &nodes.t_nodes)?;
    let params = ms
        .iter()
        .map(|&m| VpParams::new(n, m))
        .collect::<crate::Result<Vec<_>>>()?;
    let header = std::iter::once("t,x".to_string())
        .chain(ms.iter().map(|m| format!("phi_m{m}")))
        .collect::<Vec<_>>()
        .join(",");
    let mut text = preamble(
        "figure",
        &format!("id=fund kind={kind} n={n} k={} grid={points}", k + 1),
        &header,
    );
    for &t in grid.points() {
        write!(text, "{},{}", num(t), num(t.cos())).unwrap();
        for &p in &params {
            write!(text, ",{}", num(fundamental_vp_sum(kind, p, k, t)?)).unwrap();
        }
        text.push('\n');
    }
    Ok(Output::plain(text))
}

fn figure_lc(a: &FigureArgs) -> CliResult<Output> {
    let base = a.grid.unwrap_or(DEFAULT_BASE_COUNT);
    if a.n_max < 64 {
        return Err(CliError::Args(format!("lc figure needs n-max >= 64, got {}", a.n_max)));
    }
    let cases: Vec<(ChebyshevKind, f64, f64)> = match a.kind {
        Some(kind) => vec![(kind, a.gamma.unwrap_or(0.0), a.delta.unwrap_or(0.0))],
        None => LC_FIGURE_CASES.to_vec(),
    };
    // n = 4l, m = 2l
    let l_values: Vec<usize> = (64..=a.n_max).step_by(64).map(|n| n / 4).collect();
    let mut text = preamble(
        "figure",
        &format!("id=lc theta=0.5 n_min=64 n_step=64 n_max={} grid={base}", a.n_max),
        "kind,gamma,delta,vp_bounded,n,m,lebesgue",
    );
    for (kind, g, d) in cases {
        let w = weight(g, d)?;
        let bounded = vp_conditions(kind, w).iter().all(|c| c.holds);
        let report = divergence_probe(kind, w, 1, 2, &l_values, base)?;
        for e in &report.entries {
            writeln!(
                text,
                "{kind},{},{},{bounded},{},{},{}",
                num(g),
                num(d),
                e.n,
                e.m,
                num(e.value)
            )
            .unwrap();
        }
    }
    Ok(Output::plain(text))
}

fn figure_pointwise(a: &FigureArgs) -> CliResult<Output> {
    let func = a.func.unwrap_or(TestFunction::F3);
    let case = func.case();
    let n = a.n.unwrap_or(if func == TestFunction::F5 { 50 } else { 101 });
    let theta = check_theta(a.theta.unwrap_or(case.theta_default))?;
    let points = a.grid.unwrap_or(DEFAULT_PLOT_POINTS);
    let params = VpParams::from_theta(n, theta)?;
    let data = sample_at_nodes(func, case.kind, n)?;
    let nodes = make_nodes(case.kind, n)?;
    let grid = EvaluationGrid::new(points, &nodes.t_nodes)?;
    let lag = lagrange_interpolate(case.kind, n, &data)?;
    let vp = vp_interpolate(case.kind, params, &data)?;
    let el = weighted_errors(&lag, |x| func.value(x), case.weight, &grid)?;
    let ev = weighted_errors(&vp, |x| func.value(x), case.weight, &grid)?;
    let mut text = preamble(
        "figure",
        &format!(
            "id=pointwise func={func} kind={} gamma={} delta={} n={n} m={} grid={points}",
            case.kind,
            case.weight.gamma(),
            case.weight.delta(),
            params.m()
        ),
        "x,lagrange_weighted_error,vp_weighted_error",
    );
    for ((t, l), (_, v)) in el.iter().zip(&ev) {
        writeln!(text, "{},{},{}", num(t.cos()), num(*l), num(*v)).unwrap();
    }
    Ok(Output::plain(text))
}

fn figure_gibbs(a: &FigureArgs) -> CliResult<Output> {
    let func = TestFunction::F5;
    let case = func.case();
    let n = a.n.unwrap_or(50);
    let points = a.grid.unwrap_or(DEFAULT_PLOT_POINTS);
    let data = sample_at_nodes(func, case.kind, n)?;
    let nodes = make_nodes(case.kind, n)?;
    let grid = EvaluationGrid::new(points, &nodes.t_nodes)?;
    let ts = grid.points();
    let lag = lagrange_interpolate(case.kind, n, &data)?.evaluate_many(ts);
    let vps = GIBBS_THETAS
        .iter()
        .map(|&th| Ok(vp_interpolate(case.kind, VpParams::from_theta(n, th)?, &data)?.evaluate_many(ts)))
        .collect::<CliResult<Vec<_>>>()?;
    let mut header = "x,u_f,u_lagrange".to_string();
    for th in GIBBS_THETAS {
        write!(header, ",u_vp_theta{th}").unwrap();
    }
    let mut text = preamble(
        "figure",
        &format!(
            "id=gibbs func=f5 kind={} gamma={} delta={} n={n} grid={points}",
            case.kind,
            case.weight.gamma(),
            case.weight.delta()
        ),
        &header,
    );
    for (i, &t) in ts.iter().enumerate() {
        let x = t.cos();
        let u = case.weight.at_angle(t);
        write!(text, "{},{},{}", num(x), num(u * func.value(x)), num(u * lag[i])).unwrap();
        for v in &vps {
            write!(text, ",{}", num(u * v[i])).unwrap();
        }
        text.push('\n');
    }
    Ok(Output::plain(text))
}

fn cmd_check_bounds(a: &WeightArgs) -> CliResult<Output> {
    let w = weight(a.gamma, a.delta)?;
    let violated = |conds: Vec<crate::analysis::Condition>| -> Vec<&'static str> {
        conds.into_iter().filter(|c| !c.holds).map(|c| c.name).collect()
    };
    let vp = violated(vp_conditions(a.kind, w));
    let lag = violated(lagrange_conditions(a.kind, w));
    let mut text = format!(
        "# vp-interp v{VERSION} check-bounds kind={} gamma={} delta={}\n",
        a.kind, a.gamma, a.delta
    );
    if vp.is_empty() {
        text += "VP: bounded\n";
    } else {
        writeln!(text, "VP: unbounded (violated: {})", vp.join("; ")).unwrap();
    }
    if lag.is_empty() {
        text += "Lagrange: log-growth regime\n";
    } else {
        writeln!(text, "Lagrange: faster than log growth (violated: {})", lag.join("; ")).unwrap();
    }
    Ok(Output::plain(text))
}

fn cmd_lebesgue(a: &LebesgueArgs) -> CliResult<Output> {
    let w = weight(a.weight.gamma, a.weight.delta)?;
    let kind = a.weight.kind;
    let n_values: Vec<usize> = match (a.n_max, a.n.is_empty()) {
        (Some(_), false) => return Err(CliError::Args("give either --n or --n-max, not both".into())),
        (Some(max), true) => (10..=max).step_by(10).collect(),
        (None, false) => a.n.clone(),
        (None, true) => return Err(CliError::Args("one of --n or --n-max is required".into())),
    };
    if n_values.is_empty() {
        return Err(CliError::Args("no n values in range".into()));
    }
    let report = match a.theta {
        Some(th) => lebesgue_sweep(kind, w, check_theta(th)?, &n_values, a.grid)?,
        None => lagrange_sweep(kind, w, &n_values, a.grid)?,
    };
    let theta = a.theta.map_or("lagrange".to_string(), |t| t.to_string());
    let mut text = preamble(
        "lebesgue",
        &format!(
            "kind={kind} gamma={} delta={} theta={theta} grid={}",
            a.weight.gamma, a.weight.delta, a.grid
        ),
        "n,m,lebesgue",
    );
    for e in &report.entries {
        writeln!(text, "{},{},{}", e.n, e.m, num(e.value)).unwrap();
    }
    Ok(Output::plain(text))
}

fn cmd_interp(a: &InterpArgs) -> CliResult<Output> {
    let case = a.func.map(TestFunction::case);
    let kind = a.kind.or(case.map(|c| c.kind)).unwrap_or(ChebyshevKind::W1);
    let gamma = a.gamma.or(case.map(|c| c.weight.gamma())).unwrap_or(0.0);
    let delta = a.delta.or(case.map(|c| c.weight.delta())).unwrap_or(0.0);
    let w = weight(gamma, delta)?;
    let params = match a.theta {
        Some(th) => VpParams::from_theta(a.n, check_theta(th)?)?,
        None => VpParams::lagrange(a.n)?,
    };
    if a.grid < 2 {
        return Err(CliError::Args(format!("grid must be at least 2, got {}", a.grid)));
    }
    let data = match a.func {
        Some(f) => sample_at_nodes(f, kind, a.n)?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            (0..a.n).map(|_| rng.gen_range(-1.0..1.0)).collect()
        }
    };
    let interp = vp_interpolate(kind, params, &data)?;
    let step = std::f64::consts::PI / (a.grid - 1) as f64;
    let ts: Vec<f64> = (0..a.grid).map(|i| i as f64 * step).collect();
    let values = interp.evaluate_many(&ts);
    let source = a
        .func
        .map_or(format!("random seed={}", a.seed), |f| format!("func={f}"));
    let mut header = "t,x,interpolant".to_string();
    if a.func.is_some() {
        header += ",f,weighted_error";
    }
    let mut text = preamble(
        "interp",
        &format!(
            "{source} kind={kind} gamma={gamma} delta={delta} n={} m={} grid={}",
            a.n,
            params.m(),
            a.grid
        ),
        &header,
    );
    for (&t, &v) in ts.iter().zip(&values) {
        if !v.is_finite() {
            return Err(Error::NonFinite { x: t.cos(), value: v }.into());
        }
        write!(text, "{},{},{}", num(t), num(t.cos()), num(v)).unwrap();
        if let Some(f) = a.func {
            let fx = f.value(t.cos());
            write!(text, ",{},{}", num(fx), num(w.at_angle(t) * (fx - v).abs())).unwrap();
        }
        text.push('\n');
    }
    Ok(Output::plain(text))
}
