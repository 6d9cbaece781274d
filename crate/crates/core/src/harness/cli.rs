//! Command-line front end. [`run`] returns the process exit code.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use super::checks::{run_checks, Outcome, Suite};
use super::figures::{approx_table, figure_data, limit_table, Figure};
use super::output::{emit, Format, Meta, OutputTable, Route, Rows};
use crate::asymptotics::{DensityKind, LimitDensity};
use crate::closed_form::{
    half_line_exact_by_inner, half_line_exact_rational, half_line_exact_split,
    half_line_exact_total, line_exact, line_exact_rational, q2_oracle_distribution, ExactParams,
    Precision, SumKernel,
};
use crate::coin::{Angle, Coin};
use crate::error::{Error, Result};
use crate::evolution::evolve;
use crate::state::WalkKind;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Closed-form sums above this time get a precision warning.
pub const WARN_T: u64 = 300;

#[derive(Parser, Debug)]
#[command(
    name = "qwalk",
    version,
    about = "Coined quantum walks on the half line and the line"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutArgs {
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct WalkArgs {
    /// Coin angle in radians or as a π fraction (pi/4, 2pi/5)
    #[arg(long, default_value = "pi/4", allow_hyphen_values = true)]
    theta: Angle,
    /// Time step t
    #[arg(long)]
    steps: u64,
    /// halfline or line
    #[arg(long, default_value = "halfline", value_parser = parse_walk)]
    walk: WalkKind,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distribution by unitary evolution
    Simulate {
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Distribution from the closed-form sums
    Exact {
        #[command(flatten)]
        walk: WalkArgs,
        /// Half line only: 0, 1, total or split
        #[arg(long, default_value = "split")]
        inner: String,
        /// double, dd or exact (θ = pi/4 only)
        #[arg(long, default_value = "dd")]
        precision: Precision,
        /// jacobi or direct
        #[arg(long, default_value = "jacobi", value_parser = parse_kernel)]
        kernel: SumKernel,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Exact rational distribution at θ = π/4 by evolution in ℚ(√2)
    Oracle {
        #[arg(long)]
        steps: u64,
        #[arg(long, default_value = "halfline", value_parser = parse_walk)]
        walk: WalkKind,
        /// Accepted only as π/4
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<Angle>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Limit density or CDF samples
    Limit {
        #[arg(long, default_value = "pi/4", allow_hyphen_values = true)]
        theta: Angle,
        /// lineTotal, halfInner0, halfInner1 or halfTotal
        #[arg(long, default_value = "halfTotal")]
        kind: DensityKind,
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Sample the CDF instead of the density
        #[arg(long)]
        cdf: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Finite-time approximation of the half-line distribution
    Approx {
        #[arg(long, default_value = "pi/4", allow_hyphen_values = true)]
        theta: Angle,
        #[arg(long)]
        steps: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run residual suites; exit 1 if any check fails
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Comma-separated angles
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "pi/6,pi/4,pi/3,1.0",
            allow_hyphen_values = true
        )]
        thetas: Vec<Angle>,
        /// Check every t in 1..=steps
        #[arg(long, default_value_t = 200)]
        steps: u64,
        /// Explicit times (comma list, ranges as a..b); overrides --steps
        #[arg(long)]
        ts: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Write the data behind figures (fig1..fig9, or all) into a directory
    Figure {
        #[arg(required = true)]
        figures: Vec<String>,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// One file per (θ, t) configuration, computed in parallel
    Sweep {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        thetas: Vec<Angle>,
        /// Comma list, ranges as a..b
        #[arg(long)]
        ts: String,
        #[arg(long, default_value = "halfline", value_parser = parse_walk)]
        walk: WalkKind,
        /// evolve or exact
        #[arg(long, default_value = "evolve")]
        route: Route,
        #[arg(long, default_value = "dd")]
        precision: Precision,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_walk(s: &str) -> Result<WalkKind> {
    match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
        "halfline" | "hl" => Ok(WalkKind::HalfLine),
        "line" => Ok(WalkKind::Line),
        _ => Err(Error::InvalidArgument(format!("unknown walk '{s}'"))),
    }
}

fn parse_kernel(s: &str) -> Result<SumKernel> {
    match s.to_ascii_lowercase().as_str() {
        "jacobi" => Ok(SumKernel::Jacobi),
        "direct" => Ok(SumKernel::Direct),
        _ => Err(Error::InvalidArgument(format!("unknown kernel '{s}'"))),
    }
}

/// "1,5,10..20" → [1, 5, 10, 11, …, 20]
pub fn parse_times(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::InvalidArgument(format!("bad time list '{s}'"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b
                .trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad())?;
            if b < a {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } => EXIT_IO,
        Error::Precision(_) => EXIT_CHECK_FAILED,
        Error::InvalidArgument(_) | Error::Domain(_) | Error::Resource(_) | Error::Parse(_) => {
            EXIT_INVALID
        }
    }
}

/// Sizes the global rayon pool from QWALK_THREADS when set.
fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("QWALK_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "QWALK_THREADS must be a positive integer, got '{v}'"
        ))
    })?;
    // a pool may already exist when called twice in one process
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    match configure_threads().and_then(|_| execute(cli.command)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn write_one(table: &OutputTable, out: &OutArgs) -> Result<i32> {
    emit(table, out.format, out.out.as_deref())?;
    Ok(EXIT_OK)
}

fn write_into(dir: &Path, table: &OutputTable, format: Format) -> Result<PathBuf> {
    let path = dir.join(table.file_name(format));
    emit(table, format, Some(&path))?;
    Ok(path)
}

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn warn_precision(t: u64, precision: Precision) {
    if t > WARN_T && precision != Precision::ExactQ2 {
        eprintln!("warning: t = {t} > {WARN_T}; float closed-form sums may lose accuracy, compare with `simulate`");
    }
}

fn exact_table(
    coin: &Coin,
    t: u64,
    walk: WalkKind,
    inner: &str,
    params: ExactParams,
) -> Result<OutputTable> {
    if params.precision == Precision::ExactQ2 {
        if !coin.is_exact_quarter_pi() {
            return Err(Error::Domain(format!(
                "exact precision needs θ = pi/4, got {}",
                coin.angle()
            )));
        }
        if walk == WalkKind::HalfLine && inner != "split" {
            return Err(Error::InvalidArgument(
                "exact precision supports --inner split only".into(),
            ));
        }
        let d = match walk {
            WalkKind::HalfLine => half_line_exact_rational(t, params.kernel)?,
            WalkKind::Line => line_exact_rational(t, params.kernel)?,
        };
        return Ok(OutputTable::exact(&d, coin.theta(), Route::Exact));
    }
    let d = match walk {
        WalkKind::Line => line_exact(coin, t, params)?,
        WalkKind::HalfLine => match inner {
            "0" => half_line_exact_by_inner(coin, t, 0, params)?,
            "1" => half_line_exact_by_inner(coin, t, 1, params)?,
            "total" => half_line_exact_total(coin, t, params)?,
            "split" => half_line_exact_split(coin, t, params)?,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "--inner must be 0, 1, total or split, got '{other}'"
                )))
            }
        },
    };
    Ok(OutputTable::distribution(&d, coin.theta(), Route::Exact))
}

fn execute(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Simulate { walk, out } => {
            let coin = Coin::from_angle(walk.theta)?;
            let state = evolve(walk.walk, &coin, walk.steps as i64)?;
            write_one(
                &OutputTable::distribution(&state.distribution(), coin.theta(), Route::Evolve),
                &out,
            )
        }
        Command::Exact {
            walk,
            inner,
            precision,
            kernel,
            out,
        } => {
            let coin = Coin::from_angle(walk.theta)?;
            warn_precision(walk.steps, precision);
            let params = ExactParams { precision, kernel };
            write_one(
                &exact_table(&coin, walk.steps, walk.walk, &inner, params)?,
                &out,
            )
        }
        Command::Oracle {
            steps,
            walk,
            theta,
            out,
        } => {
            if let Some(a) = theta {
                if !Coin::from_angle(a)?.is_exact_quarter_pi() {
                    return Err(Error::Domain(format!(
                        "the oracle runs at θ = pi/4 only, got {a}"
                    )));
                }
            }
            let d = q2_oracle_distribution(walk, steps)?;
            write_one(
                &OutputTable::exact(&d, std::f64::consts::FRAC_PI_4, Route::Oracle),
                &out,
            )
        }
        Command::Limit {
            theta,
            kind,
            points,
            cdf,
            out,
        } => {
            let d = LimitDensity::new(Coin::from_angle(theta)?, kind)?;
            write_one(&limit_table(&d, points, cdf), &out)
        }
        Command::Approx { theta, steps, out } => {
            let coin = Coin::from_angle(theta)?;
            if steps == 0 {
                return Err(Error::InvalidArgument("approximation needs t ≥ 1".into()));
            }
            write_one(&approx_table(&coin, steps), &out)
        }
        Command::Verify {
            suite,
            thetas,
            steps,
            ts,
            out,
        } => {
            let coins = thetas
                .into_iter()
                .map(Coin::from_angle)
                .collect::<Result<Vec<_>>>()?;
            let times = match ts {
                Some(s) => parse_times(&s)?,
                None => (1..=steps).collect(),
            };
            let report = run_checks(suite, &coins, &times);
            let failed = report.failures().count();
            let domain = report.domain_errors().count();
            let table = OutputTable {
                meta: Meta::new("verify", None, None, None),
                rows: Rows::Checks(report.checks.clone()),
            };
            emit(&table, out.format, out.out.as_deref())?;
            eprintln!(
                "{} checks: {} passed, {failed} failed, {domain} domain errors",
                report.checks.len(),
                report
                    .checks
                    .iter()
                    .filter(|c| c.outcome == Outcome::Pass)
                    .count()
            );
            Ok(if failed > 0 {
                EXIT_CHECK_FAILED
            } else if domain > 0 {
                EXIT_INVALID
            } else {
                EXIT_OK
            })
        }
        Command::Figure {
            figures,
            format,
            out,
        } => {
            let figs: Vec<Figure> = if figures.iter().any(|f| f == "all") {
                Figure::ALL.to_vec()
            } else {
                figures.iter().map(|f| f.parse()).collect::<Result<_>>()?
            };
            ensure_dir(&out)?;
            let tables = figs
                .par_iter()
                .map(|f| figure_data(*f))
                .collect::<Result<Vec<_>>>()?;
            for t in tables.iter().flatten() {
                write_into(&out, t, format)?;
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            thetas,
            ts,
            walk,
            route,
            precision,
            format,
            out,
        } => {
            let mut configs = Vec::new();
            for a in thetas {
                let coin = Coin::from_angle(a)?;
                for t in parse_times(&ts)? {
                    configs.push((coin, t));
                }
            }
            configs.sort_by(|a, b| a.0.theta().total_cmp(&b.0.theta()).then(a.1.cmp(&b.1)));
            configs.dedup_by(|a, b| a.0.theta() == b.0.theta() && a.1 == b.1);
            if route == Route::Exact {
                if let Some(t) = configs.iter().map(|c| c.1).max() {
                    warn_precision(t, precision);
                }
            }
            ensure_dir(&out)?;
            let params = ExactParams::new(precision);
            let paths = configs
                .par_iter()
                .map(|(coin, t)| {
                    let table = match route {
                        Route::Evolve => {
                            let s = evolve(walk, coin, *t as i64)?;
                            OutputTable::distribution(
                                &s.distribution(),
                                coin.theta(),
                                Route::Evolve,
                            )
                        }
                        Route::Exact => exact_table(coin, *t, walk, "split", params)?,
                        other => {
                            return Err(Error::InvalidArgument(format!(
                                "sweep supports routes evolve and exact, got {other}"
                            )))
                        }
                    };
                    write_into(&out, &table, format)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut index = String::from("theta,t,file\n");
            for ((coin, t), p) in configs.iter().zip(&paths) {
                let name = p
                    .file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_default();
                index.push_str(&format!(
                    "{},{t},{name}\n",
                    super::output::format_number(coin.theta())
                ));
            }
            let ipath = out.join("index.csv");
            std::fs::write(&ipath, index).map_err(|e| Error::io(&ipath, e))?;
            Ok(EXIT_OK)
        }
    }
}
