//! Numeric content behind each figure, plus the table builders the CLI shares.

use std::fmt;
use std::str::FromStr;

use super::output::{Meta, OutputTable, Route, Rows, Sample, SeriesRow};
use crate::asymptotics::{approx_prob, ApproxKind, LimitDensity};
use crate::closed_form::{half_line_exact_split, ExactParams};
use crate::coin::Coin;
use crate::distribution::DistRow;
use crate::error::{Error, Result};
use crate::evolution::{evolve_half_line, half_line_states};
use crate::state::WalkKind;

/// Last time step of the time-evolution series.
pub const SERIES_T_MAX: u64 = 200;
/// Time of the θ-dependence tables.
pub const THETA_SWEEP_T: u64 = 150;
/// Time of the large-t distribution and approximation figures.
pub const LONG_T: u64 = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
}

impl Figure {
    pub const ALL: [Figure; 9] = [
        Figure::Fig1,
        Figure::Fig2,
        Figure::Fig3,
        Figure::Fig4,
        Figure::Fig5,
        Figure::Fig6,
        Figure::Fig7,
        Figure::Fig8,
        Figure::Fig9,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fig{}", self.number())
    }
}

impl FromStr for Figure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n: usize = s
            .trim()
            .to_ascii_lowercase()
            .strip_prefix("fig")
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown figure '{s}'")))?;
        Figure::ALL
            .get(n.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("no figure {n}; expected fig1..fig9")))
    }
}

/// θ values of the θ-dependence figure: kπ/20 for k = 1..19.
pub fn theta_sweep_grid() -> Vec<Coin> {
    (1..20)
        .map(|k| Coin::pi_fraction(k, 20).expect("nonzero denominator"))
        .collect()
}

/// Evolved half-line distribution with inner-state columns.
pub fn evolve_table(coin: &Coin, t: u64) -> OutputTable {
    let d = evolve_half_line(coin, t).distribution();
    OutputTable::distribution(&d, coin.theta(), Route::Evolve)
}

/// Approximation formulas at x = 0..=t: p0, p1 from the inner-state
/// approximations, p from the total one.
pub fn approx_table(coin: &Coin, t: u64) -> OutputTable {
    let rows = (0..=t as i64)
        .map(|x| DistRow {
            x,
            p0: Some(approx_prob(coin, t, x, ApproxKind::Inner0)),
            p1: Some(approx_prob(coin, t, x, ApproxKind::Inner1)),
            p: approx_prob(coin, t, x, ApproxKind::Total),
        })
        .collect();
    OutputTable {
        meta: Meta::new(
            WalkKind::HalfLine.to_string(),
            Some(coin.theta()),
            Some(t),
            Some(Route::Approx),
        ),
        rows: Rows::Distribution(rows),
    }
}

/// Density (or CDF when `cdf`) sampled at `points` evenly spaced arguments
/// covering the support with a margin of one step on each side.
pub fn limit_table(d: &LimitDensity, points: usize, cdf: bool) -> OutputTable {
    let (lo, hi) = d.support();
    let n = points.max(2);
    let step = (hi - lo) / (n - 1) as f64;
    let samples = (0..n)
        .map(|i| {
            let at = lo + step * i as f64;
            let value = if cdf { d.cdf_at(at) } else { d.density_at(at) };
            Sample { at, value }
        })
        .collect();
    OutputTable {
        meta: Meta::new(
            d.kind().name(),
            Some(d.coin().theta()),
            None,
            Some(Route::Limit),
        ),
        rows: if cdf {
            Rows::Cdf(samples)
        } else {
            Rows::Density(samples)
        },
    }
}

/// Long-format half-line series for t = 0..=t_max.
pub fn series_table(coin: &Coin, t_max: u64) -> OutputTable {
    let rows = half_line_states(*coin)
        .take(t_max as usize + 1)
        .flat_map(|s| {
            let t = s.t();
            s.distribution()
                .rows
                .into_iter()
                .map(move |row| SeriesRow { t, row })
        })
        .collect();
    OutputTable {
        meta: Meta::new(
            WalkKind::HalfLine.to_string(),
            Some(coin.theta()),
            Some(t_max),
            Some(Route::Evolve),
        ),
        rows: Rows::Series(rows),
    }
}

fn evolve_exact_pair(fig: Figure, coin: &Coin, t: u64) -> Result<Vec<OutputTable>> {
    let ev = evolve_table(coin, t).with_label(format!("{fig}_evolve"));
    let d = half_line_exact_split(coin, t, ExactParams::default())?;
    let ex = OutputTable::distribution(&d, coin.theta(), Route::Exact)
        .with_label(format!("{fig}_exact"));
    Ok(vec![ev, ex])
}

fn evolve_approx_pair(fig: Figure, coin: &Coin) -> Vec<OutputTable> {
    vec![
        evolve_table(coin, LONG_T).with_label(format!("{fig}_evolve")),
        approx_table(coin, LONG_T).with_label(format!("{fig}_approx")),
    ]
}

/// Tables for one figure, each labeled for use as a file stem.
pub fn figure_data(fig: Figure) -> Result<Vec<OutputTable>> {
    let quarter = Coin::pi_fraction(1, 4)?;
    let third = Coin::pi_fraction(1, 3)?;
    Ok(match fig {
        Figure::Fig1 => vec![evolve_table(&quarter, LONG_T).with_label("fig1")],
        Figure::Fig2 => vec![series_table(&quarter, SERIES_T_MAX).with_label("fig2")],
        Figure::Fig3 => theta_sweep_grid()
            .iter()
            .enumerate()
            .map(|(k, c)| evolve_table(c, THETA_SWEEP_T).with_label(format!("fig3_{:02}", k + 1)))
            .collect(),
        Figure::Fig4 => evolve_exact_pair(fig, &quarter, 14)?,
        Figure::Fig5 => evolve_exact_pair(fig, &quarter, 15)?,
        Figure::Fig6 => evolve_exact_pair(fig, &third, 14)?,
        Figure::Fig7 => evolve_exact_pair(fig, &third, 15)?,
        Figure::Fig8 => evolve_approx_pair(fig, &quarter),
        Figure::Fig9 => evolve_approx_pair(fig, &third),
    })
}

impl OutputTable {
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.meta = self.meta.labeled(label);
        self
    }

    fn dist_rows(&self) -> &[DistRow] {
        match &self.rows {
            Rows::Distribution(r) => r,
            _ => &[],
        }
    }
}

/// Largest |Δp| between two distribution tables over shared positions.
pub fn max_p_difference(a: &OutputTable, b: &OutputTable) -> f64 {
    a.dist_rows()
        .iter()
        .filter_map(|r| {
            b.dist_rows()
                .iter()
                .find(|o| o.x == r.x)
                .map(|o| (r.p - o.p).abs())
        })
        .fold(0.0, f64::max)
}
