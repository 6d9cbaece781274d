//! Closed-form probabilities from the binomial double-sum representation.
//!
//! Three number types are supported: `f64`, double-double (the default) and
//! exact rationals at θ = π/4. [`oracle`] evolves the π/4 walk exactly in
//! ℚ(√2) + iℚ(√2) as an independent reference.

pub mod binomial;
mod kernel;
pub mod oracle;
pub mod qfield;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use binomial::BinomialTable;
pub use oracle::{q2_oracle_distribution, Q2Walk, ORACLE_MAX_T};
pub use qfield::{QFieldComplex, QSqrt2};

use crate::coin::Coin;
use crate::distribution::{DistRow, Distribution, ZERO_CUTOFF};
use crate::error::{Error, Result};
use crate::numeric::{rational_to_f64, CompensatedSum, DoubleDouble, Scalar};
use crate::state::WalkKind;
use kernel::{branch_value, edge_value, Trig, Weight};

/// Negative results smaller than this in magnitude are rounding noise.
pub const NEGATIVE_CLAMP: f64 = 1e-13;

/// Working number type for the sums.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Precision {
    Double,
    #[default]
    DoubleDouble,
    /// Exact rationals; only at θ = π/4 given as a π fraction.
    ExactQ2,
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precision::Double => "double",
            Precision::DoubleDouble => "doubleDouble",
            Precision::ExactQ2 => "exactQ2",
        })
    }
}

impl FromStr for Precision {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "double" | "f64" => Ok(Precision::Double),
            "doubledouble" | "dd" => Ok(Precision::DoubleDouble),
            "exactq2" | "exact" => Ok(Precision::ExactQ2),
            _ => Err(Error::InvalidArgument(format!("unknown precision '{s}'"))),
        }
    }
}

/// How each double sum is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SumKernel {
    /// Single sums as Jacobi polynomials via their three-term recurrence.
    #[default]
    Jacobi,
    /// Literal term-by-term double sum, compensated, smallest terms first.
    Direct,
}

/// Evaluation settings; θ and t are passed alongside.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExactParams {
    pub precision: Precision,
    pub kernel: SumKernel,
}

impl ExactParams {
    pub fn new(precision: Precision) -> Self {
        ExactParams {
            precision,
            kernel: SumKernel::default(),
        }
    }

    pub fn with_kernel(mut self, kernel: SumKernel) -> Self {
        self.kernel = kernel;
        self
    }
}

/// One position of an exact rational distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRow {
    pub x: i64,
    pub p0: Option<BigRational>,
    pub p1: Option<BigRational>,
    pub p: BigRational,
}

impl ExactRow {
    pub fn split(x: i64, p0: BigRational, p1: BigRational) -> Self {
        let p = &p0 + &p1;
        ExactRow {
            x,
            p0: Some(p0),
            p1: Some(p1),
            p,
        }
    }

    pub fn total_only(x: i64, p: BigRational) -> Self {
        ExactRow {
            x,
            p0: None,
            p1: None,
            p,
        }
    }

    fn to_f64(&self) -> DistRow {
        DistRow {
            x: self.x,
            p0: self.p0.as_ref().map(rational_to_f64),
            p1: self.p1.as_ref().map(rational_to_f64),
            p: rational_to_f64(&self.p),
        }
    }
}

/// Exact rational distribution, rows sorted by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDistribution {
    pub kind: WalkKind,
    pub t: u64,
    pub rows: Vec<ExactRow>,
}

impl ExactDistribution {
    pub fn row(&self, x: i64) -> Option<&ExactRow> {
        self.rows
            .binary_search_by_key(&x, |r| r.x)
            .ok()
            .map(|i| &self.rows[i])
    }

    pub fn prob(&self, x: i64) -> BigRational {
        self.row(x)
            .map_or_else(<BigRational as Zero>::zero, |r| r.p.clone())
    }

    pub fn total(&self) -> BigRational {
        self.rows
            .iter()
            .fold(<BigRational as Zero>::zero(), |acc, r| acc + &r.p)
    }

    pub fn to_f64(&self) -> Distribution {
        Distribution {
            kind: self.kind,
            t: self.t,
            rows: self.rows.iter().map(ExactRow::to_f64).collect(),
        }
    }
}

fn check_args(coin: &Coin, t: u64, params: &ExactParams) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "closed forms are stated for t ≥ 1".into(),
        ));
    }
    coin.require_formula_domain()?;
    if params.precision == Precision::ExactQ2 && !coin.is_exact_quarter_pi() {
        return Err(Error::Domain(format!(
            "exact rational evaluation needs θ = pi/4 exactly, got θ = {}",
            coin.angle()
        )));
    }
    Ok(())
}

fn quarter_pi_trig() -> Trig<BigRational> {
    let half = BigRational::new(1.into(), 2.into());
    Trig {
        c2: half.clone(),
        s2: half,
    }
}

/// Line walk values as (x, P) over [−t−1, t−2].
fn line_values<S: CompensatedSum>(trig: &Trig<S>, t: u64, kernel: SumKernel) -> Vec<(i64, S)> {
    let table = (kernel == SumKernel::Direct).then(|| BinomialTable::new(t as usize));
    let branch = |m: u64, w| branch_value(trig, t, m, w, kernel, table.as_ref());
    let ti = t as i64;
    let mut out = Vec::with_capacity(2 * t as usize);
    let edge = edge_value(trig, t);
    out.push((-ti - 1, edge.clone()));
    out.push((-ti, edge));
    // left branch; for even t its m = t/2 positions coincide with the right branch's
    for m in 1..=(t - 1) / 2 {
        let v = branch(m, Weight::Left);
        let k = ti - 2 * m as i64;
        out.push((-k - 1, v.clone()));
        out.push((-k, v));
    }
    for m in (1..=t / 2).rev() {
        let v = branch(m, Weight::Right);
        let k = ti - 2 * m as i64;
        out.push((k - 1, v.clone()));
        out.push((k, v));
    }
    out
}

/// Half-line row before conversion: (x, p0, p1, combined total).
type HalfValues<S> = (i64, S, S, S);

/// Half-line values over [0, t]. Inner 0 at x follows the line walk's
/// right branch, inner 1 its left branch; the total uses the combined weight.
fn half_line_values<S: CompensatedSum>(
    trig: &Trig<S>,
    t: u64,
    kernel: SumKernel,
) -> Vec<HalfValues<S>> {
    let table = (kernel == SumKernel::Direct).then(|| BinomialTable::new(t as usize));
    let branch = |m: u64, w| branch_value(trig, t, m, w, kernel, table.as_ref());
    let ti = t as i64;
    let mut out = Vec::with_capacity(t as usize + 1);
    if t.is_multiple_of(2) {
        let m = t / 2;
        let v = branch(m, Weight::Right);
        out.push((0, v.clone(), v, branch(m, Weight::Combined)));
    }
    for m in (1..=(t - 1) / 2).rev() {
        let r = branch(m, Weight::Right);
        let l = branch(m, Weight::Left);
        let total = branch(m, Weight::Combined);
        let k = ti - 2 * m as i64;
        out.push((k - 1, r.clone(), l.clone(), total.clone()));
        out.push((k, r, l, total));
    }
    let edge = edge_value(trig, t);
    out.push((ti - 1, S::zero(), edge.clone(), edge.clone()));
    out.push((ti, S::zero(), edge.clone(), edge));
    out
}

/// Converts to f64, clamping rounding-level negatives and flagging larger ones.
fn finish<S: Scalar>(v: &S, x: i64, t: u64) -> Result<f64> {
    let p = v.to_f64();
    if p.is_nan() {
        return Err(Error::Precision(format!(
            "NaN probability at x = {x}, t = {t}"
        )));
    }
    if p < 0.0 {
        if p > -NEGATIVE_CLAMP {
            return Ok(0.0);
        }
        return Err(Error::Precision(format!(
            "negative probability {p:e} at x = {x}, t = {t}: cancellation exceeded the working precision"
        )));
    }
    Ok(if p < ZERO_CUTOFF { 0.0 } else { p })
}

fn line_rows<S: CompensatedSum>(trig: &Trig<S>, t: u64, kernel: SumKernel) -> Result<Vec<DistRow>> {
    line_values(trig, t, kernel)
        .iter()
        .map(|(x, v)| Ok(DistRow::total_only(*x, finish(v, *x, t)?)))
        .collect()
}

/// Which columns of the half-line values to keep.
#[derive(Clone, Copy)]
enum HalfView {
    Inner(u8),
    Total,
    Split,
}

fn half_rows<S: CompensatedSum>(
    trig: &Trig<S>,
    t: u64,
    kernel: SumKernel,
    view: HalfView,
) -> Result<Vec<DistRow>> {
    half_line_values(trig, t, kernel)
        .iter()
        .map(|(x, p0, p1, p)| {
            let x = *x;
            Ok(match view {
                HalfView::Inner(0) => {
                    let v = finish(p0, x, t)?;
                    DistRow {
                        x,
                        p0: Some(v),
                        p1: None,
                        p: v,
                    }
                }
                HalfView::Inner(_) => {
                    let v = finish(p1, x, t)?;
                    DistRow {
                        x,
                        p0: None,
                        p1: Some(v),
                        p: v,
                    }
                }
                HalfView::Total => DistRow::total_only(x, finish(p, x, t)?),
                HalfView::Split => DistRow::split(x, finish(p0, x, t)?, finish(p1, x, t)?),
            })
        })
        .collect()
}

fn dispatch_half(coin: &Coin, t: u64, params: ExactParams, view: HalfView) -> Result<Distribution> {
    check_args(coin, t, &params)?;
    let rows = match params.precision {
        Precision::Double => {
            let trig = Trig {
                c2: coin.c() * coin.c(),
                s2: coin.s() * coin.s(),
            };
            half_rows(&trig, t, params.kernel, view)?
        }
        Precision::DoubleDouble => half_rows(&dd_trig(coin), t, params.kernel, view)?,
        Precision::ExactQ2 => half_rows(&quarter_pi_trig(), t, params.kernel, view)?,
    };
    Ok(Distribution {
        kind: WalkKind::HalfLine,
        t,
        rows,
    })
}

fn dd_trig(coin: &Coin) -> Trig<DoubleDouble> {
    Trig {
        c2: coin.c_dd().sqr(),
        s2: coin.s_dd().sqr(),
    }
}

/// Line-walk distribution from the closed form, total only, over the
/// positions it covers: [−t−1, t−2].
pub fn line_exact(coin: &Coin, t: u64, params: ExactParams) -> Result<Distribution> {
    check_args(coin, t, &params)?;
    let rows = match params.precision {
        Precision::Double => {
            let trig = Trig {
                c2: coin.c() * coin.c(),
                s2: coin.s() * coin.s(),
            };
            line_rows(&trig, t, params.kernel)?
        }
        Precision::DoubleDouble => line_rows(&dd_trig(coin), t, params.kernel)?,
        Precision::ExactQ2 => line_rows(&quarter_pi_trig(), t, params.kernel)?,
    };
    Ok(Distribution {
        kind: WalkKind::Line,
        t,
        rows,
    })
}

/// P(X_t = x; inner) on the half line, x = 0..=t. The value sits in the
/// matching `p0`/`p1` column and in `p`.
pub fn half_line_exact_by_inner(
    coin: &Coin,
    t: u64,
    inner: u8,
    params: ExactParams,
) -> Result<Distribution> {
    if inner > 1 {
        return Err(Error::InvalidArgument(format!(
            "inner state must be 0 or 1, got {inner}"
        )));
    }
    dispatch_half(coin, t, params, HalfView::Inner(inner))
}

/// P(X_t = x) on the half line from the combined-weight sums.
pub fn half_line_exact_total(coin: &Coin, t: u64, params: ExactParams) -> Result<Distribution> {
    dispatch_half(coin, t, params, HalfView::Total)
}

/// Both inner-state columns with `p = p0 + p1`.
pub fn half_line_exact_split(coin: &Coin, t: u64, params: ExactParams) -> Result<Distribution> {
    dispatch_half(coin, t, params, HalfView::Split)
}

/// Line walk at θ = π/4 in exact rationals.
pub fn line_exact_rational(t: u64, kernel: SumKernel) -> Result<ExactDistribution> {
    let coin = Coin::pi_fraction(1, 4)?;
    check_args(&coin, t, &ExactParams::new(Precision::ExactQ2))?;
    let rows = line_values(&quarter_pi_trig(), t, kernel)
        .into_iter()
        .map(|(x, p)| ExactRow::total_only(x, p))
        .collect();
    Ok(ExactDistribution {
        kind: WalkKind::Line,
        t,
        rows,
    })
}

/// Half-line walk at θ = π/4 in exact rationals. `p0`/`p1` come from the
/// per-inner sums, `p` from the combined sums.
pub fn half_line_exact_rational(t: u64, kernel: SumKernel) -> Result<ExactDistribution> {
    let coin = Coin::pi_fraction(1, 4)?;
    check_args(&coin, t, &ExactParams::new(Precision::ExactQ2))?;
    let rows = half_line_values(&quarter_pi_trig(), t, kernel)
        .into_iter()
        .map(|(x, p0, p1, p)| ExactRow {
            x,
            p0: Some(p0),
            p1: Some(p1),
            p,
        })
        .collect();
    Ok(ExactDistribution {
        kind: WalkKind::HalfLine,
        t,
        rows,
    })
}

/// Closed-form values kept in double-double, for comparisons below f64
/// resolution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DdRow {
    pub x: i64,
    pub p0: Option<DoubleDouble>,
    pub p1: Option<DoubleDouble>,
    pub p: DoubleDouble,
}

/// Line walk over [−t−1, t−2] in double-double.
pub fn line_exact_dd(coin: &Coin, t: u64, kernel: SumKernel) -> Result<Vec<DdRow>> {
    check_args(coin, t, &ExactParams::new(Precision::DoubleDouble))?;
    Ok(line_values(&dd_trig(coin), t, kernel)
        .into_iter()
        .map(|(x, p)| DdRow {
            x,
            p0: None,
            p1: None,
            p,
        })
        .collect())
}

/// Half-line walk over [0, t] in double-double, both inner states and the
/// combined total.
pub fn half_line_exact_dd(coin: &Coin, t: u64, kernel: SumKernel) -> Result<Vec<DdRow>> {
    check_args(coin, t, &ExactParams::new(Precision::DoubleDouble))?;
    Ok(half_line_values(&dd_trig(coin), t, kernel)
        .into_iter()
        .map(|(x, p0, p1, p)| DdRow {
            x,
            p0: Some(p0),
            p1: Some(p1),
            p,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::{half_line_states, line_states};
    use std::f64::consts::PI;

    fn dd() -> ExactParams {
        ExactParams::default()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn admissible_grid() -> Vec<Coin> {
        (0..20)
            .map(|k| Coin::new(2.0 * PI * (k as f64 + 0.5) / 20.0).unwrap())
            .collect()
    }

    #[test]
    fn line_first_times_at_quarter_pi() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let d1 = line_exact(&coin, 1, dd()).unwrap();
        assert_eq!(
            d1.rows.iter().map(|r| r.x).collect::<Vec<_>>(),
            vec![-2, -1]
        );
        assert!((d1.prob(-2) - 0.5).abs() < 1e-15 && (d1.prob(-1) - 0.5).abs() < 1e-15);
        let d2 = line_exact(&coin, 2, dd()).unwrap();
        for x in -3..=0 {
            assert!((d2.prob(x) - 0.25).abs() < 1e-15, "x = {x}");
        }
        assert!(d2.rows.iter().all(|r| r.p0.is_none() && r.p1.is_none()));
    }

    #[test]
    fn half_line_first_times_at_quarter_pi() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let d = half_line_exact_by_inner(&coin, 1, 1, dd()).unwrap();
        assert!((d.prob(0) - 0.5).abs() < 1e-15 && (d.prob(1) - 0.5).abs() < 1e-15);
        let z = half_line_exact_by_inner(&coin, 1, 0, dd()).unwrap();
        assert!(z.rows.iter().all(|r| r.p == 0.0));
        let d2 = half_line_exact_by_inner(&coin, 2, 1, dd()).unwrap();
        assert!((d2.prob(2) - 0.25).abs() < 1e-15 && (d2.prob(1) - 0.25).abs() < 1e-15);
        let s2 = half_line_exact_split(&coin, 2, dd()).unwrap();
        let origin = s2.row(0).unwrap();
        assert_eq!(origin.p0, origin.p1);
        let ev = half_line_states(coin).nth(2).unwrap().distribution();
        assert!(s2.max_abs_diff_inner(&ev) <= 1e-12);
        let tot = half_line_exact_total(&coin, 1, dd()).unwrap();
        assert!((tot.prob(0) - 0.5).abs() < 1e-15 && (tot.prob(1) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn every_position_is_covered_once() {
        let coin = Coin::new(0.7).unwrap();
        for t in 1..=25u64 {
            let l = line_exact(&coin, t, dd()).unwrap();
            let xs: Vec<i64> = l.rows.iter().map(|r| r.x).collect();
            assert_eq!(
                xs,
                (-(t as i64) - 1..=t as i64 - 2).collect::<Vec<_>>(),
                "t = {t}"
            );
            let h = half_line_exact_total(&coin, t, dd()).unwrap();
            let xs: Vec<i64> = h.rows.iter().map(|r| r.x).collect();
            assert_eq!(xs, (0..=t as i64).collect::<Vec<_>>(), "t = {t}");
        }
    }

    #[test]
    fn completeness_on_angle_grid() {
        for coin in admissible_grid() {
            for t in 1..=60 {
                for d in [
                    line_exact(&coin, t, dd()).unwrap(),
                    half_line_exact_total(&coin, t, dd()).unwrap(),
                ] {
                    assert!(
                        (d.total() - 1.0).abs() <= 1e-9,
                        "θ = {} t = {t}",
                        coin.theta()
                    );
                    assert!(d.min_prob() >= 0.0);
                }
            }
        }
    }

    #[test]
    fn matches_evolution_in_both_precisions() {
        for coin in admissible_grid().into_iter().step_by(3) {
            for ((h, l), t) in half_line_states(coin)
                .zip(line_states(coin))
                .zip(0u64..)
                .skip(1)
                .take(60)
            {
                let (dh, dl) = (h.distribution(), l.distribution());
                let eh = half_line_exact_split(&coin, t, dd()).unwrap();
                let el = line_exact(&coin, t, dd()).unwrap();
                assert!(eh.max_abs_diff(&dh) <= 1e-9 && eh.max_abs_diff_inner(&dh) <= 1e-9);
                assert!(el.max_abs_diff(&dl) <= 1e-9);
                if t <= 30 {
                    let p = ExactParams::new(Precision::Double);
                    let fh = half_line_exact_split(&coin, t, p).unwrap();
                    let fl = line_exact(&coin, t, p).unwrap();
                    assert!(fh.max_abs_diff_inner(&dh) <= 1e-12);
                    assert!(fl.max_abs_diff(&dl) <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn figure_times_at_pi_over_three() {
        let coin = Coin::pi_fraction(1, 3).unwrap();
        for t in [14, 15] {
            let ev = half_line_states(coin)
                .nth(t as usize)
                .unwrap()
                .distribution();
            let ex = half_line_exact_total(&coin, t, dd()).unwrap();
            assert!(ex.max_abs_diff(&ev) <= 1e-12);
        }
    }

    #[test]
    fn total_equals_sum_of_inner_tables() {
        let coin = Coin::new(2.2).unwrap();
        for t in 1..=50 {
            let tot = half_line_exact_total(&coin, t, dd()).unwrap();
            let split = half_line_exact_split(&coin, t, dd()).unwrap();
            assert!(tot.max_abs_diff(&split) <= 1e-12, "t = {t}");
        }
        for t in 1..=40 {
            let e = half_line_exact_rational(t, SumKernel::Jacobi).unwrap();
            for r in &e.rows {
                assert_eq!(&r.p, &(r.p0.clone().unwrap() + r.p1.clone().unwrap()));
            }
        }
    }

    #[test]
    fn even_time_pairs_share_values() {
        let coin = Coin::new(0.3).unwrap();
        for t in (2..=40u64).step_by(2) {
            let d = half_line_exact_total(&coin, t, dd()).unwrap();
            for m in 0..t as i64 / 2 {
                let k = t as i64 - 2 * m;
                assert_eq!(d.prob(k), d.prob(k - 1));
            }
        }
    }

    #[test]
    fn rational_closed_form_equals_oracle() {
        let mut h = Q2Walk::new(WalkKind::HalfLine);
        let mut l = Q2Walk::new(WalkKind::Line);
        for t in 1..=40 {
            h.step();
            l.step();
            let oh = h.distribution().unwrap();
            let ol = l.distribution().unwrap();
            let ch = half_line_exact_rational(t, SumKernel::Jacobi).unwrap();
            let cl = line_exact_rational(t, SumKernel::Jacobi).unwrap();
            for r in &ch.rows {
                let o = oh.row(r.x).unwrap();
                assert_eq!(
                    (&r.p0, &r.p1, &r.p),
                    (&o.p0, &o.p1, &o.p),
                    "t = {t} x = {}",
                    r.x
                );
            }
            for r in &ol.rows {
                assert_eq!(cl.prob(r.x), r.p, "t = {t} x = {}", r.x);
            }
        }
    }

    #[test]
    fn double_double_rows_track_rationals() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        for t in [7u64, 30, 64] {
            let exact = half_line_exact_rational(t, SumKernel::Jacobi).unwrap();
            for row in half_line_exact_dd(&coin, t, SumKernel::Jacobi).unwrap() {
                let want = DoubleDouble::from_rational(&exact.row(row.x).unwrap().p);
                assert!(
                    (row.p - want).abs().to_f64() < 1e-28,
                    "t = {t}, x = {}",
                    row.x
                );
            }
        }
    }

    #[test]
    fn direct_kernel_agrees_at_moderate_times() {
        let coin = Coin::new(1.1).unwrap();
        let direct = ExactParams::default().with_kernel(SumKernel::Direct);
        for t in [5u64, 16, 31, 40] {
            let a = half_line_exact_split(&coin, t, dd()).unwrap();
            let b = half_line_exact_split(&coin, t, direct).unwrap();
            assert!(a.max_abs_diff_inner(&b) <= 1e-12, "t = {t}");
            let a = line_exact(&coin, t, dd()).unwrap();
            let b = line_exact(&coin, t, direct).unwrap();
            assert!(a.max_abs_diff(&b) <= 1e-12, "t = {t}");
        }
        assert_eq!(
            line_exact_rational(20, SumKernel::Direct).unwrap(),
            line_exact_rational(20, SumKernel::Jacobi).unwrap()
        );
    }

    #[test]
    fn large_times_stay_normalized() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let d = half_line_exact_total(&coin, 500, dd()).unwrap();
        assert!((d.total() - 1.0).abs() < 1e-12);
        let coin = Coin::new(0.15).unwrap();
        let d = line_exact(&coin, 800, dd()).unwrap();
        assert!((d.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn argument_errors() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        assert!(matches!(
            line_exact(&coin, 0, dd()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            half_line_exact_by_inner(&coin, 3, 2, dd()),
            Err(Error::InvalidArgument(_))
        ));
        for bad in [
            Coin::new(0.0).unwrap(),
            Coin::pi_fraction(1, 2).unwrap(),
            Coin::pi_fraction(3, 2).unwrap(),
        ] {
            assert!(matches!(line_exact(&bad, 4, dd()), Err(Error::Domain(_))));
            assert!(matches!(
                half_line_exact_total(&bad, 4, dd()),
                Err(Error::Domain(_))
            ));
        }
        let exact = ExactParams::new(Precision::ExactQ2);
        assert!(matches!(
            line_exact(&Coin::new(PI / 4.0).unwrap(), 4, exact),
            Err(Error::Domain(_))
        ));
        let d = line_exact(&coin, 4, exact).unwrap();
        assert_eq!(d.total(), 1.0);
    }

    #[test]
    fn precision_parsing() {
        assert_eq!(
            "doubleDouble".parse::<Precision>().unwrap(),
            Precision::DoubleDouble
        );
        assert_eq!("exact-q2".parse::<Precision>().unwrap(), Precision::ExactQ2);
        assert_eq!("double".parse::<Precision>().unwrap(), Precision::Double);
        assert!("quad".parse::<Precision>().is_err());
    }

    #[test]
    fn exact_row_total() {
        let r = ExactRow::split(3, q(1, 4), q(1, 8));
        assert_eq!(r.p, q(3, 8));
    }
}
