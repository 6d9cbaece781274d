//! Residual suites that cross-check the evolution, closed-form and limit routes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{ks_distance_from, DensityKind, LimitDensity};
use crate::closed_form::{half_line_exact_split, half_line_exact_total, line_exact, ExactParams};
use crate::coin::Coin;
use crate::error::{Error, Result};
use crate::evolution::identities::{
    copy_residual, line_mirror_residual, probability_copy_residual,
};
use crate::evolution::{half_line_states, line_states};

/// Amplitude and probability identities between the walks.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Closed form (double-double) against evolution.
pub const ROUTE_TOL: f64 = 1e-9;
/// Combined-weight total against the sum of the inner-state tables.
pub const SPLIT_TOL: f64 = 1e-12;
/// Mass of each limit density.
pub const NORM_TOL: f64 = 1e-8;

/// KS bound at time t for the convergence suite: 1.2·t^−0.4.
pub fn ks_tolerance(t: u64) -> f64 {
    1.2 * (t.max(1) as f64).powf(-0.4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Suite {
    /// Mirror symmetries of the line walk's amplitudes.
    Lemma1,
    /// Half-line amplitudes as copies of line amplitudes.
    Lemma2,
    /// P(X=x;0) = P(Y=x), P(X=x;1) = P(Y=−x−1).
    Theorem1,
    ExactVsSim,
    InnerSplit,
    LimitNorm,
    KsConvergence,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Theorem1,
        Suite::ExactVsSim,
        Suite::InnerSplit,
        Suite::LimitNorm,
        Suite::KsConvergence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Theorem1 => "theorem1",
            Suite::ExactVsSim => "exactVsSim",
            Suite::InnerSplit => "innerSplit",
            Suite::LimitNorm => "limitNorm",
            Suite::KsConvergence => "ksConvergence",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Outcome {
    Pass,
    Fail,
    /// The suite's formulas exclude this θ (or t); nothing was computed.
    DomainError,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::DomainError => "domainError",
        }
    }
}

impl FromStr for Outcome {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Outcome::Pass, Outcome::Fail, Outcome::DomainError]
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown outcome '{s}'")))
    }
}

/// One (suite, θ, t) result. `pass` holds exactly when the residual is
/// within tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckEntry {
    pub suite: Suite,
    pub theta: f64,
    pub t: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub outcome: Outcome,
}

impl CheckEntry {
    pub fn measured(suite: Suite, theta: f64, t: u64, max_residual: f64, tolerance: f64) -> Self {
        let pass = max_residual <= tolerance;
        CheckEntry {
            suite,
            theta,
            t,
            max_residual,
            tolerance,
            pass,
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        }
    }

    pub fn domain_error(suite: Suite, theta: f64, t: u64, tolerance: f64) -> Self {
        CheckEntry {
            suite,
            theta,
            t,
            max_residual: f64::NAN,
            tolerance,
            pass: false,
            outcome: Outcome::DomainError,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn domain_errors(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks
            .iter()
            .filter(|c| c.outcome == Outcome::DomainError)
    }

    /// Largest residual per suite among measured entries.
    pub fn worst(&self, suite: Suite) -> Option<f64> {
        self.checks
            .iter()
            .filter(|c| c.suite == suite && c.outcome != Outcome::DomainError)
            .map(|c| c.max_residual)
            .reduce(f64::max)
    }
}

/// Runs each selected suite for every θ and t. Excluded angles produce
/// domain-error entries rather than errors.
pub fn run_checks(suite: Suite, thetas: &[Coin], ts: &[u64]) -> VerificationReport {
    let mut times = ts.to_vec();
    times.sort_unstable();
    times.dedup();
    let units: Vec<(Suite, Coin)> = suite
        .expand()
        .into_iter()
        .flat_map(|s| thetas.iter().map(move |c| (s, *c)))
        .collect();
    let checks = units
        .par_iter()
        .map(|(s, coin)| run_unit(*s, coin, &times))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerificationReport { checks }
}

fn run_unit(suite: Suite, coin: &Coin, times: &[u64]) -> Vec<CheckEntry> {
    let theta = coin.theta();
    let tol = match suite {
        Suite::Lemma1 | Suite::Lemma2 | Suite::Theorem1 => IDENTITY_TOL,
        Suite::ExactVsSim => ROUTE_TOL,
        Suite::InnerSplit => SPLIT_TOL,
        Suite::LimitNorm => NORM_TOL,
        Suite::KsConvergence | Suite::All => f64::NAN,
    };
    let tol_at = |t: u64| {
        if suite == Suite::KsConvergence {
            ks_tolerance(t)
        } else {
            tol
        }
    };
    let excluded = match suite {
        // the identities are stated for θ ≠ 0, π
        Suite::Lemma1 | Suite::Lemma2 | Suite::Theorem1 => coin.sin_vanishes(),
        _ => coin.is_degenerate(),
    };
    if suite == Suite::LimitNorm {
        if excluded {
            return vec![CheckEntry::domain_error(suite, theta, 0, tol)];
        }
        return vec![CheckEntry::measured(
            suite,
            theta,
            0,
            limit_norm_residual(coin),
            tol,
        )];
    }
    if excluded {
        return times
            .iter()
            .map(|&t| CheckEntry::domain_error(suite, theta, t, tol_at(t)))
            .collect();
    }
    let needs_t1 = matches!(
        suite,
        Suite::ExactVsSim | Suite::InnerSplit | Suite::KsConvergence
    );
    let mut out = Vec::with_capacity(times.len());
    if suite == Suite::InnerSplit {
        for &t in times {
            out.push(if t == 0 {
                CheckEntry::domain_error(suite, theta, t, tol)
            } else {
                let r = inner_split_residual(coin, t).unwrap_or(f64::INFINITY);
                CheckEntry::measured(suite, theta, t, r, tol)
            });
        }
        return out;
    }
    let Some(&last) = times.last() else {
        return out;
    };
    let limit = LimitDensity::new(*coin, DensityKind::HalfTotal).ok();
    let mut wanted = times.iter().copied().peekable();
    for (t, (h, l)) in half_line_states(*coin)
        .zip(line_states(*coin))
        .enumerate()
        .take(last as usize + 1)
    {
        let t = t as u64;
        if wanted.peek() != Some(&t) {
            continue;
        }
        wanted.next();
        if needs_t1 && t == 0 {
            out.push(CheckEntry::domain_error(suite, theta, t, tol_at(t)));
            continue;
        }
        let residual = match suite {
            Suite::Lemma1 => Ok(line_mirror_residual(&l, coin)),
            Suite::Lemma2 => Ok(copy_residual(&h, &l)),
            Suite::Theorem1 => Ok(probability_copy_residual(
                &h.distribution(),
                &l.distribution(),
            )),
            Suite::ExactVsSim => exact_vs_sim_residual(coin, t, &h, &l),
            Suite::KsConvergence => {
                let limit = limit.as_ref().expect("admissible θ");
                ks_distance_from(&h.distribution(), limit).map(|r| r.ks)
            }
            _ => unreachable!("handled above"),
        };
        let r = residual.unwrap_or(f64::INFINITY);
        out.push(CheckEntry::measured(suite, theta, t, r, tol_at(t)));
    }
    out
}

fn exact_vs_sim_residual(
    coin: &Coin,
    t: u64,
    h: &crate::state::HalfLineState,
    l: &crate::state::LineState,
) -> Result<f64> {
    let params = ExactParams::default();
    let (dh, dl) = (h.distribution(), l.distribution());
    let eh = half_line_exact_split(coin, t, params)?;
    let el = line_exact(coin, t, params)?;
    Ok(eh
        .max_abs_diff(&dh)
        .max(eh.max_abs_diff_inner(&dh))
        .max(el.max_abs_diff(&dl)))
}

fn inner_split_residual(coin: &Coin, t: u64) -> Result<f64> {
    let params = ExactParams::default();
    let total = half_line_exact_total(coin, t, params)?;
    let split = half_line_exact_split(coin, t, params)?;
    Ok(total.max_abs_diff(&split))
}

fn limit_norm_residual(coin: &Coin) -> f64 {
    let mass = |k| {
        LimitDensity::new(*coin, k)
            .map(|d| d.mass())
            .unwrap_or(f64::NAN)
    };
    let whole = [DensityKind::LineTotal, DensityKind::HalfTotal]
        .into_iter()
        .map(|k| (mass(k) - 1.0).abs())
        .fold(0.0, f64::max);
    let parts = (mass(DensityKind::HalfInner0) + mass(DensityKind::HalfInner1) - 1.0).abs();
    whole.max(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coin(s: &str) -> Coin {
        Coin::from_angle(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn theorem1_at_first_step() {
        let r = run_checks(Suite::Theorem1, &[coin("pi/4")], &[1]);
        assert_eq!(r.checks.len(), 1);
        assert!(r.checks[0].pass && r.checks[0].max_residual <= 1e-15);
    }

    #[test]
    fn lemma1_at_second_step() {
        let r = run_checks(Suite::Lemma1, &[coin("pi/4")], &[2]);
        assert!(r.all_passed());
        assert!(r.checks[0].max_residual <= 1e-15);
    }

    #[test]
    fn excluded_angle_gives_domain_entry() {
        let r = run_checks(Suite::ExactVsSim, &[coin("pi/2")], &[10]);
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].outcome, Outcome::DomainError);
        assert!(!r.checks[0].pass);
        assert_eq!(r.domain_errors().count(), 1);
        // the identities only exclude sin θ = 0
        let r = run_checks(Suite::Lemma2, &[coin("pi/2")], &[10]);
        assert!(r.all_passed());
        let r = run_checks(Suite::Lemma2, &[coin("pi")], &[10]);
        assert_eq!(r.checks[0].outcome, Outcome::DomainError);
    }

    #[test]
    fn all_suites_pass_on_small_grid() {
        let thetas = [coin("pi/6"), coin("pi/4"), coin("pi/3"), coin("1.0")];
        let ts: Vec<u64> = (1..=40).collect();
        let r = run_checks(Suite::All, &thetas, &ts);
        for c in &r.checks {
            assert!(c.pass, "{c:?}");
        }
        // 6 per-time suites × 4 θ × 40 t, plus one limitNorm entry per θ
        assert_eq!(r.checks.len(), 6 * 4 * 40 + 4);
        assert!(r.worst(Suite::Lemma2).unwrap() < 1e-13);
    }

    #[test]
    fn entries_are_ordered_by_suite_theta_time() {
        let r = run_checks(Suite::Lemma1, &[coin("1.0"), coin("pi/4")], &[5, 2, 5]);
        let key: Vec<(f64, u64)> = r.checks.iter().map(|c| (c.theta, c.t)).collect();
        assert_eq!(
            key,
            vec![
                (1.0, 2),
                (1.0, 5),
                (std::f64::consts::FRAC_PI_4, 2),
                (std::f64::consts::FRAC_PI_4, 5)
            ]
        );
    }

    #[test]
    fn ks_tolerance_shrinks() {
        assert!((ks_tolerance(1) - 1.2).abs() < 1e-15);
        assert!(ks_tolerance(100) > ks_tolerance(200));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
