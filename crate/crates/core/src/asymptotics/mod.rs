//! Limit densities of X_t/t, their CDFs and finite-time approximations.

mod ks;
pub mod quad;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coin::Coin;
use crate::error::{Error, Result};
use crate::numeric::DoubleDouble;

pub use ks::{ks_distance, ks_distance_from, KSReport};

/// Target absolute error of [`LimitDensity::cdf_at`].
pub const CDF_TOL: f64 = 1e-10;

/// Which limit law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DensityKind {
    /// Y_t/t for the line walk, on (−|c|, |c|).
    LineTotal,
    /// X_t/t on the half line restricted to inner state 0.
    HalfInner0,
    /// X_t/t on the half line restricted to inner state 1.
    HalfInner1,
    /// X_t/t on the half line.
    HalfTotal,
}

impl DensityKind {
    pub const ALL: [DensityKind; 4] = [
        DensityKind::LineTotal,
        DensityKind::HalfInner0,
        DensityKind::HalfInner1,
        DensityKind::HalfTotal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DensityKind::LineTotal => "lineTotal",
            DensityKind::HalfInner0 => "halfInner0",
            DensityKind::HalfInner1 => "halfInner1",
            DensityKind::HalfTotal => "halfTotal",
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DensityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DensityKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown density kind '{s}'")))
    }
}

/// A limit density for one coin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitDensity {
    coin: Coin,
    kind: DensityKind,
    a: f64,
    s: f64,
    a_dd: DoubleDouble,
}

impl LimitDensity {
    pub fn new(coin: Coin, kind: DensityKind) -> Result<Self> {
        coin.require_formula_domain()?;
        Ok(LimitDensity {
            coin,
            kind,
            a: coin.c().abs(),
            s: coin.s().abs(),
            a_dd: coin.c_dd().abs(),
        })
    }

    pub fn coin(&self) -> &Coin {
        &self.coin
    }

    pub fn kind(&self) -> DensityKind {
        self.kind
    }

    /// Support as a half-open interval [lo, |c|) (open at −|c| for the line).
    pub fn support(&self) -> (f64, f64) {
        match self.kind {
            DensityKind::LineTotal => (-self.a, self.a),
            _ => (0.0, self.a),
        }
    }

    /// Density at y; zero off the support and at ±|c|.
    pub fn density_at(&self, y: f64) -> f64 {
        let (lo, hi) = self.support();
        let inside = match self.kind {
            DensityKind::LineTotal => y > lo && y < hi,
            _ => y >= lo && y < hi,
        };
        if !inside {
            return 0.0;
        }
        // c² − y² loses digits near the edge unless |c| keeps its low part
        let y_dd = DoubleDouble::from_f64(y);
        let root = ((self.a_dd - y_dd) * (self.a_dd + y_dd)).to_f64().sqrt();
        let s = self.s;
        match self.kind {
            DensityKind::LineTotal | DensityKind::HalfInner0 => s / (PI * (1.0 + y) * root),
            DensityKind::HalfInner1 => s / (PI * (1.0 - y) * root),
            DensityKind::HalfTotal => 2.0 * s / (PI * (1.0 - y * y) * root),
        }
    }

    /// The density after y = |c| sin φ, which is bounded on the support.
    fn angular(&self, phi: f64) -> f64 {
        let (s, a) = (self.s, self.a);
        let sn = phi.sin();
        match self.kind {
            DensityKind::LineTotal | DensityKind::HalfInner0 => s / (PI * (1.0 + a * sn)),
            DensityKind::HalfInner1 => s / (PI * (1.0 - a * sn)),
            DensityKind::HalfTotal => 2.0 * s / (PI * (1.0 - a * a * sn * sn)),
        }
    }

    /// ∫_{−∞}^x density, by adaptive quadrature in φ.
    pub fn cdf_at(&self, x: f64) -> f64 {
        let (lo, hi) = self.support();
        let phi_lo = if lo < 0.0 { -FRAC_PI_2 } else { 0.0 };
        if x <= lo {
            return 0.0;
        }
        let phi = if x >= hi {
            FRAC_PI_2
        } else {
            (x / self.a).clamp(-1.0, 1.0).asin()
        };
        quad::integrate(|p| self.angular(p), phi_lo, phi, CDF_TOL * 1e-2).clamp(0.0, 1.0)
    }

    /// Total mass of the density.
    pub fn mass(&self) -> f64 {
        self.cdf_at(self.support().1)
    }
}

/// Which finite-time approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ApproxKind {
    Inner0,
    Inner1,
    Total,
}

impl FromStr for ApproxKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "inner0" | "0" => Ok(ApproxKind::Inner0),
            "inner1" | "1" => Ok(ApproxKind::Inner1),
            "total" => Ok(ApproxKind::Total),
            _ => Err(Error::InvalidArgument(format!(
                "unknown approximation kind '{s}'"
            ))),
        }
    }
}

impl fmt::Display for ApproxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ApproxKind::Inner0 => "inner0",
            ApproxKind::Inner1 => "inner1",
            ApproxKind::Total => "total",
        })
    }
}

/// Density-based approximation of P(X_t = x) (or its inner parts) on the
/// half line; zero outside 0 ≤ x < |c|t.
pub fn approx_prob(coin: &Coin, t: u64, x: i64, kind: ApproxKind) -> f64 {
    let (a, s) = (coin.c().abs(), coin.s().abs());
    let (t, x) = (t as f64, x as f64);
    if t <= 0.0 || x < 0.0 || x >= a * t {
        return 0.0;
    }
    let root = ((a * t - x) * (a * t + x)).sqrt();
    match kind {
        ApproxKind::Inner0 => s * t / (PI * (t + x) * root),
        ApproxKind::Inner1 => s * t / (PI * (t - x) * root),
        ApproxKind::Total => 2.0 * s * t * t / (PI * (t - x) * (t + x) * root),
    }
}
