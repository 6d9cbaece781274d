use serde::{Deserialize, Serialize};

use super::{DensityKind, LimitDensity};
use crate::coin::Coin;
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::evolution::{evolve_half_line, evolve_line};

/// Kolmogorov–Smirnov distance between X_t/t and its limit law.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KSReport {
    pub t: u64,
    pub theta: f64,
    pub kind: DensityKind,
    pub ks: f64,
}

/// KS distance of the evolved walk at time `t` against the limit CDF.
pub fn ks_distance(coin: &Coin, t: u64, kind: DensityKind) -> Result<KSReport> {
    if t == 0 {
        return Err(Error::InvalidArgument("KS distance needs t ≥ 1".into()));
    }
    let limit = LimitDensity::new(*coin, kind)?;
    let dist = match kind {
        DensityKind::LineTotal => evolve_line(coin, t).distribution(),
        _ => evolve_half_line(coin, t).distribution(),
    };
    ks_distance_from(&dist, &limit)
}

/// KS distance for an already computed distribution. The empirical CDF is
/// right-continuous with a jump at x/t per position; both sides of every
/// jump are compared.
pub fn ks_distance_from(dist: &Distribution, limit: &LimitDensity) -> Result<KSReport> {
    if dist.t == 0 {
        return Err(Error::InvalidArgument("KS distance needs t ≥ 1".into()));
    }
    let t = dist.t as f64;
    let mass = |r: &crate::distribution::DistRow| match limit.kind() {
        DensityKind::HalfInner0 => r.p0.unwrap_or(0.0),
        DensityKind::HalfInner1 => r.p1.unwrap_or(0.0),
        _ => r.p,
    };
    let mut below = 0.0;
    let mut ks: f64 = 0.0;
    for r in &dist.rows {
        let g = limit.cdf_at(r.x as f64 / t);
        let above = below + mass(r);
        ks = ks.max((below - g).abs()).max((above - g).abs());
        below = above;
    }
    ks = ks.max((below - limit.mass()).abs());
    Ok(KSReport {
        t: dist.t,
        theta: limit.coin().theta(),
        kind: limit.kind(),
        ks: ks.clamp(0.0, 1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::DistRow;
    use crate::state::WalkKind;

    #[test]
    fn bounded_for_small_times() {
        let coin = Coin::new(0.8).unwrap();
        for kind in DensityKind::ALL {
            for t in [1, 2, 5, 30] {
                let r = ks_distance(&coin, t, kind).unwrap();
                assert!((0.0..=1.0).contains(&r.ks));
                assert_eq!(r.t, t);
            }
        }
    }

    #[test]
    fn point_mass_against_uniform_like_limit() {
        // all mass at x = 0: the distance is 1 − G(0) or G(0), whichever larger
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let limit = LimitDensity::new(coin, DensityKind::LineTotal).unwrap();
        let dist = Distribution {
            kind: WalkKind::Line,
            t: 10,
            rows: vec![DistRow::total_only(0, 1.0)],
        };
        let g = limit.cdf_at(0.0);
        let r = ks_distance_from(&dist, &limit).unwrap();
        assert!((r.ks - g.max(1.0 - g)).abs() < 1e-12);
    }

    #[test]
    fn shrinks_with_time_at_quarter_pi() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let a = ks_distance(&coin, 50, DensityKind::HalfTotal).unwrap().ks;
        let b = ks_distance(&coin, 400, DensityKind::HalfTotal).unwrap().ks;
        assert!(b < a);
        assert!(b < 0.1);
    }

    #[test]
    fn rejects_bad_input() {
        let coin = Coin::new(0.8).unwrap();
        assert!(ks_distance(&coin, 0, DensityKind::HalfTotal).is_err());
        assert!(matches!(
            ks_distance(&Coin::new(0.0).unwrap(), 5, DensityKind::HalfTotal),
            Err(Error::Domain(_))
        ));
    }
}
