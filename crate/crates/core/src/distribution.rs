use serde::{Deserialize, Serialize};

use crate::state::{HalfLineState, LineState, WalkKind, WalkState};

/// Probabilities this small are reported as exact zero.
pub const ZERO_CUTOFF: f64 = 1e-300;

/// One position's probabilities. `p0`/`p1` are absent on routes that only
/// give the total.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistRow {
    pub x: i64,
    pub p0: Option<f64>,
    pub p1: Option<f64>,
    pub p: f64,
}

impl DistRow {
    pub fn split(x: i64, p0: f64, p1: f64) -> Self {
        DistRow {
            x,
            p0: Some(p0),
            p1: Some(p1),
            p: p0 + p1,
        }
    }

    pub fn total_only(x: i64, p: f64) -> Self {
        DistRow {
            x,
            p0: None,
            p1: None,
            p,
        }
    }
}

/// Position distribution at time `t`, rows sorted by position.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    pub kind: WalkKind,
    pub t: u64,
    pub rows: Vec<DistRow>,
}

fn flush(p: f64) -> f64 {
    if p < ZERO_CUTOFF {
        0.0
    } else {
        p
    }
}

impl Distribution {
    pub fn total(&self) -> f64 {
        self.rows.iter().map(|r| r.p).sum()
    }

    pub fn row(&self, x: i64) -> Option<&DistRow> {
        self.rows
            .binary_search_by_key(&x, |r| r.x)
            .ok()
            .map(|i| &self.rows[i])
    }

    /// Total probability at `x`, zero where no row exists.
    pub fn prob(&self, x: i64) -> f64 {
        self.row(x).map_or(0.0, |r| r.p)
    }

    pub fn prob_inner(&self, x: i64, inner: u8) -> f64 {
        self.row(x)
            .and_then(|r| if inner == 0 { r.p0 } else { r.p1 })
            .unwrap_or(0.0)
    }

    pub fn min_prob(&self) -> f64 {
        self.rows
            .iter()
            .flat_map(|r| [Some(r.p), r.p0, r.p1])
            .flatten()
            .fold(f64::INFINITY, f64::min)
    }

    /// Position of the largest total probability (first on ties).
    pub fn argmax(&self) -> Option<i64> {
        self.rows
            .iter()
            .fold(None::<&DistRow>, |best, r| match best {
                Some(b) if b.p >= r.p => Some(b),
                _ => Some(r),
            })
            .map(|r| r.x)
    }

    /// Largest |Δp| over the union of positions; missing rows count as zero.
    pub fn max_abs_diff(&self, other: &Distribution) -> f64 {
        let mut worst: f64 = 0.0;
        for r in &self.rows {
            worst = worst.max((r.p - other.prob(r.x)).abs());
        }
        for r in &other.rows {
            if self.row(r.x).is_none() {
                worst = worst.max(r.p.abs());
            }
        }
        worst
    }

    /// Largest |Δp0|, |Δp1| over positions where both sides define the split.
    pub fn max_abs_diff_inner(&self, other: &Distribution) -> f64 {
        let mut worst: f64 = 0.0;
        for r in &self.rows {
            if let Some(o) = other.row(r.x) {
                for (a, b) in [(r.p0, o.p0), (r.p1, o.p1)] {
                    if let (Some(a), Some(b)) = (a, b) {
                        worst = worst.max((a - b).abs());
                    }
                }
            }
        }
        worst
    }
}

impl HalfLineState {
    pub fn distribution(&self) -> Distribution {
        let rows = self
            .amps
            .iter()
            .enumerate()
            .map(|(x, a)| DistRow::split(x as i64, flush(a.a0.norm_sqr()), flush(a.a1.norm_sqr())))
            .collect();
        Distribution {
            kind: WalkKind::HalfLine,
            t: self.t,
            rows,
        }
    }
}

impl LineState {
    pub fn distribution(&self) -> Distribution {
        let off = self.offset();
        let rows = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| {
                DistRow::split(
                    i as i64 + off,
                    flush(a.a0.norm_sqr()),
                    flush(a.a1.norm_sqr()),
                )
            })
            .collect();
        Distribution {
            kind: WalkKind::Line,
            t: self.t,
            rows,
        }
    }
}

impl WalkState {
    pub fn distribution(&self) -> Distribution {
        match self {
            WalkState::HalfLine(s) => s.distribution(),
            WalkState::Line(s) => s.distribution(),
        }
    }
}
