//! Exact evolution at θ = π/4 in ℚ(√2) + iℚ(√2).

use num_rational::BigRational;

use super::qfield::{QFieldComplex, QSqrt2};
use super::{ExactDistribution, ExactRow};
use crate::error::{Error, Result};
use crate::state::WalkKind;

/// Largest time the oracle accepts; entry sizes grow linearly in t.
pub const ORACLE_MAX_T: u64 = 200;

#[derive(Clone, Debug)]
struct Pair {
    a0: QFieldComplex,
    a1: QFieldComplex,
}

impl Pair {
    fn zero() -> Self {
        Pair {
            a0: QFieldComplex::zero(),
            a1: QFieldComplex::zero(),
        }
    }

    /// Apply the π/4 coin: (√2/2)(a0 + a1, a0 − a1).
    fn coin(&self) -> (QFieldComplex, QFieldComplex) {
        let h = QSqrt2::half_sqrt2();
        (
            (&self.a0 + &self.a1).scale(&h),
            (&self.a0 - &self.a1).scale(&h),
        )
    }
}

/// Exact walk at θ = π/4, stepped one time unit at a time.
///
/// The half-line start drops the global phase e^{−iπ/4}, which leaves the
/// probabilities unchanged and keeps every amplitude in the field.
#[derive(Clone, Debug)]
pub struct Q2Walk {
    kind: WalkKind,
    t: u64,
    amps: Vec<Pair>,
}

impl Q2Walk {
    pub fn new(kind: WalkKind) -> Self {
        let h = QSqrt2::half_sqrt2();
        let amps = match kind {
            // (√2/2)(|0⟩ + i|1⟩) at the origin
            WalkKind::HalfLine => vec![Pair {
                a0: QFieldComplex::new(h.clone(), QSqrt2::zero()),
                a1: QFieldComplex::new(QSqrt2::zero(), h),
            }],
            // (c/√2, s/√2) = (1/2, 1/2) at x = −1 and x = 0
            WalkKind::Line => {
                let half = QFieldComplex::new(
                    QSqrt2::rational(BigRational::new(1.into(), 2.into())),
                    QSqrt2::zero(),
                );
                let p = Pair {
                    a0: half.clone(),
                    a1: half,
                };
                vec![p.clone(), p]
            }
        };
        Q2Walk { kind, t: 0, amps }
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn step(&mut self) {
        let extra = match self.kind {
            WalkKind::HalfLine => 1,
            WalkKind::Line => 2,
        };
        let mut next = vec![Pair::zero(); self.amps.len() + extra];
        for (i, p) in self.amps.iter().enumerate() {
            let (u0, u1) = p.coin();
            match self.kind {
                WalkKind::HalfLine => {
                    if i == 0 {
                        next[0].a1 = &next[0].a1 + &u0;
                    } else {
                        next[i - 1].a0 = &next[i - 1].a0 + &u0;
                    }
                    next[i + 1].a1 = &next[i + 1].a1 + &u1;
                }
                WalkKind::Line => {
                    next[i].a0 = u0;
                    next[i + 2].a1 = u1;
                }
            }
        }
        self.amps = next;
        self.t += 1;
    }

    /// Exact probabilities over the whole state window.
    pub fn distribution(&self) -> Result<ExactDistribution> {
        let offset = match self.kind {
            WalkKind::HalfLine => 0,
            WalkKind::Line => -(self.t as i64) - 1,
        };
        let prob = |z: &QFieldComplex| -> Result<BigRational> {
            z.norm_sqr().as_rational().cloned().ok_or_else(|| {
                Error::Precision("oracle probability left ℚ; the walk is not at π/4".into())
            })
        };
        let rows = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, p)| {
                Ok(ExactRow::split(
                    i as i64 + offset,
                    prob(&p.a0)?,
                    prob(&p.a1)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactDistribution {
            kind: self.kind,
            t: self.t,
            rows,
        })
    }
}

/// Exact distribution at θ = π/4 by evolution in ℚ(√2) + iℚ(√2).
pub fn q2_oracle_distribution(kind: WalkKind, t: u64) -> Result<ExactDistribution> {
    if t > ORACLE_MAX_T {
        return Err(Error::Resource(format!(
            "exact oracle limited to t ≤ {ORACLE_MAX_T}, got {t}"
        )));
    }
    let mut w = Q2Walk::new(kind);
    for _ in 0..t {
        w.step();
    }
    w.distribution()
}
