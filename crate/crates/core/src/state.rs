//! Walk states: dense amplitude windows over the occupied positions.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::coin::Coin;

/// Amplitudes of inner states |0⟩ and |1⟩ at one site.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AmplitudePair {
    pub a0: Complex64,
    pub a1: Complex64,
}

impl AmplitudePair {
    pub const ZERO: Self = AmplitudePair {
        a0: Complex64::new(0.0, 0.0),
        a1: Complex64::new(0.0, 0.0),
    };

    pub fn new(a0: Complex64, a1: Complex64) -> Self {
        AmplitudePair { a0, a1 }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a0.norm_sqr() + self.a1.norm_sqr()
    }
}

/// Half-line walk at time `t`; `amps[x]` for x = 0..=t.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfLineState {
    pub(crate) t: u64,
    pub(crate) amps: Vec<AmplitudePair>,
}

impl HalfLineState {
    /// Localized start `e^{-iθ}(|0⟩ + i|1⟩)/√2` at the origin.
    pub fn initial(coin: &Coin) -> Self {
        let phase = Complex64::from_polar(1.0, -coin.theta());
        Self::localized(phase)
    }

    /// Same start without the global phase; yields the same distribution.
    pub fn initial_unphased() -> Self {
        Self::localized(Complex64::new(1.0, 0.0))
    }

    fn localized(phase: Complex64) -> Self {
        let a0 = phase * FRAC_1_SQRT_2;
        let a1 = phase * Complex64::new(0.0, FRAC_1_SQRT_2);
        HalfLineState {
            t: 0,
            amps: vec![AmplitudePair::new(a0, a1)],
        }
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn amplitudes(&self) -> &[AmplitudePair] {
        &self.amps
    }

    /// Amplitude at position `x`, zero outside the window.
    pub fn amp(&self, x: i64) -> AmplitudePair {
        usize::try_from(x)
            .ok()
            .and_then(|i| self.amps.get(i).copied())
            .unwrap_or(AmplitudePair::ZERO)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(AmplitudePair::norm_sqr).sum()
    }
}

/// Line walk at time `t`; `amps[i]` is position `i + offset`, offset = −t−1.
#[derive(Clone, Debug, PartialEq)]
pub struct LineState {
    pub(crate) t: u64,
    pub(crate) amps: Vec<AmplitudePair>,
}

impl LineState {
    /// Delocalized start `(|−1⟩ + |0⟩) ⊗ (cos θ|0⟩ + sin θ|1⟩)/√2`.
    pub fn initial(coin: &Coin) -> Self {
        let pair = AmplitudePair::new(
            Complex64::new(coin.c() * FRAC_1_SQRT_2, 0.0),
            Complex64::new(coin.s() * FRAC_1_SQRT_2, 0.0),
        );
        LineState {
            t: 0,
            amps: vec![pair, pair],
        }
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Position held by `amps[0]`.
    pub fn offset(&self) -> i64 {
        -(self.t as i64) - 1
    }

    pub fn amplitudes(&self) -> &[AmplitudePair] {
        &self.amps
    }

    pub fn amp(&self, x: i64) -> AmplitudePair {
        usize::try_from(x - self.offset())
            .ok()
            .and_then(|i| self.amps.get(i).copied())
            .unwrap_or(AmplitudePair::ZERO)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(AmplitudePair::norm_sqr).sum()
    }

    /// Largest |imaginary part| over all amplitudes.
    pub fn max_imaginary(&self) -> f64 {
        self.amps
            .iter()
            .flat_map(|p| [p.a0.im.abs(), p.a1.im.abs()])
            .fold(0.0, f64::max)
    }
}

/// Which walk a state or distribution belongs to.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    #[serde(rename = "halfline")]
    HalfLine,
    Line,
}

impl std::fmt::Display for WalkKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WalkKind::HalfLine => "halfline",
            WalkKind::Line => "line",
        })
    }
}

/// Either walk's state, as returned by [`crate::evolution::evolve`].
#[derive(Clone, Debug, PartialEq)]
pub enum WalkState {
    HalfLine(HalfLineState),
    Line(LineState),
}

impl WalkState {
    pub fn kind(&self) -> WalkKind {
        match self {
            WalkState::HalfLine(_) => WalkKind::HalfLine,
            WalkState::Line(_) => WalkKind::Line,
        }
    }

    pub fn t(&self) -> u64 {
        match self {
            WalkState::HalfLine(s) => s.t,
            WalkState::Line(s) => s.t,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        match self {
            WalkState::HalfLine(s) => s.norm_sqr(),
            WalkState::Line(s) => s.norm_sqr(),
        }
    }
}
