//! Unitary evolution: coin at every site, then the shift.

pub mod identities;

use num_complex::Complex64;

use crate::coin::Coin;
use crate::error::{Error, Result};
use crate::state::{AmplitudePair, HalfLineState, LineState, WalkKind, WalkState};

/// Amplitude components below this are set to zero. Their probabilities sit
/// under the output cutoff, and subnormal arithmetic is very slow.
pub const FLUSH: f64 = 1e-150;

#[inline]
fn flushed(z: Complex64) -> Complex64 {
    let f = |v: f64| if v.abs() < FLUSH { 0.0 } else { v };
    Complex64::new(f(z.re), f(z.im))
}

#[inline]
fn coin_step(coin: &Coin, pair: &AmplitudePair) -> (Complex64, Complex64) {
    let (u0, u1) = coin.apply(pair.a0, pair.a1);
    (flushed(u0), flushed(u1))
}

/// One step on the half line. A left-mover at the origin turns into a
/// right-mover in place; everything else shifts homogeneously.
pub fn step_half_line(state: &HalfLineState, coin: &Coin) -> HalfLineState {
    let mut next = vec![AmplitudePair::ZERO; state.amps.len() + 1];
    for (x, pair) in state.amps.iter().enumerate() {
        let (u0, u1) = coin_step(coin, pair);
        if x == 0 {
            next[0].a1 += u0;
        } else {
            next[x - 1].a0 += u0;
        }
        next[x + 1].a1 += u1;
    }
    HalfLineState {
        t: state.t + 1,
        amps: next,
    }
}

/// One step on the line: |0⟩ moves left, |1⟩ moves right.
pub fn step_line(state: &LineState, coin: &Coin) -> LineState {
    // old index i (position i + off) maps to new index i (position - 1) and
    // i + 2 (position + 1) under the new offset off - 1
    let mut next = vec![AmplitudePair::ZERO; state.amps.len() + 2];
    for (i, pair) in state.amps.iter().enumerate() {
        let (u0, u1) = coin_step(coin, pair);
        next[i].a0 = u0;
        next[i + 2].a1 = u1;
    }
    LineState {
        t: state.t + 1,
        amps: next,
    }
}

/// Successive half-line states from the initial one, starting at t = 0.
pub fn half_line_states(coin: Coin) -> impl Iterator<Item = HalfLineState> {
    std::iter::successors(Some(HalfLineState::initial(&coin)), move |s| {
        Some(step_half_line(s, &coin))
    })
}

/// Successive line states from the delocalized start, starting at t = 0.
pub fn line_states(coin: Coin) -> impl Iterator<Item = LineState> {
    std::iter::successors(Some(LineState::initial(&coin)), move |s| {
        Some(step_line(s, &coin))
    })
}

pub fn evolve_half_line(coin: &Coin, steps: u64) -> HalfLineState {
    let mut s = HalfLineState::initial(coin);
    for _ in 0..steps {
        s = step_half_line(&s, coin);
    }
    s
}

pub fn evolve_line(coin: &Coin, steps: u64) -> LineState {
    let mut s = LineState::initial(coin);
    for _ in 0..steps {
        s = step_line(&s, coin);
    }
    s
}

/// Evolve the chosen walk from its initial state.
pub fn evolve(kind: WalkKind, coin: &Coin, steps: i64) -> Result<WalkState> {
    let steps = u64::try_from(steps)
        .map_err(|_| Error::InvalidArgument(format!("negative step count {steps}")))?;
    Ok(match kind {
        WalkKind::HalfLine => WalkState::HalfLine(evolve_half_line(coin, steps)),
        WalkKind::Line => WalkState::Line(evolve_line(coin, steps)),
    })
}
