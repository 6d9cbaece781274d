//! Residuals of the exact identities linking the two walks.
//!
//! Each function returns the largest absolute deviation at one time step; a
//! correct evolution gives values at rounding level.

use num_complex::Complex64;

use crate::coin::Coin;
use crate::distribution::Distribution;
use crate::state::{HalfLineState, LineState};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Mirror symmetries of the line walk's amplitudes (γ = |0⟩, δ = |1⟩ parts).
///
/// Even t: δ(x−1) = δ(−x), sγ(x−1) − cδ(x−1) = −sγ(−x−2) + cδ(−x−2).
/// Odd t:  δ(x−1) = −δ(−x), sγ(x−1) − cδ(x−1) = sγ(−x−2) − cδ(−x−2).
pub fn line_mirror_residual(state: &LineState, coin: &Coin) -> f64 {
    let (c, s) = (coin.c(), coin.s());
    let sign = if state.t().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    let mix = |x: i64| {
        let p = state.amp(x);
        p.a0 * s - p.a1 * c
    };
    let mut worst: f64 = 0.0;
    for x in 0..=(state.t() as i64 + 2) {
        let d = state.amp(x - 1).a1 - state.amp(-x).a1 * sign;
        let m = mix(x - 1) + mix(-x - 2) * sign;
        worst = worst.max(d.norm()).max(m.norm());
    }
    worst
}

/// Copy relations expressing half-line amplitudes (α, β) through line
/// amplitudes (γ, δ), with the parity-dependent ±i pattern.
pub fn copy_residual(half: &HalfLineState, line: &LineState) -> f64 {
    assert_eq!(half.t(), line.t(), "states must be at the same time");
    let g = |x: i64| line.amp(x).a0;
    let d = |x: i64| line.amp(x).a1;
    let even = half.t().is_multiple_of(2);
    let mut worst: f64 = 0.0;
    for x in 0..=(half.t() as i64 / 2 + 1) {
        let (e, o) = (2 * x, 2 * x + 1);
        let expect = if even {
            [
                g(e) - I * d(e),
                d(-e - 1) + I * g(-e - 1),
                d(o) + I * g(o),
                -g(-e - 2) + I * d(-e - 2),
            ]
        } else {
            [
                d(e) + I * g(e),
                g(-e - 1) - I * d(-e - 1),
                g(o) - I * d(o),
                -d(-e - 2) - I * g(-e - 2),
            ]
        };
        let got = [
            half.amp(e).a0,
            half.amp(e).a1,
            half.amp(o).a0,
            half.amp(o).a1,
        ];
        for (a, b) in got.iter().zip(expect.iter()) {
            worst = worst.max((a - b).norm());
        }
    }
    worst
}

/// P(X=x;0) = P(Y=x), P(X=x;1) = P(Y=−x−1) and their sum, over x = 0..=t.
pub fn probability_copy_residual(half: &Distribution, line: &Distribution) -> f64 {
    let mut worst: f64 = 0.0;
    for x in 0..=(half.t as i64) {
        let p0 = half.prob_inner(x, 0);
        let p1 = half.prob_inner(x, 1);
        let right = line.prob(x);
        let left = line.prob(-x - 1);
        worst = worst
            .max((p0 - right).abs())
            .max((p1 - left).abs())
            .max((half.prob(x) - (left + right)).abs());
    }
    worst
}

/// Adjacent-pair equalities of the line distribution:
/// P(t−2m) = P(t−2m−1) and P(−(t−2m)−1) = P(−(t−2m)).
pub fn line_pair_residual(line: &Distribution) -> f64 {
    let t = line.t as i64;
    let mut worst: f64 = 0.0;
    for m in 0..=(t / 2 + 1) {
        let k = t - 2 * m;
        worst = worst
            .max((line.prob(k) - line.prob(k - 1)).abs())
            .max((line.prob(-k - 1) - line.prob(-k)).abs());
    }
    worst
}
