//! Generic evaluation of the binomial double sums.
//!
//! Every positive probability of either walk has the form
//!
//! ```text
//! c^{2(t-1)}/2 · Σ_{j1,j2=1..m} (−s²/c²)^{j1+j2} b(j1) b(j2) · w(j1, j2)
//! b(j) = binom(m−1, j−1) · binom(t−m−1, j−1)
//! ```
//!
//! with a weight `w` that depends on the branch. [`SumKernel::Direct`] adds
//! the terms literally. [`SumKernel::Jacobi`] uses that each weight splits
//! into products of single sums, and that those single sums are Jacobi
//! polynomials in `x = c² − s²`. With `n = t − m`:
//!
//! ```text
//! u = P_{m−1}^{(0, n−m)}(x),  v = c² P_{m−2}^{(1, n−m+1)}(x)
//! right:  ½ s² c^{2(n−m−1)} (s² v² + c² u²)
//! left:   the same with v → w = (n(v + u) − m u)/m
//! ```
//!
//! The three-term recurrence is free of the alternating-sign cancellation
//! that makes the literal sum lose ~30 digits by t = 100.

use super::binomial::BinomialTable;
use super::SumKernel;
use crate::numeric::{CompensatedSum, Scalar};

/// Rescale recurrences once magnitudes pass 2^RESCALE_AT.
const RESCALE_AT: i64 = 256;

/// cos²θ and sin²θ in the working number type.
#[derive(Clone, Debug)]
pub(crate) struct Trig<S> {
    pub c2: S,
    pub s2: S,
}

/// Which bracket multiplies the binomial products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Weight {
    /// (m − j1 − j2)·m/(j1 j2) + 1/s²
    Right,
    /// (n − j1 − j2)·n/(j1 j2) + 1/s²
    Left,
    /// Right + Left: (m² + n² − (j1+j2)(m+n))/(j1 j2) + 2/s²
    Combined,
}

/// `mant · 2^exp`, used to keep long products and recurrences in range.
#[derive(Clone, Debug)]
struct Scaled<S> {
    mant: S,
    exp: i64,
}

impl<S: Scalar> Scaled<S> {
    fn zero() -> Self {
        Scaled {
            mant: S::zero(),
            exp: i64::MIN / 4,
        }
    }

    fn renormalize(&mut self) {
        let e = self.mant.exponent2();
        if e.abs() > RESCALE_AT {
            self.mant = self.mant.clone().scale2(-e);
            self.exp += e;
        }
    }

    fn is_zero(&self) -> bool {
        self.mant.to_f64() == 0.0 && self.mant.exponent2() == 0 && self.exp == i64::MIN / 4
    }

    /// Mantissa expressed at exponent `e` (≥ self.exp).
    fn at(&self, e: i64) -> S {
        if self.is_zero() {
            S::zero()
        } else {
            self.mant.clone().scale2(self.exp - e)
        }
    }
}

fn pow_scaled<S: Scalar>(base: &S, mut k: u64) -> Scaled<S> {
    let mut acc = Scaled {
        mant: S::one(),
        exp: 0,
    };
    let mut b = Scaled {
        mant: base.clone(),
        exp: 0,
    };
    b.renormalize();
    while k > 0 {
        if k & 1 == 1 {
            acc.mant = acc.mant * b.mant.clone();
            acc.exp += b.exp;
            acc.renormalize();
        }
        k >>= 1;
        if k > 0 {
            b.mant = b.mant.clone() * b.mant.clone();
            b.exp *= 2;
            b.renormalize();
        }
    }
    acc
}

/// Jacobi polynomial P_deg^{(alpha, beta)}(x) by forward recurrence.
fn jacobi<S: Scalar>(deg: i64, alpha: i64, beta: i64, x: &S) -> Scaled<S> {
    if deg < 0 {
        return Scaled::zero();
    }
    let mut prev = S::one();
    if deg == 0 {
        return Scaled { mant: prev, exp: 0 };
    }
    let int = |v: i128| S::from_i64(v as i64);
    let (a, b) = (alpha as i128, beta as i128);
    let two = S::from_i64(2);
    let mut cur = int(a + 1) + int(a + b + 2) * (x.clone() - S::one()) / two;
    let mut exp = 0i64;
    for n in 2..=deg as i128 {
        let k = 2 * n + a + b;
        let ca = int(2 * n * (n + a + b) * (k - 2));
        let cb = int(k - 1) * (int(k * (k - 2)) * x.clone() + int(a * a - b * b));
        let cc = int(2 * (n + a - 1) * (n + b - 1) * k);
        let next = (cb * cur.clone() - cc * prev) / ca;
        prev = cur;
        cur = next;
        let e = cur.exponent2();
        if e > RESCALE_AT {
            cur = cur.scale2(-e);
            prev = prev.scale2(-e);
            exp += e;
        }
    }
    Scaled { mant: cur, exp }
}

/// c^{2(t−1)}/2: the frontier value, shared by every branch as prefactor.
pub(crate) fn edge_value<S: Scalar>(trig: &Trig<S>, t: u64) -> S {
    let p = pow_scaled(&trig.c2, t - 1);
    (p.mant / S::from_i64(2)).scale2(p.exp)
}

/// The branch value at time `t`, index `m` (1 ≤ m ≤ t/2).
pub(crate) fn branch_value<S: CompensatedSum>(
    trig: &Trig<S>,
    t: u64,
    m: u64,
    weight: Weight,
    kernel: SumKernel,
    table: Option<&BinomialTable>,
) -> S {
    debug_assert!(m >= 1 && 2 * m <= t);
    match kernel {
        SumKernel::Jacobi => jacobi_branch(trig, t as i64, m as i64, weight),
        SumKernel::Direct => {
            let owned;
            let table = match table {
                Some(tb) if tb.n_max() as u64 >= t => tb,
                _ => {
                    owned = BinomialTable::new(t as usize);
                    &owned
                }
            };
            direct_branch(trig, t as i64, m as i64, weight, table)
        }
    }
}

fn jacobi_branch<S: Scalar>(trig: &Trig<S>, t: i64, m: i64, weight: Weight) -> S {
    let n = t - m;
    let x = trig.c2.clone() - trig.s2.clone();
    let u = jacobi(m - 1, 0, n - m, &x);
    let mut v = jacobi(m - 2, 1, n - m + 1, &x);
    if !v.is_zero() {
        v.mant = v.mant * trig.c2.clone();
        v.renormalize();
    }
    let e = u.exp.max(v.exp);
    let (u, v) = (u.at(e), v.at(e));
    let left = || {
        let (nn, mm) = (S::from_i64(n), S::from_i64(m));
        (nn * (v.clone() + u.clone()) - mm.clone() * u.clone()) / mm
    };
    let c2 = trig.c2.clone();
    let s2 = trig.s2.clone();
    let uu = c2.clone() * u.clone() * u.clone();
    let bracket = match weight {
        Weight::Right => s2.clone() * v.clone() * v.clone() + uu,
        Weight::Left => {
            let w = left();
            s2.clone() * w.clone() * w + uu
        }
        Weight::Combined => {
            let w = left();
            s2.clone() * (v.clone() * v.clone() + w.clone() * w) + S::from_i64(2) * uu
        }
    };
    // c^{2(n−m−1)}; n − m − 1 is −1 only on the central branch of even t
    let pw = if n - m > 0 {
        pow_scaled(&c2, (n - m - 1) as u64)
    } else {
        Scaled {
            mant: S::one() / c2.clone(),
            exp: 0,
        }
    };
    let half = S::one() / S::from_i64(2);
    (half * s2 * pw.mant * bracket).scale2(pw.exp + 2 * e)
}

fn direct_branch<S: CompensatedSum>(
    trig: &Trig<S>,
    t: i64,
    m: i64,
    weight: Weight,
    table: &BinomialTable,
) -> S {
    let n = t - m;
    let ratio = -(trig.s2.clone() / trig.c2.clone());
    let inv_s2 = S::one() / trig.s2.clone();
    let b: Vec<S> = (1..=m)
        .map(|j| S::from_biguint(&(table.get(m - 1, j - 1) * table.get(n - 1, j - 1))))
        .collect();
    // smallest magnitudes first: descending j1 + j2
    let mut acc = S::Acc::default();
    for total in (2..=2 * m).rev() {
        let r = ratio.powu(total as u64);
        for j1 in (total - m).max(1)..=m.min(total - 1) {
            let j2 = total - j1;
            let jj = S::from_i64(j1 * j2);
            let w = match weight {
                Weight::Right => S::from_i64((m - total) * m) / jj + inv_s2.clone(),
                Weight::Left => S::from_i64((n - total) * n) / jj + inv_s2.clone(),
                Weight::Combined => {
                    S::from_i64(m * m + n * n - total * (m + n)) / jj
                        + S::from_i64(2) * inv_s2.clone()
                }
            };
            let term = r.clone() * b[(j1 - 1) as usize].clone() * b[(j2 - 1) as usize].clone() * w;
            S::accumulate(&mut acc, term);
        }
    }
    edge_value(trig, t as u64) * S::total(acc)
}
