//! The one-parameter reflection coin `[[c, s], [s, -c]]`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numeric::{two_prod, DoubleDouble};

/// Magnitude below which a radian-specified `cos θ` or `sin θ` counts as zero.
pub const DEGENERATE_EPS: f64 = 1e-12;

/// `(p + pl)·x + (q + ql)·y` with error-free products and sum, rounded once.
/// Plain `p·x + q·y` with rounded cos/sin drifts the norm by ~1e-12 over
/// 10⁴ steps.
#[inline]
fn dot2(p: f64, x: f64, q: f64, y: f64, pl: f64, ql: f64) -> f64 {
    let (a, ea) = two_prod(p, x);
    let (b, eb) = two_prod(q, y);
    let sum = a + b;
    let bv = sum - a;
    let es = (a - (sum - bv)) + (b - bv);
    sum + (ea + eb + es + (pl * x + ql * y))
}

/// A coin angle, either a plain radian value or an exact rational multiple of π.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    Radians(f64),
    /// `num/den · π`, stored reduced with `den > 0`.
    PiFraction {
        num: i64,
        den: i64,
    },
}

impl Angle {
    pub fn pi_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument(
                "zero denominator in π fraction".into(),
            ));
        }
        let g = num.gcd(&den);
        let sign = den.signum();
        Ok(Angle::PiFraction {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn radians(&self) -> f64 {
        match *self {
            Angle::Radians(r) => r,
            Angle::PiFraction { num, den } => {
                (DoubleDouble::PI.mul_f64(num as f64).div_f64(den as f64)).to_f64()
            }
        }
    }

    fn sin_cos_dd(&self) -> (DoubleDouble, DoubleDouble) {
        match *self {
            Angle::Radians(r) => DoubleDouble::from_f64(r).sin_cos(),
            Angle::PiFraction { num, den } => {
                // reduce to [0, 2) · π first so the dd argument stays small
                let num = num.rem_euclid(2 * den);
                DoubleDouble::PI
                    .mul_f64(num as f64)
                    .div_f64(den as f64)
                    .sin_cos()
            }
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Angle::Radians(r) => write!(f, "{r}"),
            Angle::PiFraction { num, den } => {
                let head = match num {
                    1 => "pi".to_string(),
                    -1 => "-pi".to_string(),
                    0 => return f.write_str("0"),
                    n => format!("{n}pi"),
                };
                if den == 1 {
                    f.write_str(&head)
                } else {
                    write!(f, "{head}/{den}")
                }
            }
        }
    }
}

/// Parses radians (`"1.0"`) or π fractions (`"pi/4"`, `"2pi/5"`, `"-3*pi/4"`).
impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim().to_ascii_lowercase();
        let Some(idx) = text.find("pi") else {
            let r: f64 = text
                .parse()
                .map_err(|_| Error::Parse(format!("not an angle: {s:?}")))?;
            return Ok(Angle::Radians(r));
        };
        let bad = || Error::Parse(format!("not an angle: {s:?}"));
        let head = text[..idx].trim_end_matches('*').trim();
        let tail = text[idx + 2..].trim();
        let num: i64 = match head {
            "" | "+" => 1,
            "-" => -1,
            h => h.parse().map_err(|_| bad())?,
        };
        let den: i64 = if tail.is_empty() {
            1
        } else {
            tail.strip_prefix('/')
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?
        };
        Angle::pi_fraction(num, den)
    }
}

/// Coin operator with cached trigonometric values in f64 and double-double.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coin {
    angle: Angle,
    theta: f64,
    c: f64,
    s: f64,
    c_dd: DoubleDouble,
    s_dd: DoubleDouble,
    c_lo: f64,
    s_lo: f64,
}

impl Coin {
    /// Coin for an angle in radians.
    pub fn new(theta: f64) -> Result<Self> {
        Self::from_angle(Angle::Radians(theta))
    }

    /// Coin for `num/den · π`, with trigonometric values free of decimal round-off.
    pub fn pi_fraction(num: i64, den: i64) -> Result<Self> {
        Self::from_angle(Angle::pi_fraction(num, den)?)
    }

    pub fn from_angle(angle: Angle) -> Result<Self> {
        let theta = angle.radians();
        if !theta.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite angle {theta}")));
        }
        let (s_dd, c_dd) = angle.sin_cos_dd();
        let (c, s) = match angle {
            Angle::Radians(r) => (r.cos(), r.sin()),
            Angle::PiFraction { .. } => (c_dd.to_f64(), s_dd.to_f64()),
        };
        Ok(Coin {
            angle,
            theta,
            c,
            s,
            c_dd,
            s_dd,
            c_lo: (c_dd - c.into()).to_f64(),
            s_lo: (s_dd - s.into()).to_f64(),
        })
    }

    pub fn angle(&self) -> Angle {
        self.angle
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// θ reduced to [0, 2π), for display.
    pub fn theta_display(&self) -> f64 {
        self.theta.rem_euclid(std::f64::consts::TAU)
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn c_dd(&self) -> DoubleDouble {
        self.c_dd
    }

    pub fn s_dd(&self) -> DoubleDouble {
        self.s_dd
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.c, self.s], [self.s, -self.c]]
    }

    /// Apply the coin to one amplitude pair.
    #[inline]
    pub fn apply(&self, a0: Complex64, a1: Complex64) -> (Complex64, Complex64) {
        let (c, s, cl, sl) = (self.c, self.s, self.c_lo, self.s_lo);
        (
            Complex64::new(
                dot2(c, a0.re, s, a1.re, cl, sl),
                dot2(c, a0.im, s, a1.im, cl, sl),
            ),
            Complex64::new(
                dot2(s, a0.re, -c, a1.re, sl, -cl),
                dot2(s, a0.im, -c, a1.im, sl, -cl),
            ),
        )
    }

    /// `sin θ = 0`, the case excluded by the copy identities.
    pub fn sin_vanishes(&self) -> bool {
        match self.angle {
            Angle::PiFraction { num, den } => num % den == 0,
            Angle::Radians(_) => self.s.abs() < DEGENERATE_EPS,
        }
    }

    /// `cos θ = 0`.
    pub fn cos_vanishes(&self) -> bool {
        match self.angle {
            Angle::PiFraction { num, den } => (2 * num) % den == 0 && (2 * num / den) % 2 != 0,
            Angle::Radians(_) => self.c.abs() < DEGENERATE_EPS,
        }
    }

    /// θ ∈ {0, π/2, π, 3π/2} (mod 2π): the walk is trivial and the exact and
    /// limit formulas do not apply.
    pub fn is_degenerate(&self) -> bool {
        self.sin_vanishes() || self.cos_vanishes()
    }

    pub(crate) fn require_formula_domain(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::Domain(format!(
                "θ = {} is a multiple of π/2; the closed forms need cos θ ≠ 0 and sin θ ≠ 0",
                self.angle
            )))
        } else {
            Ok(())
        }
    }

    /// True when θ is π/4 (mod 2π) given as an exact π fraction.
    pub fn is_exact_quarter_pi(&self) -> bool {
        match self.angle {
            Angle::PiFraction { num, den } => den == 4 && num.rem_euclid(8) == 1,
            Angle::Radians(_) => false,
        }
    }
}
