use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dd::{self, DoubleDouble};

/// Field-like number type the closed-form sums are generic over.
///
/// Implemented for `f64`, [`DoubleDouble`] and exact `BigRational`. The
/// binary-scaling hooks let long recurrences stay in range; exact types
/// never rescale.
pub trait Scalar:
    Clone
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_biguint(v: &BigUint) -> Self;
    fn to_f64(&self) -> f64;
    fn is_negative(&self) -> bool;
    fn abs(&self) -> Self;

    /// Multiply by `2^k`.
    fn scale2(self, k: i64) -> Self;

    /// floor(log2 |x|); exact types report 0 so they are never rescaled.
    fn exponent2(&self) -> i64;

    fn powu(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_biguint(v: &BigUint) -> Self {
        v.to_f64().unwrap_or(f64::INFINITY)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn scale2(self, k: i64) -> Self {
        dd::ldexp(self, k)
    }
    fn exponent2(&self) -> i64 {
        dd::exponent(*self)
    }
}

impl Scalar for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble::ZERO
    }
    fn one() -> Self {
        DoubleDouble::ONE
    }
    fn from_i64(v: i64) -> Self {
        DoubleDouble::from_bigint(&BigInt::from(v))
    }
    fn from_biguint(v: &BigUint) -> Self {
        DoubleDouble::from_bigint(&BigInt::from(v.clone()))
    }
    fn to_f64(&self) -> f64 {
        DoubleDouble::to_f64(*self)
    }
    fn is_negative(&self) -> bool {
        self.hi < 0.0
    }
    fn abs(&self) -> Self {
        DoubleDouble::abs(*self)
    }
    fn scale2(self, k: i64) -> Self {
        self.ldexp(k)
    }
    fn exponent2(&self) -> i64 {
        dd::exponent(self.hi)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_biguint(v: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(v.clone()))
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn scale2(self, k: i64) -> Self {
        let p = BigInt::one() << k.unsigned_abs() as usize;
        if k >= 0 {
            self * BigRational::from_integer(p)
        } else {
            self / BigRational::from_integer(p)
        }
    }
    fn exponent2(&self) -> i64 {
        0
    }
}

/// Correctly scaled conversion; plain `to_f64` on huge numerators and
/// denominators overflows before dividing.
pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    DoubleDouble::from_rational(q).to_f64()
}
