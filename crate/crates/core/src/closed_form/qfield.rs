use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// a + b√2 with rational a, b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSqrt2 {
    pub a: BigRational,
    pub b: BigRational,
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn zero() -> Self {
        QSqrt2::new(BigRational::zero(), BigRational::zero())
    }

    pub fn rational(a: BigRational) -> Self {
        QSqrt2::new(a, BigRational::zero())
    }

    /// √2/2
    pub fn half_sqrt2() -> Self {
        QSqrt2::new(BigRational::zero(), BigRational::new(1.into(), 2.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }

    /// (a + b√2)(a − b√2) = a² − 2b²
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    /// The rational value, if the √2 part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }
}

impl<'a> Add<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: &QSqrt2) -> QSqrt2 {
        let two = BigRational::from_integer(2.into());
        QSqrt2::new(
            &self.a * &o.a + two * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a.clone(), -self.b.clone())
    }
}

/// (re_a + re_b√2) + i(im_a + im_b√2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFieldComplex {
    pub re: QSqrt2,
    pub im: QSqrt2,
}

impl QFieldComplex {
    pub fn new(re: QSqrt2, im: QSqrt2) -> Self {
        QFieldComplex { re, im }
    }

    pub fn zero() -> Self {
        QFieldComplex::new(QSqrt2::zero(), QSqrt2::zero())
    }

    pub fn one() -> Self {
        QFieldComplex::new(QSqrt2::rational(BigRational::one()), QSqrt2::zero())
    }

    pub fn i() -> Self {
        QFieldComplex::new(QSqrt2::zero(), QSqrt2::rational(BigRational::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiply by a real field element.
    pub fn scale(&self, k: &QSqrt2) -> Self {
        QFieldComplex::new(&self.re * k, &self.im * k)
    }

    /// |z|² = re² + im², an element of ℚ(√2).
    pub fn norm_sqr(&self) -> QSqrt2 {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

impl<'a> Add<&'a QFieldComplex> for &'a QFieldComplex {
    type Output = QFieldComplex;
    fn add(self, o: &QFieldComplex) -> QFieldComplex {
        QFieldComplex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a QFieldComplex> for &'a QFieldComplex {
    type Output = QFieldComplex;
    fn sub(self, o: &QFieldComplex) -> QFieldComplex {
        QFieldComplex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a QFieldComplex> for &'a QFieldComplex {
    type Output = QFieldComplex;
    fn mul(self, o: &QFieldComplex) -> QFieldComplex {
        QFieldComplex::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}
