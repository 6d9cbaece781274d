use super::dd::DoubleDouble;
use super::scalar::Scalar;

/// Running sum with error compensation appropriate to the number type.
pub trait CompensatedSum: Scalar {
    type Acc: Default;
    fn accumulate(acc: &mut Self::Acc, x: Self);
    fn total(acc: Self::Acc) -> Self;
}

/// Kahan–Babuška–Neumaier accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier<T> {
    sum: T,
    comp: T,
}

impl Neumaier<f64> {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl Neumaier<DoubleDouble> {
    pub fn add(&mut self, x: DoubleDouble) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> DoubleDouble {
        self.sum + self.comp
    }
}

impl CompensatedSum for f64 {
    type Acc = Neumaier<f64>;
    fn accumulate(acc: &mut Self::Acc, x: Self) {
        acc.add(x)
    }
    fn total(acc: Self::Acc) -> Self {
        acc.value()
    }
}

impl CompensatedSum for DoubleDouble {
    type Acc = Neumaier<DoubleDouble>;
    fn accumulate(acc: &mut Self::Acc, x: Self) {
        acc.add(x)
    }
    fn total(acc: Self::Acc) -> Self {
        acc.value()
    }
}

/// Exact sums need no compensation.
#[derive(Default)]
pub struct ExactAcc(Option<num_rational::BigRational>);

impl CompensatedSum for num_rational::BigRational {
    type Acc = ExactAcc;
    fn accumulate(acc: &mut Self::Acc, x: Self) {
        acc.0 = Some(match acc.0.take() {
            Some(s) => s + x,
            None => x,
        });
    }
    fn total(acc: Self::Acc) -> Self {
        acc.0.unwrap_or_else(Scalar::zero)
    }
}
