//! Working-precision arithmetic shared by the closed-form routes.

mod dd;
mod scalar;
mod sum;

pub(crate) use dd::two_prod;
pub use dd::DoubleDouble;
pub(crate) use scalar::rational_to_f64;
pub use scalar::Scalar;
pub use sum::{CompensatedSum, Neumaier};
