//! Two-state coined quantum walks on the half line and on the line.
//!
//! A reflection coin `[[cos θ, sin θ], [sin θ, −cos θ]]` drives a walk on
//! {0, 1, 2, …} with a reflecting origin, and a line walk whose delocalized
//! start makes it an exact copy of the half-line walk. Distributions are
//! computed three ways: unitary evolution ([`evolution`]), closed-form
//! binomial sums ([`closed_form`]) and limit densities ([`asymptotics`]).
//! [`harness`] cross-checks the routes and writes CSV/JSON data.

pub mod asymptotics;
pub mod closed_form;
pub mod coin;
pub mod distribution;
pub mod error;
pub mod evolution;
pub mod harness;
pub mod numeric;
pub mod state;

pub use coin::{Angle, Coin};
pub use distribution::{DistRow, Distribution};
pub use error::{Error, Result};
pub use state::{AmplitudePair, HalfLineState, LineState, WalkKind, WalkState};
