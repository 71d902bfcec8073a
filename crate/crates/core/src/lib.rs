//! Exact computation of canonical coordinates (mirror maps), Yukawa
//! couplings and instanton numbers from a Picard-Fuchs operator with a point
//! of maximally unipotent monodromy, together with p-adic certificates for
//! their integrality.
//!
//! Everything is formal and exact: series carry arbitrary-precision rational
//! coefficients and an explicit truncation order.

pub mod certify;
pub mod error;
pub mod fixtures;
pub mod padic;
pub mod picard_fuchs;
pub mod pipeline;
pub mod series;
pub mod yukawa;

pub use error::{Error, Result};
pub use series::{LogSeries, Rational, RationalSeries};
