//! Exact arithmetic: rationals, the value group ℚ^k, polynomials and
//! generalized power series.

pub mod group;
pub mod poly;
pub mod rat;
pub mod series;

pub use group::{GroupVec, SignChar, Value};
pub use poly::{ExpVec, LaurentPoly, Poly};
pub use rat::{int, rat, Rat};
pub use series::GenSeries;
