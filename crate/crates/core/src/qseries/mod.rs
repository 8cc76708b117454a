//! Truncated formal power series over the integers, q-Pochhammer products,
//! and the generating functions built from them.

pub mod bivariate;
pub mod gf;
pub mod pochhammer;
mod series;

pub use bivariate::BivariateSeries;
pub use pochhammer::{gauss_binomial, poch_finite, poch_inf, Length, QMonomial};
pub use series::PowerSeries;
