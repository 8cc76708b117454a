//! Verification harness: brute-force sums and counts are compared
//! coefficient by coefficient with the closed-form series, and every
//! bijection is certified exhaustively on small weights.

mod certify;
mod report;
mod stats;
mod theorems;

pub use certify::certify_bijection;
pub use report::{Params, Record, VerificationReport, SCHEMA_VERSION};
pub use stats::{count_family, sigma_stat, Family, SigmaStat};
pub use theorems::{check_theorem, TheoremId};
