//! Exact combinatorics for r-chain minimal and maximal excludants of integer
//! partitions.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`] and [`enumerate`]: the [`Partition`] type, its structural
//!   operators, the excludant statistics, and exhaustive enumeration.
//! * [`bijections`]: the weight-preserving constructive maps between partition
//!   families and between indexed partitions and pairs of partitions.
//! * [`qseries`]: truncated power series and the closed-form generating
//!   functions.
//! * [`verify`]: brute-force accumulators and the harness that checks every
//!   identity coefficient by coefficient and certifies every bijection.

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use bijections::{BetaSide, IndexedPartition, PartitionPair};
pub use enumerate::{enumerate, enumerate_filtered, Filter};
pub use error::{BijectionError, PartitionError, SeriesError};
pub use partition::{Partition, PartitionClass, Statistic};
pub use qseries::{BivariateSeries, PowerSeries};
pub use verify::{Record, VerificationReport};
