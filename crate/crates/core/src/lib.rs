//! Exact truncated q-series, partition-counting oracles, and verification of
//! congruences for overpartitions with `ell`-regular non-overlined parts.

pub mod congruence;
pub mod counting;
pub mod error;
pub mod qfunctions;
pub mod report;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
pub use report::{Status, VerificationReport};
pub use series::{EtaQuotient, Ring, Series};
