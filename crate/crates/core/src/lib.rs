//! Exact enumeration and bijections for Durfee symbols and k-marked Durfee
//! symbols, with rank moments and truncated q-series for checking their
//! generating-function identities.

pub mod bijections;
pub mod durfee;
pub mod error;
pub mod marked;
pub mod moments;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use durfee::{count_durfee_rank, enumerate_durfee, DurfeeSymbol, Flavor};
pub use error::{Error, Result};
pub use marked::{
    balanced_numbers, count_kmarked, enumerate_kmarked, KMarkedSymbol, PartitionPair, RankVector,
    Violation,
};
pub use partition::{count_rank, enumerate_partitions, rank, Partition};
pub use qseries::QSeries;
