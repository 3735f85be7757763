//! Ulrich partitions: blocked integer sequences whose pairwise meeting times
//! under a fixed evolution are exactly `1, ..., N`. They index the Ulrich
//! Schur bundles on partial flag varieties.

pub mod analysis;
pub mod diagram;
pub mod error;
pub mod families;
pub mod geometry;
pub mod partition;
pub mod schedule;
pub mod search;

pub use error::{Error, Result};
pub use partition::{BlockedPartition, FlagType};
pub use schedule::{is_ulrich, is_ulrich_quick, CollisionEvent, CollisionSchedule, UlrichVerdict, Witness};
