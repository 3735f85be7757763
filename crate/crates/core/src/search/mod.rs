//! Exhaustive enumeration of Ulrich partitions of a fixed type.
//!
//! Two independent engines are provided. [`baseline_oracle`] walks every
//! strictly decreasing sequence in the translation window and filters with
//! the Ulrich test; it is only feasible for small dimension. The
//! [`time_branching_search`] engine grows a sub-partition one collision at
//! a time, always resolving the earliest time no placed pair has claimed.

mod branching;
mod oracle;
mod records;
mod suites;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{BlockedPartition, FlagType};

pub use branching::{time_branching_search, MAX_SEARCH_DIMENSION, MAX_SEARCH_LENGTH};
pub use oracle::{baseline_oracle, for_each_window_candidate, window_bounds, ORACLE_MAX_DIMENSION};
pub use records::{git_describe, read_records, write_records, Manifest, Record, SCHEMA_VERSION};
pub use suites::{
    conjecture_sweep_types, multistep_types, verify_conjecture_sweep, verify_no_multistep,
    Checkpoint, SuiteReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    BaselineOracle,
    TimeBranching,
}

impl std::str::FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "baseline-oracle" | "oracle" => Ok(SearchMode::BaselineOracle),
            "time-branching" | "branching" => Ok(SearchMode::TimeBranching),
            _ => Err(Error::Search(format!("unknown search mode {s:?}"))),
        }
    }
}

/// Optional caps on a search. A capped search that hits its cap reports
/// `exhausted = false`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub wall_clock: Option<Duration>,
    pub max_nodes: Option<u64>,
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits::default()
    }

    pub fn seconds(s: f64) -> Self {
        Limits {
            wall_clock: Some(Duration::from_secs_f64(s)),
            max_nodes: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub ftype: FlagType,
    pub mode: SearchMode,
    pub limits: Limits,
}

impl SearchSpec {
    pub fn new(ftype: FlagType, mode: SearchMode) -> Self {
        SearchSpec {
            ftype,
            mode,
            limits: Limits::unlimited(),
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    #[serde(rename = "type")]
    pub ftype: FlagType,
    pub mode: SearchMode,
    pub count: usize,
    /// Canonical representatives, sorted.
    pub classes: Vec<BlockedPartition>,
    pub nodes: u64,
    #[serde(serialize_with = "seconds", deserialize_with = "from_seconds")]
    pub elapsed: Duration,
    /// `true` iff `classes` is the complete list for this type.
    pub exhausted: bool,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

fn from_seconds<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Duration, D::Error> {
    let s = f64::deserialize(d)?;
    Duration::try_from_secs_f64(s).map_err(serde::de::Error::custom)
}

impl SearchReport {
    fn new(
        ftype: FlagType,
        mode: SearchMode,
        mut classes: Vec<BlockedPartition>,
        nodes: u64,
        started: Instant,
        exhausted: bool,
    ) -> Self {
        classes.sort();
        classes.dedup();
        SearchReport {
            ftype,
            mode,
            count: classes.len(),
            classes,
            nodes,
            elapsed: started.elapsed(),
            exhausted,
        }
    }

    /// Pairs `(i, j)`, `i ≤ j`, with `classes[j]` equivalent to
    /// `symmetric(classes[i])`. Only palindromic types have any.
    pub fn symmetric_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, p) in self.classes.iter().enumerate() {
            let s = p.symmetric().canonicalize();
            if let Ok(j) = self.classes.binary_search(&s) {
                if i <= j {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Enumerates every equivalence class of Ulrich partitions of `spec.ftype`.
pub fn enumerate_ulrich(spec: &SearchSpec) -> Result<SearchReport> {
    match spec.mode {
        SearchMode::BaselineOracle => baseline_oracle(&spec.ftype, spec.limits),
        SearchMode::TimeBranching => time_branching_search(&spec.ftype, spec.limits),
    }
}

/// Shared node and wall-clock accounting for one search.
pub(crate) struct Budget {
    nodes: std::sync::atomic::AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    stopped: std::sync::atomic::AtomicBool,
}

impl Budget {
    pub(crate) fn new(limits: Limits) -> Self {
        Budget {
            nodes: 0.into(),
            max_nodes: limits.max_nodes.unwrap_or(u64::MAX),
            deadline: limits.wall_clock.map(|d| Instant::now() + d),
            stopped: false.into(),
        }
    }

    /// Counts one node; `false` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&self) -> bool {
        use std::sync::atomic::Ordering::Relaxed;
        let n = self.nodes.fetch_add(1, Relaxed);
        if n >= self.max_nodes {
            self.stopped.store(true, Relaxed);
        } else if n % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.stopped.store(true, Relaxed);
                }
            }
        }
        !self.stopped.load(Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(std::sync::atomic::Ordering::Relaxed)
    }

    pub(crate) fn exhausted(&self) -> bool {
        !self.stopped.load(std::sync::atomic::Ordering::Relaxed)
    }
}

/// Every composition of `n` into exactly `parts` positive integers,
/// in lexicographic order.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for first in 1..=n.saturating_sub(parts - 1) {
            prefix.push(first);
            go(n - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// All types (at least two blocks) of dimension at most `max_dim`.
pub fn types_up_to_dimension(max_dim: u64) -> Vec<FlagType> {
    let mut out = Vec::new();
    // A type of total length n has dimension at least n - 1.
    for n in 2..=(max_dim as usize + 1) {
        for parts in 2..=n {
            for c in compositions(n, parts) {
                let t = FlagType::new(c).expect("compositions are positive");
                if t.dimension() <= max_dim {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        // Σ_k C(n-1, k-1) = 2^{n-1}.
        for n in 1..9 {
            let total: usize = (1..=n).map(|k| compositions(n, k).len()).sum();
            assert_eq!(total, 1 << (n - 1));
        }
    }

    #[test]
    fn small_dimension_types() {
        let t = types_up_to_dimension(2);
        let strs: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        assert_eq!(strs, vec!["(1,1)", "(1,2)", "(2,1)"]);
        assert!(types_up_to_dimension(12).iter().all(|t| t.dimension() <= 12));
    }

    #[test]
    fn budget_stops_on_node_cap() {
        let b = Budget::new(Limits {
            wall_clock: None,
            max_nodes: Some(3),
        });
        assert!(b.tick() && b.tick() && b.tick());
        assert!(!b.tick());
        assert!(!b.exhausted());
    }
}
