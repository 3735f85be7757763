//! Blocked partitions and their time evolution.
//!
//! A blocked partition is a strictly decreasing sequence of integers cut into
//! `r + 1` consecutive blocks. Block `i` (zero-based) moves with velocity
//! `-(r - i)`, so the last block is stationary. Two entries from different
//! blocks eventually meet; same-block entries never do.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest entry magnitude accepted on construction. Keeps every intermediate
/// product in the evolution and collision arithmetic well inside `i64`.
pub const ENTRY_LIMIT: i64 = 1 << 50;

/// Upper bound on the total length `n`.
pub const MAX_TOTAL_LENGTH: usize = 1 << 12;

/// Block-length vector `(l_1, ..., l_{r+1})`, i.e. the flag variety
/// `F(k_1, ..., k_r; n)` with `k_i = l_1 + ... + l_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlagType {
    lengths: Vec<usize>,
}

impl FlagType {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(Error::InvalidType(format!(
                "{lengths:?}: every block needs at least one entry"
            )));
        }
        Self::with_empty_blocks(lengths)
    }

    /// Like [`FlagType::new`] but tolerates zero-length blocks. Only used for
    /// degenerate seeds such as `(3,1|∅|-1)`.
    pub fn with_empty_blocks(lengths: Vec<usize>) -> Result<Self> {
        if lengths.len() < 2 {
            return Err(Error::InvalidType(format!(
                "{lengths:?}: at least two blocks are required"
            )));
        }
        let n: usize = lengths.iter().sum();
        if n > MAX_TOTAL_LENGTH {
            return Err(Error::InvalidType(format!("total length {n} is too large")));
        }
        Ok(FlagType { lengths })
    }

    /// Builds the type of `F(k_1, ..., k_r; n)` from its dimension vector.
    pub fn from_flag(ks: &[usize], n: usize) -> Result<Self> {
        let mut lengths = Vec::with_capacity(ks.len() + 1);
        let mut prev = 0;
        for &k in ks.iter().chain(std::iter::once(&n)) {
            if k <= prev {
                return Err(Error::InvalidType(format!(
                    "flag dimensions {ks:?} with n = {n} are not strictly increasing"
                )));
            }
            lengths.push(k - prev);
            prev = k;
        }
        Self::new(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn num_blocks(&self) -> usize {
        self.lengths.len()
    }

    /// Number of steps `r` of the flag (blocks minus one).
    pub fn steps(&self) -> usize {
        self.lengths.len() - 1
    }

    pub fn total_length(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// The partial sums `k_1, ..., k_r`.
    pub fn flag_dims(&self) -> Vec<usize> {
        self.lengths[..self.steps()]
            .iter()
            .scan(0, |acc, &l| {
                *acc += l;
                Some(*acc)
            })
            .collect()
    }

    /// `N = Σ_{i<j} l_i l_j`: the number of cross-block pairs.
    pub fn dimension(&self) -> u64 {
        let mut total = 0u64;
        let mut seen = 0u64;
        for &l in &self.lengths {
            total += seen * l as u64;
            seen += l as u64;
        }
        total
    }

    /// Speed of block `i`: entries of that block drop by `velocity(i)` per unit time.
    pub fn velocity(&self, block: usize) -> i64 {
        (self.steps() - block) as i64
    }

    pub fn reversed(&self) -> FlagType {
        FlagType {
            lengths: self.lengths.iter().rev().copied().collect(),
        }
    }

    pub fn has_empty_block(&self) -> bool {
        self.lengths.contains(&0)
    }

    /// Start offset of each block in the flat entry vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.lengths.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &l in &self.lengths {
            acc += l;
            out.push(acc);
        }
        out
    }

    /// Block index of every flat position.
    pub fn block_of_each(&self) -> Vec<usize> {
        self.lengths
            .iter()
            .enumerate()
            .flat_map(|(b, &l)| std::iter::repeat(b).take(l))
            .collect()
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for FlagType {
    type Err = Error;

    /// Accepts `1,4,1` or `(1,4,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let lengths = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidType(format!("{s:?} is not a list of block lengths")))
            })
            .collect::<Result<Vec<_>>>()?;
        FlagType::new(lengths)
    }
}

/// A strictly decreasing integer sequence split into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockedPartition {
    ftype: FlagType,
    entries: Vec<i64>,
}

impl BlockedPartition {
    pub fn new(ftype: FlagType, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != ftype.total_length() {
            return Err(Error::LengthMismatch {
                expected: ftype.total_length(),
                found: entries.len(),
            });
        }
        if let Some(&bad) = entries.iter().find(|e| e.abs() > ENTRY_LIMIT) {
            return Err(Error::EntryOutOfRange(bad as i128));
        }
        for (position, w) in entries.windows(2).enumerate() {
            if w[0] <= w[1] {
                return Err(Error::NotDecreasing {
                    position: position + 1,
                    left: w[0],
                    right: w[1],
                });
            }
        }
        Ok(BlockedPartition { ftype, entries })
    }

    pub fn from_blocks<B: AsRef<[i64]>>(blocks: &[B]) -> Result<Self> {
        let lengths = blocks.iter().map(|b| b.as_ref().len()).collect();
        let ftype = FlagType::new(lengths)?;
        let entries = blocks.iter().flat_map(|b| b.as_ref().iter().copied()).collect();
        Self::new(ftype, entries)
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.ftype
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn num_blocks(&self) -> usize {
        self.ftype.num_blocks()
    }

    pub fn dimension(&self) -> u64 {
        self.ftype.dimension()
    }

    pub fn block(&self, i: usize) -> &[i64] {
        let offsets = self.ftype.offsets();
        &self.entries[offsets[i]..offsets[i + 1]]
    }

    pub fn blocks(&self) -> Vec<&[i64]> {
        (0..self.num_blocks()).map(|i| self.block(i)).collect()
    }

    /// Positions at time `t`: entry `(i, k)` sits at `a_k^i - t (r - i)`.
    pub fn evolve(&self, t: u32) -> Vec<i64> {
        let t = t as i64;
        self.ftype
            .block_of_each()
            .into_iter()
            .zip(&self.entries)
            .map(|(b, &x)| x - t * self.ftype.velocity(b))
            .collect()
    }

    /// Adds `c` to every entry.
    pub fn shifted(&self, c: i64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|&x| {
                let y = x as i128 + c as i128;
                if y.abs() > ENTRY_LIMIT as i128 {
                    Err(Error::EntryOutOfRange(y))
                } else {
                    Ok(y as i64)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BlockedPartition {
            ftype: self.ftype.clone(),
            entries,
        })
    }

    /// The equivalent partition whose minimum entry is zero.
    pub fn canonicalize(&self) -> Self {
        let min = *self.entries.last().expect("partitions are nonempty");
        let entries = self.entries.iter().map(|x| x - min).collect();
        BlockedPartition {
            ftype: self.ftype.clone(),
            entries,
        }
    }

    pub fn is_equivalent(&self, other: &Self) -> bool {
        self.ftype == other.ftype && self.canonicalize() == other.canonicalize()
    }

    /// Negate every entry and reverse the order; the type is reversed.
    pub fn symmetric(&self) -> Self {
        BlockedPartition {
            ftype: self.ftype.reversed(),
            entries: self.entries.iter().rev().map(|x| -x).collect(),
        }
    }

    /// The entries of `P(N+1)` with the block order reversed.
    ///
    /// Fails when some cross-block pair has not met by time `N + 1`, since the
    /// reordered sequence would then not be decreasing. Ulrich partitions are
    /// always dualizable.
    pub fn dual(&self) -> Result<Self> {
        let n = self.dimension();
        let t = u32::try_from(n + 1)
            .map_err(|_| Error::NotDualizable(format!("dimension {n} is too large")))?;
        let moved = self.evolve(t);
        let offsets = self.ftype.offsets();
        let mut entries = Vec::with_capacity(moved.len());
        for b in (0..self.num_blocks()).rev() {
            entries.extend_from_slice(&moved[offsets[b]..offsets[b + 1]]);
        }
        Self::new(self.ftype.reversed(), entries).map_err(|e| match e {
            Error::NotDecreasing { .. } => Error::NotDualizable(format!(
                "{self}: some pair has not met by time {}",
                n + 1
            )),
            other => other,
        })
    }

    /// Symmetric dual `(P^s)^*`, which has the same type as `P`.
    pub fn symmetric_dual(&self) -> Result<Self> {
        self.symmetric().dual()
    }

    /// Every entry of block `j` is congruent to every entry of block `k`
    /// modulo `k - j`. Necessary for integral meeting times.
    pub fn congruence_ok(&self) -> bool {
        let blocks = self.blocks();
        for j in 0..blocks.len() {
            for k in j + 2..blocks.len() {
                let m = (k - j) as i64;
                let Some(&reference) = blocks[j].first().or(blocks[k].first()) else {
                    continue;
                };
                let class = reference.rem_euclid(m);
                if blocks[j]
                    .iter()
                    .chain(blocks[k].iter())
                    .any(|x| x.rem_euclid(m) != class)
                {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for BlockedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for BlockedPartition {
    type Err = Error;

    /// Grammar: blocks separated by `|`, entries by `,`; whitespace, an
    /// optional pair of outer parentheses and unicode minus signs are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.trim().replace('\u{2212}', "-");
        let body = cleaned
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(&cleaned);
        if body.trim().is_empty() {
            return Err(Error::parse(s, "empty input"));
        }
        let mut blocks = Vec::new();
        for raw in body.split('|') {
            let raw = raw.trim();
            if raw.is_empty() {
                return Err(Error::parse(s, "empty block"));
            }
            let block = raw
                .split(',')
                .map(|e| {
                    let e = e.trim();
                    e.parse::<i64>()
                        .map_err(|_| Error::parse(s, format!("{e:?} is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        if blocks.len() < 2 {
            return Err(Error::parse(s, "at least two blocks are required"));
        }
        BlockedPartition::from_blocks(&blocks)
    }
}

impl Serialize for BlockedPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BlockedPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
