//! Reference enumeration over the whole translation window.
//!
//! After translating so the minimum entry is `0`, every entry `x` of block
//! `b < r` meets that minimum at time `x / v_b ≤ N`, so `x ≤ N v_b`. Entries of
//! the last block are bounded by the block above them. The window is
//! therefore finite and the filter below is a complete classification.

use std::time::Instant;

use super::{Budget, Limits, SearchMode, SearchReport};
use crate::error::{Error, Result};
use crate::partition::{BlockedPartition, FlagType};
use crate::schedule::is_ulrich_quick;

/// Beyond this the window holds too many sequences to walk.
pub const ORACLE_MAX_DIMENSION: u64 = 14;

/// Upper bound for each flat position: `N v_b`, and `r N` for the last block.
pub fn window_bounds(ftype: &FlagType) -> Vec<i64> {
    let n = ftype.dimension() as i64;
    let r = ftype.steps();
    ftype
        .block_of_each()
        .into_iter()
        .map(|b| if b < r { n * ftype.velocity(b) } else { n * r as i64 })
        .collect()
}

/// Calls `f` on every strictly decreasing sequence of the type's length that
/// ends in `0` and respects [`window_bounds`]. Returns `false` if `f` asked
/// to stop early.
pub fn for_each_window_candidate(ftype: &FlagType, mut f: impl FnMut(&[i64]) -> bool) -> bool {
    let bounds = window_bounds(ftype);
    let n = bounds.len();
    let mut entries = vec![0i64; n];

    fn go(
        i: usize,
        upper: i64,
        bounds: &[i64],
        entries: &mut [i64],
        f: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        let n = entries.len();
        if i == n - 1 {
            entries[i] = 0;
            return f(entries);
        }
        // Positions i+1..n-1 still need distinct values, the last being 0.
        let lowest = (n - 1 - i) as i64;
        let highest = upper.min(bounds[i]);
        for x in (lowest..=highest).rev() {
            entries[i] = x;
            if !go(i + 1, x - 1, bounds, entries, f) {
                return false;
            }
        }
        true
    }

    go(0, i64::MAX, &bounds, &mut entries, &mut f)
}

/// Brute-force classification: filters the whole window with the Ulrich test.
pub fn baseline_oracle(ftype: &FlagType, limits: Limits) -> Result<SearchReport> {
    let started = Instant::now();
    if ftype.dimension() > ORACLE_MAX_DIMENSION {
        return Err(Error::Search(format!(
            "baseline oracle needs N ≤ {ORACLE_MAX_DIMENSION}, type {ftype} has N = {}",
            ftype.dimension()
        )));
    }
    let budget = Budget::new(limits);
    let mut classes = Vec::new();
    let mut failure = None;
    for_each_window_candidate(ftype, |entries| {
        if !budget.tick() {
            return false;
        }
        match BlockedPartition::new(ftype.clone(), entries.to_vec()) {
            Ok(p) if is_ulrich_quick(&p) => classes.push(p),
            Ok(_) => {}
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(SearchReport::new(
        ftype.clone(),
        SearchMode::BaselineOracle,
        classes,
        budget.nodes(),
        started,
        budget.exhausted(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> FlagType {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        let r = baseline_oracle(&t("1,1,1"), Limits::unlimited()).unwrap();
        let want: Vec<BlockedPartition> = ["2|1|-2", "2|-1|-2"]
            .iter()
            .map(|s| s.parse::<BlockedPartition>().unwrap().canonicalize())
            .collect();
        assert_eq!(r.count, 2);
        assert!(want.iter().all(|w| r.classes.contains(w)));
        assert_eq!(baseline_oracle(&t("1,2,1"), Limits::unlimited()).unwrap().count, 4);
        let r = baseline_oracle(&t("2,1,1"), Limits::unlimited()).unwrap();
        assert_eq!(r.classes, vec!["5,1|0|-3".parse::<BlockedPartition>().unwrap().canonicalize()]);
        assert!(baseline_oracle(&t("3,3,3"), Limits::unlimited()).is_err());
    }

    #[test]
    fn window_is_every_decreasing_sequence_in_bounds() {
        // (1,1): first entry in [1, 1], so only (1|0).
        let mut seen = Vec::new();
        for_each_window_candidate(&t("1,1"), |e| {
            seen.push(e.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![1, 0]]);
        // (1,1,1), N = 3: 6 ≥ a > b ≥ 1, b ≤ 3, c = 0.
        let mut count = 0;
        for_each_window_candidate(&t("1,1,1"), |_| {
            count += 1;
            true
        });
        assert_eq!(count, 5 + 4 + 3);
    }
}
