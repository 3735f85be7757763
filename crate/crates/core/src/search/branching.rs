//! Depth-first search ordered by collision time.
//!
//! A state is a set `S` of placed entries whose pairwise meeting times are
//! distinct integers in `[1, N]`. Let `t0` be the least time no pair of `S`
//! meets at. In any Ulrich completion every earlier time is already claimed
//! inside `S`, so the pair meeting at `t0` has at least one new entry:
//!
//! * one new entry `x` in block `b` meeting a placed `y`. At `t0`, `x` sits
//!   at or above every placed slower entry and at or below every placed
//!   faster entry, since crossing either earlier would reuse a claimed time.
//!   So `y` is the highest slower or the lowest faster placed entry.
//! * two new entries `x`, `y` meeting each other. No entry of a block
//!   strictly between theirs can exist (it would have crossed one of them
//!   before `t0`), so the blocks are adjacent.
//!
//! The pair meeting at `t0` is unique in the completion, so each class is
//! reached along exactly one path once the first collision is pinned at the
//! origin.

use std::time::Instant;

use rayon::prelude::*;

use super::{Budget, Limits, SearchMode, SearchReport};
use crate::error::{Error, Result};
use crate::partition::{BlockedPartition, FlagType};

/// Times are tracked in a `u128` bitmask.
pub const MAX_SEARCH_DIMENSION: u64 = 127;
pub const MAX_SEARCH_LENGTH: usize = 48;

/// Frontier size handed to the thread pool, per worker.
const FRONTIER_PER_THREAD: usize = 64;

#[derive(Clone)]
struct State {
    value: [i64; MAX_SEARCH_LENGTH],
    block: [u8; MAX_SEARCH_LENGTH],
    len: usize,
    per_block: Vec<usize>,
    used: u128,
}

struct Ctx<'a> {
    vel: Vec<i64>,
    cap: Vec<usize>,
    n: usize,
    dim: i64,
    budget: &'a Budget,
}

impl State {
    fn new(blocks: usize) -> Self {
        State {
            value: [0; MAX_SEARCH_LENGTH],
            block: [0; MAX_SEARCH_LENGTH],
            len: 0,
            per_block: vec![0; blocks],
            used: 0,
        }
    }

    /// Least time in `[1, ∞)` not claimed by a placed pair.
    fn first_free_time(&self) -> i64 {
        ((!self.used) >> 1).trailing_zeros() as i64 + 1
    }
}

impl Ctx<'_> {
    /// Places `x` in block `b` if every new meeting time is integral, in
    /// `[1, N]` and unclaimed. Returns the bits it claimed.
    #[inline]
    fn try_place(&self, st: &mut State, x: i64, b: usize) -> Option<u128> {
        if st.per_block[b] == self.cap[b] {
            return None;
        }
        let vb = self.vel[b];
        let mut claimed = 0u128;
        for k in 0..st.len {
            let z = st.value[k];
            let bk = st.block[k] as usize;
            if bk == b {
                if z == x {
                    return None;
                }
                continue;
            }
            let dv = vb - self.vel[bk];
            let d = x - z;
            if d % dv != 0 {
                return None;
            }
            let t = d / dv;
            if t < 1 || t > self.dim {
                return None;
            }
            let bit = 1u128 << t;
            if (st.used | claimed) & bit != 0 {
                return None;
            }
            claimed |= bit;
        }
        st.value[st.len] = x;
        st.block[st.len] = b as u8;
        st.len += 1;
        st.per_block[b] += 1;
        st.used |= claimed;
        Some(claimed)
    }

    #[inline]
    fn unplace(&self, st: &mut State, claimed: u128) {
        st.len -= 1;
        st.per_block[st.block[st.len] as usize] -= 1;
        st.used &= !claimed;
    }

    /// Range of `x` in block `b` for which every meeting time with a placed
    /// entry of another block lies in `[1, N]`.
    fn feasible_range(&self, st: &State, b: usize) -> (i64, i64) {
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        for k in 0..st.len {
            let bk = st.block[k] as usize;
            if bk == b {
                continue;
            }
            let z = st.value[k];
            let dv = self.vel[b] - self.vel[bk];
            let (a, c) = if dv > 0 {
                (z + dv, z + self.dim * dv)
            } else {
                (z + self.dim * dv, z + dv)
            };
            lo = lo.max(a);
            hi = hi.min(c);
        }
        (lo, hi)
    }

    /// Calls `visit` on every child of `st`; the child is materialized in
    /// `st` for the duration of the call.
    fn expand(&self, st: &mut State, visit: &mut dyn FnMut(&Self, &mut State)) {
        let t0 = st.first_free_time();
        let blocks = self.vel.len();
        let pos = |st: &State, k: usize| st.value[k] - t0 * self.vel[st.block[k] as usize];

        // One new entry meeting a placed one.
        for b in 0..blocks {
            if st.per_block[b] == self.cap[b] {
                continue;
            }
            let mut slower_top = None::<i64>;
            let mut faster_bottom = None::<i64>;
            for k in 0..st.len {
                let bk = st.block[k] as usize;
                let p = pos(st, k);
                if bk > b {
                    slower_top = Some(slower_top.map_or(p, |q| q.max(p)));
                } else if bk < b {
                    faster_bottom = Some(faster_bottom.map_or(p, |q| q.min(p)));
                }
            }
            let mut targets = [slower_top, faster_bottom];
            if targets[0] == targets[1] {
                targets[1] = None;
            }
            for q in targets.into_iter().flatten() {
                let x = q + t0 * self.vel[b];
                if let Some(c) = self.try_place(st, x, b) {
                    visit(self, st);
                    self.unplace(st, c);
                }
            }
        }

        // Two new entries in adjacent blocks meeting each other.
        for i in 0..blocks - 1 {
            let j = i + 1;
            if st.per_block[i] == self.cap[i] || st.per_block[j] == self.cap[j] {
                continue;
            }
            if st.len == 0 {
                self.place_pair(st, i, 0, t0, visit);
                continue;
            }
            let mut lo = i64::MIN;
            let mut hi = i64::MAX;
            for k in 0..st.len {
                let p = pos(st, k);
                if (st.block[k] as usize) > i {
                    lo = lo.max(p + 1);
                } else {
                    hi = hi.min(p - 1);
                }
            }
            let (xl, xh) = self.feasible_range(st, i);
            let (yl, yh) = self.feasible_range(st, j);
            lo = lo.max(xl.saturating_sub(t0 * self.vel[i]));
            hi = hi.min(xh.saturating_sub(t0 * self.vel[i]));
            lo = lo.max(yl.saturating_sub(t0 * self.vel[j]));
            hi = hi.min(yh.saturating_sub(t0 * self.vel[j]));
            debug_assert!(lo > i64::MIN && hi < i64::MAX, "a nonempty state bounds the pair");
            for p in lo..=hi {
                self.place_pair(st, i, p, t0, visit);
            }
        }
    }

    fn place_pair(
        &self,
        st: &mut State,
        i: usize,
        p: i64,
        t0: i64,
        visit: &mut dyn FnMut(&Self, &mut State),
    ) {
        let x = p + t0 * self.vel[i];
        let y = p + t0 * self.vel[i + 1];
        if let Some(cx) = self.try_place(st, x, i) {
            if let Some(cy) = self.try_place(st, y, i + 1) {
                visit(self, st);
                self.unplace(st, cy);
            }
            self.unplace(st, cx);
        }
    }

    fn dfs(&self, st: &mut State, out: &mut Vec<Vec<i64>>) {
        if !self.budget.tick() {
            return;
        }
        if st.len == self.n {
            out.push(self.canonical_entries(st));
            return;
        }
        self.expand(st, &mut |ctx, child| ctx.dfs(child, out));
    }

    fn canonical_entries(&self, st: &State) -> Vec<i64> {
        let mut pairs: Vec<(usize, i64)> = (0..st.len)
            .map(|k| (st.block[k] as usize, st.value[k]))
            .collect();
        pairs.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let min = pairs.last().map_or(0, |p| p.1);
        pairs.into_iter().map(|(_, v)| v - min).collect()
    }
}

/// Enumerates Ulrich partitions of `ftype` by branching on the collision
/// at the earliest unclaimed time.
pub fn time_branching_search(ftype: &FlagType, limits: Limits) -> Result<SearchReport> {
    let started = Instant::now();
    let dim = ftype.dimension();
    if dim > MAX_SEARCH_DIMENSION || ftype.total_length() > MAX_SEARCH_LENGTH {
        return Err(Error::Search(format!(
            "type {ftype} is beyond the search limits (N ≤ {MAX_SEARCH_DIMENSION}, n ≤ {MAX_SEARCH_LENGTH})"
        )));
    }
    let budget = Budget::new(limits);
    let ctx = Ctx {
        vel: (0..ftype.num_blocks()).map(|b| ftype.velocity(b)).collect(),
        cap: ftype.lengths().to_vec(),
        n: ftype.total_length(),
        dim: dim as i64,
        budget: &budget,
    };

    // Breadth-first until the frontier can keep every worker busy.
    let target = FRONTIER_PER_THREAD * rayon::current_num_threads();
    let mut frontier = vec![State::new(ftype.num_blocks())];
    let mut done: Vec<Vec<i64>> = Vec::new();
    while !frontier.is_empty() && frontier.len() < target {
        let mut next = Vec::new();
        for mut st in frontier {
            if !budget.tick() {
                break;
            }
            if st.len == ctx.n {
                done.push(ctx.canonical_entries(&st));
                continue;
            }
            ctx.expand(&mut st, &mut |_, child| next.push(child.clone()));
        }
        let stalled = next.is_empty();
        frontier = next;
        if stalled {
            break;
        }
    }

    let found: Vec<Vec<i64>> = frontier
        .into_par_iter()
        .map(|mut st| {
            let mut out = Vec::new();
            ctx.dfs(&mut st, &mut out);
            out
        })
        .flatten()
        .collect();
    done.extend(found);

    let classes = done
        .into_iter()
        .map(|e| BlockedPartition::new(ftype.clone(), e))
        .collect::<Result<Vec<_>>>()?;
    let exhausted = budget.exhausted();
    Ok(SearchReport::new(
        ftype.clone(),
        SearchMode::TimeBranching,
        classes,
        budget.nodes(),
        started,
        exhausted,
    ))
}
