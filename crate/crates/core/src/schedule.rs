//! Collision schedules and the Ulrich test.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::partition::BlockedPartition;

/// An exact meeting time.
pub type Time = Ratio<i64>;

/// Address of one entry: `(block, index within block)`, both zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Slot {
    pub block: usize,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollisionEvent {
    pub time: Time,
    /// The entry from the earlier (faster) block.
    pub left: Slot,
    pub right: Slot,
}

impl CollisionEvent {
    pub fn is_integral(&self) -> bool {
        self.time.is_integer()
    }
}

impl fmt::Display for CollisionEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t={} ({},{})~({},{})",
            self.time, self.left.block, self.left.index, self.right.block, self.right.index
        )
    }
}

/// One event per cross-block pair, sorted by time and then by pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionSchedule {
    events: Vec<CollisionEvent>,
}

impl CollisionSchedule {
    pub fn of(p: &BlockedPartition) -> Self {
        let blocks = p.blocks();
        let mut events = Vec::with_capacity(p.dimension() as usize);
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
                let dv = (j - i) as i64;
                for (k, &x) in bi.iter().enumerate() {
                    for (h, &y) in bj.iter().enumerate() {
                        events.push(CollisionEvent {
                            time: Ratio::new(x - y, dv),
                            left: Slot { block: i, index: k },
                            right: Slot { block: j, index: h },
                        });
                    }
                }
            }
        }
        events.sort_by(|a, b| {
            a.time
                .cmp(&b.time)
                .then(a.left.cmp(&b.left))
                .then(a.right.cmp(&b.right))
        });
        CollisionSchedule { events }
    }

    pub fn events(&self) -> &[CollisionEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn times(&self) -> impl Iterator<Item = Time> + '_ {
        self.events.iter().map(|e| e.time)
    }

    /// Events meeting at exactly `t`.
    pub fn at(&self, t: i64) -> impl Iterator<Item = &CollisionEvent> + '_ {
        let t = Ratio::from_integer(t);
        self.events.iter().filter(move |e| e.time == t)
    }
}

/// Why a partition failed the Ulrich test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    NonIntegral(CollisionEvent),
    Duplicate {
        first: CollisionEvent,
        second: CollisionEvent,
    },
    /// A time in `[1, N]` at which nothing meets.
    Missing(i64),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonIntegral(e) => write!(f, "non-integral meeting time {e}"),
            Witness::Duplicate { first, second } => {
                write!(f, "two pairs meet at t={}: {first} and {second}", first.time)
            }
            Witness::Missing(t) => write!(f, "no pair meets at t={t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlrichVerdict {
    pub is_ulrich: bool,
    pub witness: Option<Witness>,
    pub schedule: CollisionSchedule,
}

/// `P` is Ulrich iff its meeting times are exactly `{1, ..., N}`.
pub fn is_ulrich(p: &BlockedPartition) -> UlrichVerdict {
    let schedule = CollisionSchedule::of(p);
    let witness = find_witness(&schedule, p.dimension() as i64);
    UlrichVerdict {
        is_ulrich: witness.is_none(),
        witness,
        schedule,
    }
}

fn find_witness(schedule: &CollisionSchedule, n: i64) -> Option<Witness> {
    let events = schedule.events();
    if let Some(e) = events.iter().find(|e| !e.is_integral()) {
        return Some(Witness::NonIntegral(*e));
    }
    if let Some(w) = events.windows(2).find(|w| w[0].time == w[1].time) {
        return Some(Witness::Duplicate {
            first: w[0],
            second: w[1],
        });
    }
    // Integral, distinct, positive, and exactly N of them: the set is [N]
    // precisely when the k-th smallest time is k.
    events
        .iter()
        .zip(1..=n)
        .find(|(e, k)| e.time.to_integer() != *k)
        .map(|(_, k)| Witness::Missing(k))
}

/// Allocation-light variant of [`is_ulrich`] for hot loops.
pub fn is_ulrich_quick(p: &BlockedPartition) -> bool {
    let n = p.dimension() as usize;
    let mut seen = vec![false; n + 1];
    let blocks = p.blocks();
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
            let dv = (j - i) as i64;
            for &x in bi.iter() {
                for &y in bj.iter() {
                    let d = x - y;
                    if d % dv != 0 {
                        return false;
                    }
                    let t = (d / dv) as usize;
                    if t == 0 || t > n || seen[t] {
                        return false;
                    }
                    seen[t] = true;
                }
            }
        }
    }
    true
}
