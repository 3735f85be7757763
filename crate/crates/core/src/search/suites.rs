//! Verification suites: families of types expected to have no Ulrich
//! partitions at all.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{compositions, time_branching_search, Limits, SearchReport};
use crate::error::{Error, Result};
use crate::partition::FlagType;

/// Types with at least four blocks and total length at most `max_total`.
pub fn multistep_types(max_total: usize) -> Vec<FlagType> {
    let mut out = Vec::new();
    for n in 4..=max_total {
        for parts in 4..=n {
            for c in compositions(n, parts) {
                out.push(FlagType::new(c).expect("compositions are positive"));
            }
        }
    }
    out
}

/// Three-block types `(α, β, γ)` with `β, γ ≥ 3` and `α + β + γ ≤ max_sum`,
/// cheapest first.
pub fn conjecture_sweep_types(max_sum: usize) -> Vec<FlagType> {
    let mut out = Vec::new();
    for s in 7..=max_sum {
        for b in 3..=s {
            for c in 3..=s.saturating_sub(b + 1) {
                let a = s - b - c;
                out.push(FlagType::new(vec![a, b, c]).expect("positive lengths"));
            }
        }
    }
    out.sort_by_key(|t| (t.dimension(), t.lengths().to_vec()));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub reports: Vec<SearchReport>,
    /// Types whose report came from a checkpoint rather than this run.
    pub resumed: Vec<FlagType>,
    #[serde(serialize_with = "super::seconds")]
    pub elapsed: Duration,
}

impl SuiteReport {
    /// Every type finished and none has a class.
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.exhausted && r.count == 0)
    }

    pub fn completed(&self) -> impl Iterator<Item = &FlagType> {
        self.reports.iter().filter(|r| r.exhausted).map(|r| &r.ftype)
    }

    pub fn incomplete(&self) -> impl Iterator<Item = &FlagType> {
        self.reports.iter().filter(|r| !r.exhausted).map(|r| &r.ftype)
    }

    /// Types that finished with at least one class.
    pub fn counterexamples(&self) -> impl Iterator<Item = &SearchReport> {
        self.reports.iter().filter(|r| r.count > 0)
    }
}

/// Append-only JSONL log of finished per-type reports. Only exhausted
/// reports are written, so a resumed run re-searches anything cut short.
#[derive(Debug)]
pub struct Checkpoint {
    path: PathBuf,
    file: Mutex<File>,
}

impl Checkpoint {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Checkpoint {
            path,
            file: Mutex::new(file),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn load(&self) -> Result<HashMap<FlagType, SearchReport>> {
        let f = BufReader::new(File::open(&self.path)?);
        let mut out = HashMap::new();
        for (i, line) in std::io::BufRead::lines(f).enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let r: SearchReport = serde_json::from_str(&line)
                .map_err(|e| Error::Io(format!("{}:{}: {e}", self.path.display(), i + 1)))?;
            if r.exhausted {
                out.insert(r.ftype.clone(), r);
            }
        }
        Ok(out)
    }

    pub fn record(&self, r: &SearchReport) -> Result<()> {
        if !r.exhausted {
            return Ok(());
        }
        let mut line = serde_json::to_string(r)?;
        line.push('\n');
        let mut f = self.file.lock().expect("checkpoint writer panicked");
        f.write_all(line.as_bytes())?;
        f.flush()?;
        Ok(())
    }
}

/// Runs time-branching search over `types`, sharing one wall-clock budget.
/// Node caps apply per type.
fn run_suite(
    suite: &str,
    types: Vec<FlagType>,
    limits: Limits,
    checkpoint: Option<&Checkpoint>,
) -> Result<SuiteReport> {
    let started = Instant::now();
    let deadline = limits.wall_clock.map(|d| started + d);
    let done = match checkpoint {
        Some(c) => c.load()?,
        None => HashMap::new(),
    };
    let resumed: Vec<FlagType> = types.iter().filter(|t| done.contains_key(*t)).cloned().collect();

    let reports = types
        .into_par_iter()
        .map(|t| {
            if let Some(r) = done.get(&t) {
                return Ok(r.clone());
            }
            let wall_clock = deadline.map(|d| d.saturating_duration_since(Instant::now()));
            let r = time_branching_search(
                &t,
                Limits {
                    wall_clock,
                    max_nodes: limits.max_nodes,
                },
            )?;
            if let Some(c) = checkpoint {
                c.record(&r)?;
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SuiteReport {
        suite: suite.to_string(),
        reports,
        resumed,
        elapsed: started.elapsed(),
    })
}

/// Searches every type with at least four blocks and total length at most
/// `max_total_length`.
pub fn verify_no_multistep(
    max_total_length: usize,
    limits: Limits,
    checkpoint: Option<&Checkpoint>,
) -> Result<SuiteReport> {
    if max_total_length < 4 {
        return Err(Error::Search(
            "multistep suite needs a total length of at least 4".into(),
        ));
    }
    run_suite("multistep", multistep_types(max_total_length), limits, checkpoint)
}

/// Searches every three-block type with `β, γ ≥ 3` and block sum at most
/// `max_sum`.
pub fn verify_conjecture_sweep(
    max_sum: usize,
    limits: Limits,
    checkpoint: Option<&Checkpoint>,
) -> Result<SuiteReport> {
    if max_sum < 9 {
        return Err(Error::Search("conjecture sweep needs a sum bound of at least 9".into()));
    }
    run_suite("conjecture", conjecture_sweep_types(max_sum), limits, checkpoint)
}
