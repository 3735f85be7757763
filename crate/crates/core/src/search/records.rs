//! Line-delimited JSON persistence for search results.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::BlockedPartition;

pub const SCHEMA_VERSION: u32 = 1;

/// One Ulrich partition as written to disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub schema: u32,
    #[serde(rename = "type")]
    pub ftype: Vec<usize>,
    pub partition: String,
    pub canonical: bool,
    pub n_dim: u64,
}

impl Record {
    pub fn of(p: &BlockedPartition) -> Self {
        Record {
            schema: SCHEMA_VERSION,
            ftype: p.flag_type().lengths().to_vec(),
            partition: p.to_string(),
            canonical: p.canonicalize() == *p,
            n_dim: p.dimension(),
        }
    }

    /// Parses the stored partition and checks it against the stored type.
    pub fn partition(&self) -> Result<BlockedPartition> {
        let p: BlockedPartition = self.partition.parse()?;
        if p.flag_type().lengths() != self.ftype.as_slice() {
            return Err(Error::Io(format!(
                "record type {:?} does not match partition {}",
                self.ftype, self.partition
            )));
        }
        Ok(p)
    }
}

pub fn write_records<'a, W, I>(mut w: W, partitions: I) -> Result<usize>
where
    W: Write,
    I: IntoIterator<Item = &'a BlockedPartition>,
{
    let mut n = 0;
    for p in partitions {
        serde_json::to_writer(&mut w, &Record::of(p))?;
        w.write_all(b"\n")?;
        n += 1;
    }
    w.flush()?;
    Ok(n)
}

/// Reads records, skipping blank lines. Rejects unknown schema versions.
pub fn read_records<R: BufRead>(r: R) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: Record = serde_json::from_str(&line)
            .map_err(|e| Error::Io(format!("line {}: {e}", i + 1)))?;
        if rec.schema != SCHEMA_VERSION {
            return Err(Error::Io(format!(
                "line {}: unsupported schema {}",
                i + 1,
                rec.schema
            )));
        }
        out.push(rec);
    }
    Ok(out)
}

/// Summary written next to a sweep's records.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub suite: String,
    pub types: Vec<Vec<usize>>,
    pub bounds: serde_json::Value,
    pub git_describe: String,
    pub elapsed_seconds: f64,
}

/// `git describe` of the tree this binary was built from.
pub fn git_describe() -> &'static str {
    option_env!("ULRICH_GIT_DESCRIBE").unwrap_or("unknown")
}
