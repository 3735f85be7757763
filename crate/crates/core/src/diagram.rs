//! Time-evolution diagrams: one row per time `t = 0, ..., N + 1`, each entry
//! drawn at its position at that time, with coinciding entries boxed.
//!
//! Row `N + 1` shows the dual: its positions, read with the block order
//! reversed, are the dual partition up to translation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::BlockedPartition;

/// Horizontal and vertical pitch of an SVG cell.
pub const SVG_CELL: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Renderer {
    Ascii,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    pub partition: BlockedPartition,
    pub renderer: Renderer,
    /// Display velocity of each block. Consecutive blocks differ by exactly
    /// one; any common drift is allowed.
    pub velocities: Vec<i64>,
}

impl DiagramSpec {
    /// Three-block partitions default to velocities `(1, 0, -1)` so the
    /// middle block stands still; other types use the intrinsic velocities.
    pub fn new(partition: BlockedPartition, renderer: Renderer) -> Self {
        let velocities = default_velocities(&partition);
        DiagramSpec {
            partition,
            renderer,
            velocities,
        }
    }

    pub fn with_velocities(mut self, velocities: Vec<i64>) -> Result<Self> {
        self.velocities = velocities;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.partition.num_blocks();
        if self.velocities.len() != k {
            return Err(Error::Diagram(format!(
                "{} display velocities given for {k} blocks",
                self.velocities.len()
            )));
        }
        if self.velocities.windows(2).any(|w| w[0] - w[1] != 1) {
            return Err(Error::Diagram(format!(
                "display velocities {:?} must decrease by exactly 1 per block",
                self.velocities
            )));
        }
        Ok(())
    }
}

pub fn default_velocities(p: &BlockedPartition) -> Vec<i64> {
    let k = p.num_blocks() as i64;
    let drift = if k == 3 { 1 } else { 0 };
    (0..k).map(|i| k - 1 - i - drift).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub position: i64,
    /// Block indices of the entries at this position, ascending.
    pub blocks: Vec<usize>,
}

impl Cell {
    pub fn boxed(&self) -> bool {
        self.blocks.len() > 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub t: i64,
    pub cells: Vec<Cell>,
}

impl Row {
    pub fn boxes(&self) -> usize {
        self.cells.iter().filter(|c| c.boxed()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub dimension: u64,
    pub rows: Vec<Row>,
    pub min_position: i64,
    pub max_position: i64,
}

impl Diagram {
    pub fn build(spec: &DiagramSpec) -> Result<Self> {
        spec.validate()?;
        let p = &spec.partition;
        let n = p.dimension() as i64;
        let block_of = p.flag_type().block_of_each();
        let mut rows = Vec::with_capacity(n as usize + 2);
        let (mut lo, mut hi) = (i64::MAX, i64::MIN);
        for t in 0..=n + 1 {
            let mut at: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (&x, &b) in p.entries().iter().zip(&block_of) {
                let pos = x - t * spec.velocities[b];
                at.entry(pos).or_default().push(b);
            }
            lo = lo.min(*at.keys().next().expect("partition is nonempty"));
            hi = hi.max(*at.keys().next_back().expect("partition is nonempty"));
            let cells = at
                .into_iter()
                .map(|(position, mut blocks)| {
                    blocks.sort_unstable();
                    Cell { position, blocks }
                })
                .collect();
            rows.push(Row { t, cells });
        }
        Ok(Diagram {
            dimension: n as u64,
            rows,
            min_position: lo,
            max_position: hi,
        })
    }

    /// Rows `t ∈ [1, N]` carrying exactly one box. Equals `N` iff the
    /// partition is Ulrich.
    pub fn singly_boxed_rows(&self) -> usize {
        let n = self.dimension as i64;
        self.rows
            .iter()
            .filter(|r| (1..=n).contains(&r.t) && r.boxes() == 1)
            .count()
    }

    /// Columns run from the highest position on the left to the lowest on
    /// the right, three characters each.
    pub fn to_ascii(&self) -> String {
        let width = (self.max_position - self.min_position + 1) as usize;
        let label = (self.dimension + 1).to_string().len();
        let mut out = String::new();
        for row in &self.rows {
            let mut line = vec![String::from("   "); width];
            for c in &row.cells {
                let col = (self.max_position - c.position) as usize;
                line[col] = if c.boxed() {
                    "[x]".to_string()
                } else {
                    format!(" {} ", glyph(c.blocks[0]))
                };
            }
            let _ = writeln!(out, "t={:>label$} |{}", row.t, line.concat().trim_end());
        }
        out
    }

    pub fn to_svg(&self) -> String {
        let cols = self.max_position - self.min_position + 1;
        let margin = 4 * SVG_CELL;
        let width = margin + cols * SVG_CELL;
        let height = self.rows.len() as i64 * SVG_CELL;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="10">"#
        );
        for row in &self.rows {
            let y = row.t * SVG_CELL;
            let _ = writeln!(out, r#"  <g class="row" data-t="{}">"#, row.t);
            let _ = writeln!(
                out,
                r#"    <text x="0" y="{}">t={}</text>"#,
                y + SVG_CELL - 2,
                row.t
            );
            for c in &row.cells {
                let x = margin + (self.max_position - c.position) * SVG_CELL;
                if c.boxed() {
                    let _ = writeln!(
                        out,
                        r#"    <rect class="box" x="{x}" y="{y}" width="{SVG_CELL}" height="{SVG_CELL}" fill="none" stroke="black"/>"#
                    );
                }
                let text: String = c.blocks.iter().map(|&b| glyph(b)).collect();
                let _ = writeln!(
                    out,
                    r#"    <text x="{}" y="{}" text-anchor="middle">{text}</text>"#,
                    x + SVG_CELL / 2,
                    y + SVG_CELL - 2
                );
            }
            let _ = writeln!(out, "  </g>");
        }
        out.push_str("</svg>\n");
        out
    }

    pub fn render(&self, renderer: Renderer) -> String {
        match renderer {
            Renderer::Ascii => self.to_ascii(),
            Renderer::Svg => self.to_svg(),
        }
    }
}

/// `a`, `b`, `c`, ... for blocks `0, 1, 2, ...`.
fn glyph(block: usize) -> char {
    char::from_u32('a' as u32 + (block % 26) as u32).expect("ascii letter")
}

pub fn render(spec: &DiagramSpec) -> Result<String> {
    Ok(Diagram::build(spec)?.render(spec.renderer))
}
