//! Lattice cells and lattice diagrams.
//!
//! A cell `(p, q)` sits in row `p` and column `q`. Cells are compared
//! column first, then row. Operators may push cells out of the positive
//! quadrant or onto each other, so a [`LatticeDiagram`] is just an ordered
//! list; [`LatticeDiagram::epsilon`] says whether it is a genuine diagram.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub p: i32,
    pub q: i32,
}

impl Cell {
    pub const fn new(p: i32, q: i32) -> Self {
        Cell { p, q }
    }

    pub fn is_valid(&self) -> bool {
        self.p >= 0 && self.q >= 0
    }
}

/// Column first, then row.
pub fn lex_compare(a: &Cell, b: &Cell) -> Ordering {
    a.q.cmp(&b.q).then(a.p.cmp(&b.p))
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeDiagram {
    cells: Vec<Cell>,
}

impl LatticeDiagram {
    /// Keeps the cells in the order given.
    pub fn new(cells: Vec<Cell>) -> Self {
        LatticeDiagram { cells }
    }

    pub fn from_pairs(pairs: &[(i32, i32)]) -> Self {
        Self::new(pairs.iter().map(|&(p, q)| Cell::new(p, q)).collect())
    }

    /// Sorted copy; fails on a degenerate cell list.
    pub fn canonical(mut cells: Vec<Cell>) -> Result<Self> {
        cells.sort();
        let d = LatticeDiagram { cells };
        if d.epsilon() == 1 {
            Ok(d)
        } else {
            Err(Error::DegenerateDiagram)
        }
    }

    pub fn empty() -> Self {
        LatticeDiagram { cells: Vec::new() }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    /// 1 iff the cells are pairwise distinct and inside the positive quadrant.
    pub fn epsilon(&self) -> u8 {
        let mut seen = BTreeSet::new();
        let ok = self.cells.iter().all(|c| c.is_valid() && seen.insert(*c));
        ok as u8
    }

    /// Strictly increasing and valid.
    pub fn is_canonical(&self) -> bool {
        self.cells.iter().all(Cell::is_valid) && self.cells.windows(2).all(|w| w[0] < w[1])
    }

    /// Sorted diagram together with the sign of the sorting permutation.
    pub fn normalize_sign(&self) -> Result<(LatticeDiagram, i64)> {
        if self.epsilon() == 0 {
            return Err(Error::DegenerateDiagram);
        }
        let mut inversions = 0usize;
        for (a, ca) in self.cells.iter().enumerate() {
            for cb in &self.cells[a + 1..] {
                if ca > cb {
                    inversions += 1;
                }
            }
        }
        let mut cells = self.cells.clone();
        cells.sort();
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Ok((LatticeDiagram { cells }, sign))
    }

    /// Sum of row indices, the x-degree of the determinant.
    pub fn row_sum(&self) -> i64 {
        self.cells.iter().map(|c| c.p as i64).sum()
    }

    /// Sum of column indices, the y-degree of the determinant.
    pub fn col_sum(&self) -> i64 {
        self.cells.iter().map(|c| c.q as i64).sum()
    }

    pub fn max_row(&self) -> Option<i32> {
        self.cells.iter().map(|c| c.p).max()
    }

    pub fn max_col(&self) -> Option<i32> {
        self.cells.iter().map(|c| c.q).max()
    }

    /// Cells of the box `rows x cols` missing from the diagram, in lex order.
    pub fn complement_cells(&self, row_bound: usize, col_bound: usize) -> Vec<Cell> {
        let present: BTreeSet<Cell> = self.cells.iter().copied().collect();
        let mut out = Vec::new();
        for q in 0..col_bound as i32 {
            for p in 0..row_bound as i32 {
                let c = Cell::new(p, q);
                if !present.contains(&c) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Diagram with the cells at `indices` removed (order preserved).
    pub fn without(&self, indices: &[usize]) -> LatticeDiagram {
        let cells = self
            .cells
            .iter()
            .enumerate()
            .filter(|(i, _)| !indices.contains(i))
            .map(|(_, c)| *c)
            .collect();
        LatticeDiagram { cells }
    }

    /// Sub-list at `indices` (in the given order).
    pub fn select(&self, indices: &[usize]) -> LatticeDiagram {
        LatticeDiagram { cells: indices.iter().map(|&i| self.cells[i]).collect() }
    }

    /// Every canonical diagram with `size` cells inside `rows x cols`, in
    /// lexicographic order of cell-index combinations.
    pub fn all_in_box(rows: usize, cols: usize, size: usize) -> Vec<LatticeDiagram> {
        let full = LatticeDiagram::empty().complement_cells(rows, cols);
        crate::combinatorics::combinations(full.len(), size)
            .into_iter()
            .map(|idx| LatticeDiagram { cells: idx.iter().map(|&i| full[i]).collect() })
            .collect()
    }
}

impl fmt::Display for LatticeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for LatticeDiagram {
    type Err = Error;

    /// `"(p,q);(p,q);..."`; the empty string is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LatticeDiagram::empty());
        }
        let bad = || Error::Parse(format!("malformed diagram {s:?}; expected \"(p,q);(p,q);...\""));
        let mut cells = Vec::new();
        for part in s.split(';') {
            let inner = part.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            let (p, q) = inner.split_once(',').ok_or_else(bad)?;
            let p: i32 = p.trim().parse().map_err(|_| bad())?;
            let q: i32 = q.trim().parse().map_err(|_| bad())?;
            cells.push(Cell::new(p, q));
        }
        Ok(LatticeDiagram { cells })
    }
}
