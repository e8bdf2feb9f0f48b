//! Fillings of lattice diagrams.
//!
//! Entries are 1-based and stored aligned with the (canonical) cell list of
//! the shape. Injective flavors double as variable assignments: entry `m`
//! in cell `(r, c)` contributes `x_m^r y_m^c`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinatorics::{combinations, permutations_with_sign};
use crate::diagram::{Cell, LatticeDiagram};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableauFlavor {
    /// Any bijection onto `1..=n`.
    Injective,
    /// Bijective, entries increase going up each column. These index the
    /// terms of the determinant expansion grouped by y-monomial.
    IncreasingUpColumns,
    /// Bijective, entries increase left to right along each row.
    IncreasingAlongRows,
    /// Partition shape, entries in `1..=max_entry`, weakly increasing along
    /// rows and strictly increasing up columns.
    ColumnStrict { max_entry: usize },
    /// Partition shape, bijective, strictly increasing along rows and up columns.
    Standard,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: LatticeDiagram,
    entries: Vec<usize>,
    flavor: TableauFlavor,
}

/// The partition whose Ferrers diagram is `shape`, if there is one.
pub fn partition_of_shape(shape: &LatticeDiagram) -> Option<Partition> {
    let rows = shape.cells().iter().map(|c| c.p).max().map_or(0, |m| m as usize + 1);
    let mut parts = vec![0usize; rows];
    for c in shape.cells() {
        if c.p < 0 {
            return None;
        }
        parts[c.p as usize] += 1;
    }
    let mu = Partition::new(parts).ok()?;
    (mu.ferrers() == *shape).then_some(mu)
}

impl Tableau {
    pub fn new(shape: LatticeDiagram, entries: Vec<usize>, flavor: TableauFlavor) -> Result<Self> {
        if !shape.is_canonical() {
            return Err(Error::InvalidTableau(format!("shape {shape} is not canonical")));
        }
        if entries.len() != shape.len() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for {} cells",
                entries.len(),
                shape.len()
            )));
        }
        let t = Tableau { shape, entries, flavor };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.shape.len();
        let bad = |why: &str| Err(Error::InvalidTableau(format!("{self}: {why}")));
        let needs_partition = matches!(self.flavor, TableauFlavor::ColumnStrict { .. } | TableauFlavor::Standard);
        if needs_partition && partition_of_shape(&self.shape).is_none() {
            return Err(Error::FlavorShapeMismatch(format!("{:?} needs a partition shape", self.flavor)));
        }
        if let TableauFlavor::ColumnStrict { max_entry } = self.flavor {
            if self.entries.iter().any(|&e| e == 0 || e > max_entry) {
                return bad("entry out of range");
            }
        } else {
            let set: BTreeSet<usize> = self.entries.iter().copied().collect();
            if set.len() != n || set.iter().any(|&e| e == 0 || e > n) {
                return bad("entries are not a bijection onto 1..=n");
            }
        }
        let cells = self.shape.cells();
        for (a, ca) in cells.iter().enumerate() {
            for (b, cb) in cells.iter().enumerate() {
                let (ea, eb) = (self.entries[a], self.entries[b]);
                let same_col_below = ca.q == cb.q && ca.p < cb.p;
                let same_row_left = ca.p == cb.p && ca.q < cb.q;
                let ok = match self.flavor {
                    TableauFlavor::Injective => true,
                    TableauFlavor::IncreasingUpColumns => !same_col_below || ea < eb,
                    TableauFlavor::IncreasingAlongRows => !same_row_left || ea < eb,
                    TableauFlavor::ColumnStrict { .. } => {
                        (!same_col_below || ea < eb) && (!same_row_left || ea <= eb)
                    }
                    TableauFlavor::Standard => (!same_col_below || ea < eb) && (!same_row_left || ea < eb),
                };
                if !ok {
                    return bad("monotonicity violated");
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &LatticeDiagram {
        &self.shape
    }

    /// Entries aligned with `shape().cells()`.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn flavor(&self) -> TableauFlavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry_at(&self, cell: Cell) -> Option<usize> {
        self.shape.cells().iter().position(|c| *c == cell).map(|i| self.entries[i])
    }

    /// Cell holding `entry` (first occurrence).
    pub fn position_of(&self, entry: usize) -> Option<Cell> {
        self.entries.iter().position(|&e| e == entry).map(|i| self.shape.cells()[i])
    }

    /// Entries read row by row from the bottom, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.entries.len()).collect();
        let cells = self.shape.cells();
        idx.sort_by_key(|&i| (cells[i].p, cells[i].q));
        idx.into_iter().map(|i| self.entries[i]).collect()
    }

    /// One entry set per occupied column, left to right.
    pub fn column_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut cols: std::collections::BTreeMap<i32, BTreeSet<usize>> = Default::default();
        for (c, &e) in self.shape.cells().iter().zip(&self.entries) {
            cols.entry(c.q).or_default().insert(e);
        }
        cols.into_values().collect()
    }

    /// Entries of each column bottom to top, left to right.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols: std::collections::BTreeMap<i32, Vec<usize>> = Default::default();
        for (c, &e) in self.shape.cells().iter().zip(&self.entries) {
            cols.entry(c.q).or_default().push(e);
        }
        cols.into_values().collect()
    }

    /// `prod y_{T(r,c)}^c` as a monomial in `n` variable pairs.
    pub fn y_monomial(&self, n: usize) -> Monomial {
        let mut y = vec![0u16; n];
        for (c, &e) in self.shape.cells().iter().zip(&self.entries) {
            y[e - 1] += c.q as u16;
        }
        Monomial::from_blocks(&vec![0; n], &y)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, e)) in self.shape.cells().iter().zip(&self.entries).enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c}={e}")?;
        }
        Ok(())
    }
}

impl Serialize for Tableau {
    /// `[[p, q, entry], ...]` in shape order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<[i64; 3]> = self
            .shape
            .cells()
            .iter()
            .zip(&self.entries)
            .map(|(c, &e)| [c.p as i64, c.q as i64, e as i64])
            .collect();
        rows.serialize(s)
    }
}

/// All tableaux of the given shape and flavor, sorted by reading word.
pub fn enumerate_tableaux(shape: &LatticeDiagram, flavor: TableauFlavor) -> Result<Vec<Tableau>> {
    if !shape.is_canonical() {
        return Err(Error::InvalidTableau(format!("shape {shape} is not canonical")));
    }
    let n = shape.len();
    let mut out: Vec<Tableau> = match flavor {
        TableauFlavor::Injective | TableauFlavor::IncreasingAlongRows => permutations_with_sign(n)
            .into_iter()
            .filter_map(|(perm, _)| {
                Tableau::new(shape.clone(), perm.iter().map(|i| i + 1).collect(), flavor).ok()
            })
            .collect(),
        TableauFlavor::IncreasingUpColumns => increasing_up_columns(shape),
        TableauFlavor::ColumnStrict { max_entry } => {
            partition_of_shape(shape)
                .ok_or_else(|| Error::FlavorShapeMismatch("column-strict tableaux need a partition shape".into()))?;
            column_strict(shape, max_entry)
        }
        TableauFlavor::Standard => {
            partition_of_shape(shape)
                .ok_or_else(|| Error::FlavorShapeMismatch("standard tableaux need a partition shape".into()))?;
            standard(shape)
        }
    };
    out.sort_by_cached_key(Tableau::reading_word);
    Ok(out)
}

fn increasing_up_columns(shape: &LatticeDiagram) -> Vec<Tableau> {
    let n = shape.len();
    let cells = shape.cells();
    // Cells of one column are contiguous in lex order, bottom to top.
    let mut col_ranges: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || cells[i].q != cells[start].q {
            col_ranges.push((start, i));
            start = i;
        }
    }
    let mut out = Vec::new();
    fn rec(
        col: usize,
        ranges: &[(usize, usize)],
        remaining: &[usize],
        entries: &mut Vec<usize>,
        shape: &LatticeDiagram,
        out: &mut Vec<Tableau>,
    ) {
        if col == ranges.len() {
            out.push(Tableau {
                shape: shape.clone(),
                entries: entries.clone(),
                flavor: TableauFlavor::IncreasingUpColumns,
            });
            return;
        }
        let size = ranges[col].1 - ranges[col].0;
        for pick in combinations(remaining.len(), size) {
            let chosen: Vec<usize> = pick.iter().map(|&i| remaining[i]).collect();
            let rest: Vec<usize> =
                remaining.iter().enumerate().filter(|(i, _)| !pick.contains(i)).map(|(_, &e)| e).collect();
            entries.extend_from_slice(&chosen);
            rec(col + 1, ranges, &rest, entries, shape, out);
            entries.truncate(entries.len() - size);
        }
    }
    let all: Vec<usize> = (1..=n).collect();
    rec(0, &col_ranges, &all, &mut Vec::with_capacity(n), shape, &mut out);
    out
}

fn column_strict(shape: &LatticeDiagram, max_entry: usize) -> Vec<Tableau> {
    let cells = shape.cells();
    // Fill row by row from the bottom so the left and lower neighbours are set.
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| (cells[i].p, cells[i].q));
    let index_of = |p: i32, q: i32| cells.iter().position(|c| c.p == p && c.q == q);
    let left: Vec<Option<usize>> = cells.iter().map(|c| index_of(c.p, c.q - 1)).collect();
    let below: Vec<Option<usize>> = cells.iter().map(|c| index_of(c.p - 1, c.q)).collect();
    let mut out = Vec::new();
    let mut entries = vec![0usize; cells.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        order: &[usize],
        left: &[Option<usize>],
        below: &[Option<usize>],
        max_entry: usize,
        entries: &mut Vec<usize>,
        shape: &LatticeDiagram,
        out: &mut Vec<Tableau>,
    ) {
        if k == order.len() {
            out.push(Tableau {
                shape: shape.clone(),
                entries: entries.clone(),
                flavor: TableauFlavor::ColumnStrict { max_entry },
            });
            return;
        }
        let i = order[k];
        let lo = left[i].map_or(1, |l| entries[l]).max(below[i].map_or(1, |b| entries[b] + 1));
        for v in lo..=max_entry {
            entries[i] = v;
            rec(k + 1, order, left, below, max_entry, entries, shape, out);
        }
        entries[i] = 0;
    }
    rec(0, &order, &left, &below, max_entry, &mut entries, shape, &mut out);
    out
}

fn standard(shape: &LatticeDiagram) -> Vec<Tableau> {
    let n = shape.len();
    let cells = shape.cells();
    let index_of = |p: i32, q: i32| cells.iter().position(|c| c.p == p && c.q == q);
    let left: Vec<Option<usize>> = cells.iter().map(|c| index_of(c.p, c.q - 1)).collect();
    let below: Vec<Option<usize>> = cells.iter().map(|c| index_of(c.p - 1, c.q)).collect();
    let mut out = Vec::new();
    fn rec(
        next: usize,
        n: usize,
        left: &[Option<usize>],
        below: &[Option<usize>],
        entries: &mut Vec<usize>,
        shape: &LatticeDiagram,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(Tableau { shape: shape.clone(), entries: entries.clone(), flavor: TableauFlavor::Standard });
            return;
        }
        for i in 0..n {
            let free = entries[i] == 0;
            let ready = left[i].is_none_or(|l| entries[l] != 0) && below[i].is_none_or(|b| entries[b] != 0);
            if free && ready {
                entries[i] = next;
                rec(next + 1, n, left, below, entries, shape, out);
                entries[i] = 0;
            }
        }
    }
    let mut entries = vec![0usize; n];
    rec(1, n, &left, &below, &mut entries, shape, &mut out);
    out
}
