//! Integer partitions, their Ferrers diagrams, and the corner bookkeeping
//! used for diagrams with one cell removed.
//!
//! Row `i` of the Ferrers diagram has `parts[i]` cells; rows are 0-based
//! and grow upward.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, LatticeDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A corner `(alpha, beta)` north-east of a cell together with the
/// partition left after removing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeCorner {
    pub alpha: usize,
    pub beta: usize,
    pub nu: Partition,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// `(n)`
    pub fn row(n: usize) -> Self {
        Partition { parts: if n == 0 { vec![] } else { vec![n] } }
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `i`, zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Height of column `j`, zero past the last column.
    pub fn col_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > j).count()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        j < self.row_len(i)
    }

    pub fn ferrers(&self) -> LatticeDiagram {
        let mut cells = Vec::with_capacity(self.size());
        for j in 0..self.row_len(0) {
            for i in 0..self.col_len(j) {
                cells.push(Cell::new(i as i32, j as i32));
            }
        }
        LatticeDiagram::new(cells)
    }

    pub fn conjugate(&self) -> Partition {
        Partition { parts: (0..self.row_len(0)).map(|j| self.col_len(j)).collect() }
    }

    /// Sum of the first `k` conjugate parts, padded with zeros.
    pub fn delta_k(&self, k: usize) -> usize {
        (0..k).map(|j| self.col_len(j)).sum()
    }

    fn require(&self, i: usize, j: usize) -> Result<()> {
        if self.contains(i, j) {
            Ok(())
        } else {
            Err(Error::CellNotInPartition { i, j, partition: self.to_string() })
        }
    }

    /// The Ferrers diagram with cell `(i, j)` removed.
    pub fn remove_cell(&self, i: usize, j: usize) -> Result<LatticeDiagram> {
        self.require(i, j)?;
        let hole = Cell::new(i as i32, j as i32);
        Ok(LatticeDiagram::new(self.ferrers().cells().iter().copied().filter(|c| *c != hole).collect()))
    }

    /// Number of cells strictly above `(i, j)` in its column.
    pub fn cells_above(&self, i: usize, j: usize) -> Result<usize> {
        self.require(i, j)?;
        Ok(self.conjugate().parts[j] - 1 - i)
    }

    /// Same count as [`Partition::cells_above`], by walking up the column.
    pub fn cells_above_by_scan(&self, i: usize, j: usize) -> Result<usize> {
        self.require(i, j)?;
        Ok((i + 1..).take_while(|&r| self.contains(r, j)).count())
    }

    pub fn is_column_top(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.cells_above(i, j)? == 0)
    }

    /// Removable cells, bottom row first.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| (i, self.row_len(i) - 1))
            .collect()
    }

    pub fn remove_corner(&self, alpha: usize, beta: usize) -> Result<Partition> {
        if !self.corners().contains(&(alpha, beta)) {
            return Err(Error::CellNotInPartition { i: alpha, j: beta, partition: self.to_string() });
        }
        let mut parts = self.parts.clone();
        parts[alpha] -= 1;
        if parts[alpha] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The rightmost corner lying weakly north-east of `(i + zeta, j)`.
    ///
    /// Requires `(i, j)` in the partition and `zeta` at most the number of
    /// cells above it.
    pub fn corner_ne(&self, i: usize, j: usize, zeta: usize) -> Result<NeCorner> {
        let above = self.cells_above(i, j)?;
        if zeta > above {
            return Err(Error::CellNotInPartition { i: i + zeta, j, partition: self.to_string() });
        }
        let row = i + zeta;
        let beta = self.row_len(row) - 1;
        let alpha = (row..).take_while(|&r| self.row_len(r) == self.row_len(row)).last().unwrap_or(row);
        let nu = self.remove_corner(alpha, beta)?;
        Ok(NeCorner { alpha, beta, nu })
    }

    /// Brute-force version of [`Partition::corner_ne`]: scan all corners.
    pub fn corner_ne_by_scan(&self, i: usize, j: usize, zeta: usize) -> Option<(usize, usize)> {
        self.corners().into_iter().filter(|&(a, b)| a >= i + zeta && b >= j).max_by_key(|&(_, b)| b)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Cells of the Ferrers diagram as `(row, col)` pairs.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ferrers().cells().to_vec().into_iter().map(|c| (c.p as usize, c.q as usize))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma list such as `"4,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition { parts: vec![] });
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("malformed partition {s:?}; expected e.g. \"4,2,1\"")))?;
        Partition::new(parts)
    }
}

/// Parses a hole `"i,j"`.
pub fn parse_cell(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("malformed cell {s:?}; expected \"i,j\""));
    let (i, j) = s.trim().split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(d: &LatticeDiagram) -> Vec<(i32, i32)> {
        d.cells().iter().map(|c| (c.p, c.q)).collect()
    }

    #[test]
    fn ferrers_examples() {
        assert_eq!(cells(&p("4,2,1").ferrers()), vec![(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2), (0, 3)]);
        assert_eq!(cells(&p("1").ferrers()), vec![(0, 0)]);
        assert_eq!(cells(&p("2,2").ferrers()), vec![(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert!(p("4,2,1").ferrers().is_canonical());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("5").conjugate(), Partition::column(5));
        assert_eq!(p("1,1").conjugate(), p("2"));
    }

    #[test]
    fn delta_k_examples() {
        assert_eq!(p("2,1").delta_k(1), 2);
        assert_eq!(p("2,1").delta_k(3), 3);
        assert_eq!(Partition::column(4).delta_k(1), 4);
    }

    #[test]
    fn remove_cell_examples() {
        assert_eq!(cells(&p("2,1").remove_cell(0, 0).unwrap()), vec![(1, 0), (0, 1)]);
        assert!(p("1").remove_cell(0, 0).unwrap().is_empty());
        assert_eq!(p("2,2").remove_cell(1, 1).unwrap(), p("2,1").ferrers());
        assert!(matches!(p("2,1").remove_cell(1, 1), Err(Error::CellNotInPartition { .. })));
    }

    #[test]
    fn cells_above_examples() {
        assert_eq!(p("1,1").cells_above(0, 0).unwrap(), 1);
        assert_eq!(p("3,1").cells_above(0, 2).unwrap(), 0);
        assert_eq!(p("2,1").cells_above(0, 0).unwrap(), 1);
        assert!(p("2,1").cells_above(2, 0).is_err());
    }

    #[test]
    fn corner_examples() {
        let c = p("2,1").corner_ne(0, 0, 0).unwrap();
        assert_eq!((c.alpha, c.beta, c.nu), (0, 1, p("1,1")));
        let c = p("2,1").corner_ne(0, 0, 1).unwrap();
        assert_eq!((c.alpha, c.beta, c.nu), (1, 0, p("2")));
        let c = p("1,1").corner_ne(0, 0, 0).unwrap();
        assert_eq!((c.alpha, c.beta, c.nu), (1, 0, p("1")));
    }

    #[test]
    fn parse_errors() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(parse_cell("1, 2").unwrap(), (1, 2));
        assert!(parse_cell("12").is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn invariants_over_small_partitions() {
        for n in 0..=8 {
            for mu in Partition::all(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
                assert_eq!(mu.ferrers().len(), n);
                // successive differences of delta_k recover the column heights
                let total: usize = (1..=mu.row_len(0)).map(|k| mu.delta_k(k) - mu.delta_k(k - 1)).sum();
                assert_eq!(total, n);
                for (i, j) in mu.cells() {
                    let above = mu.cells_above(i, j).unwrap();
                    assert_eq!(above, mu.cells_above_by_scan(i, j).unwrap());
                    let mut prev_beta = usize::MAX;
                    for zeta in 0..=above {
                        let c = mu.corner_ne(i, j, zeta).unwrap();
                        assert_eq!(Some((c.alpha, c.beta)), mu.corner_ne_by_scan(i, j, zeta));
                        assert_eq!(c.nu.size(), n - 1);
                        assert!(c.alpha >= i + zeta && c.beta >= j);
                        assert!(c.beta <= prev_beta);
                        prev_beta = c.beta;
                    }
                }
            }
        }
    }
}
