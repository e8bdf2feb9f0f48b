//! Symmetric differential operators acting on lattice diagram determinants
//! by moving cells.
//!
//! A derivative in `x` lowers a row exponent, so every action moves cells
//! down. The results are sums of diagrams with integer coefficients; turning
//! them back into polynomials and comparing with direct differentiation
//! ([`oracle_apply`]) is how every rule here is checked.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinatorics::combinations;
use crate::determinant::{delta_l, delta_minor};
use crate::diagram::{Cell, LatticeDiagram};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Context, Polynomial};
use crate::scalar::Scalar;
use crate::symmetric::{check_subset, sym_poly, SymKind};
use crate::tableau::{enumerate_tableaux, TableauFlavor};

/// `Σ c · Δ_D` over canonical diagrams `D`, with duplicates merged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignedDiagramSum {
    terms: BTreeMap<LatticeDiagram, i64>,
}

impl SignedDiagramSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c · Δ_list`; degenerate lists are dropped and unsorted ones
    /// contribute with the sign of the sorting permutation.
    pub fn add(&mut self, c: i64, list: &LatticeDiagram) {
        if c == 0 {
            return;
        }
        let Ok((d, sign)) = list.normalize_sign() else {
            return;
        };
        let v = self.terms.entry(d.clone()).or_insert(0);
        *v += c * sign;
        if *v == 0 {
            self.terms.remove(&d);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeDiagram, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &LatticeDiagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    /// The single diagram with coefficient 1, if that is all there is.
    pub fn as_single(&self) -> Option<&LatticeDiagram> {
        match self.terms.iter().next() {
            Some((d, 1)) if self.terms.len() == 1 => Some(d),
            _ => None,
        }
    }

    pub fn to_polynomial(&self, ctx: Context) -> Result<Polynomial> {
        let mut out = Polynomial::zero(ctx);
        for (d, c) in self.terms() {
            out.add_scaled(&delta_l(ctx, d)?, &Scalar::from_integer(c));
        }
        Ok(out)
    }
}

impl Serialize for SignedDiagramSum {
    /// `[{"coefficient": c, "diagram": "(p,q);..."}, ...]`
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            coefficient: i64,
            diagram: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (d, c) in self.terms() {
            seq.serialize_element(&Term { coefficient: c, diagram: d.to_string() })?;
        }
        seq.end()
    }
}

fn require_valid(l: &LatticeDiagram) -> Result<()> {
    if l.epsilon() == 0 {
        return Err(Error::DegenerateDiagram);
    }
    Ok(())
}

fn lowered(l: &LatticeDiagram, which: &[usize], by: i32) -> LatticeDiagram {
    let mut cells = l.cells().to_vec();
    for &i in which {
        cells[i].p -= by;
    }
    LatticeDiagram::new(cells)
}

/// `p_k(∂X) Δ_L`: one cell at a time moves down `k` rows.
pub fn op_p_k(l: &LatticeDiagram, k: usize) -> Result<SignedDiagramSum> {
    require_valid(l)?;
    if k == 0 {
        return Err(Error::KOutOfRange { k, n: l.len() });
    }
    let mut out = SignedDiagramSum::new();
    for i in 0..l.len() {
        out.add(1, &lowered(l, &[i], k as i32));
    }
    Ok(out)
}

/// `e_k(∂X) Δ_L`: `k` distinct cells each move down one row.
pub fn op_e_k(l: &LatticeDiagram, k: usize) -> Result<SignedDiagramSum> {
    require_valid(l)?;
    if k == 0 || k > l.len() {
        return Err(Error::KOutOfRange { k, n: l.len() });
    }
    let mut out = SignedDiagramSum::new();
    for subset in combinations(l.len(), k) {
        out.add(1, &lowered(l, &subset, 1));
    }
    Ok(out)
}

/// `h_k(∂X) Δ_L` through the bounding box of `L`.
pub fn op_h_k(l: &LatticeDiagram, k: usize) -> Result<SignedDiagramSum> {
    let rows = l.max_row().map_or(0, |r| r as usize + 1);
    let cols = l.max_col().map_or(0, |c| c as usize + 1);
    op_h_k_in_box(l, k, rows, cols)
}

/// `h_k(∂X) Δ_L` by moving `k` distinct holes of the complement up one row.
///
/// Only holes inside `rows x cols` are listed. A hole pushed out of the box
/// lands on an unlisted hole, so that choice contributes nothing; any box
/// containing `L` gives the same answer.
pub fn op_h_k_in_box(l: &LatticeDiagram, k: usize, rows: usize, cols: usize) -> Result<SignedDiagramSum> {
    require_valid(l)?;
    if k == 0 {
        return Err(Error::KOutOfRange { k, n: l.len() });
    }
    if l.cells().iter().any(|c| c.p as usize >= rows || c.q as usize >= cols) {
        return Err(Error::Parse(format!("box {rows}x{cols} does not contain {l}")));
    }
    let holes = l.complement_cells(rows, cols);
    let mut out = SignedDiagramSum::new();
    for chosen in combinations(holes.len(), k) {
        if chosen.iter().any(|&h| holes[h].p as usize + 1 >= rows) {
            continue;
        }
        let mut new_holes: BTreeSet<Cell> = holes.iter().copied().collect();
        for &h in &chosen {
            new_holes.remove(&holes[h]);
        }
        let mut ok = true;
        for &h in &chosen {
            ok &= new_holes.insert(Cell::new(holes[h].p + 1, holes[h].q));
        }
        if !ok {
            continue;
        }
        let image = LatticeDiagram::empty().complement_cells(rows, cols);
        let cells: Vec<Cell> = image.into_iter().filter(|c| !new_holes.contains(c)).collect();
        out.add(1, &LatticeDiagram::new(cells));
    }
    Ok(out)
}

/// Order in which the columns of a tableau act in [`op_schur_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColumnOrder {
    #[default]
    RightToLeft,
    LeftToRight,
}

/// `s_λ(∂X) Δ_L`.
pub fn op_schur(l: &LatticeDiagram, lambda: &Partition) -> Result<SignedDiagramSum> {
    op_schur_with(l, lambda, ColumnOrder::RightToLeft)
}

/// `s_λ(∂X) Δ_L` as a sum over column-strict tableaux `T` with entries
/// naming cells of `L`: each column of `T` lowers the cells it names by one
/// row, and `T` counts only if every intermediate diagram is valid.
pub fn op_schur_with(l: &LatticeDiagram, lambda: &Partition, order: ColumnOrder) -> Result<SignedDiagramSum> {
    require_valid(l)?;
    let mut out = SignedDiagramSum::new();
    if lambda.size() == 0 {
        out.add(1, l);
        return Ok(out);
    }
    let tableaux = enumerate_tableaux(&lambda.ferrers(), TableauFlavor::ColumnStrict { max_entry: l.len() })?;
    for t in tableaux {
        let mut columns = t.columns();
        if order == ColumnOrder::RightToLeft {
            columns.reverse();
        }
        let mut current = l.clone();
        let mut alive = true;
        for col in columns {
            let idx: Vec<usize> = col.iter().map(|e| e - 1).collect();
            current = lowered(&current, &idx, 1);
            if current.epsilon() == 0 {
                alive = false;
                break;
            }
        }
        if alive {
            out.add(1, &current);
        }
    }
    Ok(out)
}

/// Combinatorial action of the named operator.
pub fn apply(l: &LatticeDiagram, op: &SymKind) -> Result<SignedDiagramSum> {
    match op {
        SymKind::Power(k) => op_p_k(l, *k),
        SymKind::Elementary(k) => op_e_k(l, *k),
        SymKind::Complete(k) => op_h_k(l, *k),
        SymKind::Schur(lambda) => op_schur(l, lambda),
    }
}

/// `f(∂X) Δ_L` by direct differentiation.
pub fn oracle_apply(ctx: Context, f: &Polynomial, l: &LatticeDiagram) -> Result<Polynomial> {
    f.apply_diff_operator(&delta_l(ctx, l)?)
}

/// One term of the Laplace expansion of `Δ_L` along the rows `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplaceBlock {
    pub sign: i64,
    /// Cells of `L` carried by the variables in `S`.
    pub block: LatticeDiagram,
    /// The remaining cells, carried by the other variables.
    pub rest: LatticeDiagram,
}

/// `Δ_L = Σ sign · Δ_block(S; S^Y) · Δ_rest(S̄; S̄^Y)` over all
/// `|S|`-subsets of the cells.
pub fn laplace_blocks(ctx: Context, l: &LatticeDiagram, s: &[usize]) -> Result<Vec<LaplaceBlock>> {
    if l.len() != ctx.n() {
        return Err(Error::CellCountMismatch { cells: l.len(), n: ctx.n() });
    }
    let s = check_subset(ctx, s)?;
    let row_sum: usize = s.iter().map(|r| r + 1).sum();
    Ok(combinations(l.len(), s.len())
        .into_iter()
        .map(|cols| {
            let col_sum: usize = cols.iter().map(|c| c + 1).sum();
            LaplaceBlock {
                sign: if (row_sum + col_sum).is_multiple_of(2) { 1 } else { -1 },
                block: l.select(&cols),
                rest: l.without(&cols),
            }
        })
        .collect())
}

/// Variables not in `s`, ascending.
pub fn complement_vars(ctx: Context, s: &[usize]) -> Vec<usize> {
    (0..ctx.n()).filter(|v| !s.contains(v)).collect()
}

/// `Σ c · Δ_block(S) · Δ_rest(S̄)` with merged duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlockSum {
    pub vars: Vec<usize>,
    terms: BTreeMap<(LatticeDiagram, LatticeDiagram), i64>,
}

impl BlockSum {
    fn add(&mut self, c: i64, block: LatticeDiagram, rest: LatticeDiagram) {
        let v = self.terms.entry((block.clone(), rest.clone())).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&(block, rest));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeDiagram, &LatticeDiagram, i64)> {
        self.terms.iter().map(|((b, r), &c)| (b, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_polynomial(&self, ctx: Context) -> Result<Polynomial> {
        let others = complement_vars(ctx, &self.vars);
        let mut out = Polynomial::zero(ctx);
        for (b, r, c) in self.terms() {
            let prod = &delta_minor(ctx, &self.vars, b)? * &delta_minor(ctx, &others, r)?;
            out.add_scaled(&prod, &Scalar::from_integer(c));
        }
        Ok(out)
    }
}

impl Serialize for BlockSum {
    /// `[{"coefficient": c, "block": "...", "rest": "..."}, ...]`
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            coefficient: i64,
            block: String,
            rest: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, r, c) in self.terms() {
            seq.serialize_element(&Term { coefficient: c, block: b.to_string(), rest: r.to_string() })?;
        }
        seq.end()
    }
}

/// `f(∂S) Δ_L` for `f` symmetric in the variables `S` only: the operator
/// acts on the `S` factor of each Laplace block.
pub fn apply_on_subset(ctx: Context, l: &LatticeDiagram, op: &SymKind, s: &[usize]) -> Result<BlockSum> {
    let s = check_subset(ctx, s)?;
    let mut out = BlockSum { vars: s.clone(), terms: BTreeMap::new() };
    for blk in laplace_blocks(ctx, l, &s)? {
        if blk.block.epsilon() == 0 || blk.rest.epsilon() == 0 {
            continue;
        }
        let image = match op {
            SymKind::Elementary(k) if *k > s.len() => SignedDiagramSum::new(),
            _ => apply(&blk.block, op)?,
        };
        for (d, c) in image.terms() {
            out.add(blk.sign * c, d.clone(), blk.rest.clone());
        }
    }
    Ok(out)
}

/// `f(∂S) Δ_L` by direct differentiation, `f` given by kind and subset.
pub fn oracle_apply_on_subset(ctx: Context, l: &LatticeDiagram, op: &SymKind, s: &[usize]) -> Result<Polynomial> {
    oracle_apply(ctx, &sym_poly(ctx, op, s)?, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(pairs: &[(i32, i32)]) -> LatticeDiagram {
        LatticeDiagram::from_pairs(pairs)
    }

    fn single(l: &LatticeDiagram) -> SignedDiagramSum {
        let mut s = SignedDiagramSum::new();
        s.add(1, l);
        s
    }

    #[test]
    fn p_k_examples() {
        assert!(op_p_k(&Partition::column(2).ferrers(), 1).unwrap().is_empty());
        assert_eq!(op_p_k(&d(&[(1, 0), (0, 1)]), 1).unwrap(), single(&d(&[(0, 0), (0, 1)])));
        assert!(op_p_k(&d(&[(1, 0), (0, 1)]), 3).unwrap().is_empty());
    }

    #[test]
    fn p_k_reorders_with_sign() {
        // (2,0) -> (0,0) lands below (1,0)
        let l = d(&[(1, 0), (2, 0)]);
        let got = op_p_k(&l, 2).unwrap();
        assert_eq!(got.coefficient(&d(&[(0, 0), (1, 0)])), -1);
        let ctx = Context::new(2);
        let f = crate::symmetric::power_sum(ctx, 2, &[0, 1]).unwrap();
        assert_eq!(got.to_polynomial(ctx).unwrap(), oracle_apply(ctx, &f, &l).unwrap());
    }

    #[test]
    fn e_k_examples() {
        // Every 2-subset of the square lands on an occupied or negative cell.
        let sq = "2,2".parse::<Partition>().unwrap().ferrers();
        assert!(op_e_k(&sq, 2).unwrap().is_empty());
        let ctx = Context::new(4);
        let e2 = crate::symmetric::elementary(ctx, 2, &[0, 1, 2, 3]).unwrap();
        assert!(oracle_apply(ctx, &e2, &sq).unwrap().is_zero());
        assert!(op_e_k(&Partition::column(2).ferrers(), 2).unwrap().is_empty());
        assert_eq!(op_e_k(&sq, 0), Err(Error::KOutOfRange { k: 0, n: 4 }));
        assert_eq!(op_e_k(&sq, 5), Err(Error::KOutOfRange { k: 5, n: 4 }));
    }

    #[test]
    fn h_k_examples() {
        assert!(op_h_k(&d(&[(0, 0)]), 1).unwrap().is_empty());
        let mu: Partition = "3,2,1".parse().unwrap();
        for (i, j) in mu.cells().collect::<Vec<_>>() {
            if mu.is_column_top(i, j).unwrap() {
                continue;
            }
            let l = mu.remove_cell(i, j).unwrap();
            let up = mu.remove_cell(i + 1, j).unwrap();
            assert_eq!(op_h_k(&l, 1).unwrap(), single(&up), "hole ({i},{j})");
        }
        let l = d(&[(1, 0), (0, 1), (1, 1), (0, 2)]);
        for pair in combinations(4, 2) {
            assert!(op_h_k(&l.select(&pair), 3).unwrap().is_empty());
        }
    }

    #[test]
    fn h_k_box_doubling() {
        for n in 1..=4 {
            for l in LatticeDiagram::all_in_box(3, 3, n) {
                let rows = l.max_row().unwrap() as usize + 1;
                let cols = l.max_col().unwrap() as usize + 1;
                for k in 1..=3 {
                    assert_eq!(
                        op_h_k(&l, k).unwrap(),
                        op_h_k_in_box(&l, k, 2 * rows, 2 * cols).unwrap(),
                        "{l} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_low_cases_agree() {
        let one: Partition = "1".parse().unwrap();
        for n in 1..=4 {
            for l in LatticeDiagram::all_in_box(3, 3, n) {
                let e1 = op_e_k(&l, 1).unwrap();
                assert_eq!(op_schur(&l, &one).unwrap(), e1);
                assert_eq!(op_h_k(&l, 1).unwrap(), e1);
                assert_eq!(op_p_k(&l, 1).unwrap(), e1);
                if n >= 2 {
                    assert_eq!(op_schur(&l, &Partition::column(2)).unwrap(), op_e_k(&l, 2).unwrap());
                }
                assert_eq!(op_schur(&l, &Partition::row(2)).unwrap(), op_h_k(&l, 2).unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let c1 = Context::new(1);
        let p2 = crate::symmetric::power_sum(c1, 2, &[0]).unwrap();
        assert!(oracle_apply(c1, &p2, &d(&[(1, 1)])).unwrap().is_zero());
        let h1 = crate::symmetric::complete(c1, 1, &[0]).unwrap();
        let hole = Partition::column(2).remove_cell(0, 0).unwrap();
        assert_eq!(oracle_apply(c1, &h1, &hole).unwrap(), Polynomial::one(c1));
        assert_eq!(op_h_k(&hole, 1).unwrap(), single(&d(&[(0, 0)])));
    }

    /// Every operator against direct differentiation on small diagrams.
    #[test]
    fn oracle_equivalence_small() {
        for n in 1..=3 {
            let ctx = Context::new(n);
            let all: Vec<usize> = (0..n).collect();
            for l in LatticeDiagram::all_in_box(3, 3, n) {
                for k in 1..=n + 1 {
                    let mut ops = vec![SymKind::Power(k), SymKind::Complete(k)];
                    if k <= n {
                        ops.push(SymKind::Elementary(k));
                    }
                    for lambda in Partition::all(k) {
                        ops.push(SymKind::Schur(lambda));
                    }
                    for op in ops {
                        let comb = apply(&l, &op).unwrap().to_polynomial(ctx).unwrap();
                        let oracle = oracle_apply(ctx, &sym_poly(ctx, &op, &all).unwrap(), &l).unwrap();
                        assert_eq!(comb, oracle, "{op} on {l}");
                    }
                }
            }
        }
    }

    #[test]
    fn laplace_examples() {
        let c2 = Context::new(2);
        let l = Partition::column(2).ferrers();
        let blocks = laplace_blocks(c2, &l, &[0, 1]).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].sign, 1);
        let blocks = laplace_blocks(c2, &l, &[0]).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(resum(c2, &blocks, &[0]), delta_l(c2, &l).unwrap());
    }

    fn resum(ctx: Context, blocks: &[LaplaceBlock], s: &[usize]) -> Polynomial {
        let others = complement_vars(ctx, s);
        let mut out = Polynomial::zero(ctx);
        for b in blocks {
            let prod = &delta_minor(ctx, s, &b.block).unwrap() * &delta_minor(ctx, &others, &b.rest).unwrap();
            out.add_scaled(&prod, &Scalar::from_integer(b.sign));
        }
        out
    }

    #[test]
    fn laplace_resummation_sweep() {
        for n in 2..=4 {
            let ctx = Context::new(n);
            for l in LatticeDiagram::all_in_box(3, 3, n).into_iter().step_by(13) {
                for k in 1..=n {
                    for s in combinations(n, k) {
                        let blocks = laplace_blocks(ctx, &l, &s).unwrap();
                        assert_eq!(resum(ctx, &blocks, &s), delta_l(ctx, &l).unwrap(), "{l} on {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn laplace_over_last_variable() {
        let mu: Partition = "2,1".parse().unwrap();
        let ctx = Context::new(3);
        let l = mu.ferrers();
        let blocks = laplace_blocks(ctx, &l, &[2]).unwrap();
        let cells: Vec<(usize, usize)> = mu.cells().collect();
        assert_eq!(blocks.len(), cells.len());
        for b in &blocks {
            let c = b.block.cells()[0];
            assert_eq!(b.rest, mu.remove_cell(c.p as usize, c.q as usize).unwrap());
        }
        assert_eq!(resum(ctx, &blocks, &[2]), delta_l(ctx, &l).unwrap());
    }

    #[test]
    fn subset_action_matches_oracle() {
        let ctx = Context::new(4);
        let l = d(&[(1, 0), (0, 1), (1, 1), (0, 2)]);
        for k in 1..=4 {
            for s in combinations(4, k) {
                for op in [SymKind::Complete(2), SymKind::Elementary(1), SymKind::Power(2), SymKind::Schur("2,1".parse().unwrap())] {
                    let comb = apply_on_subset(ctx, &l, &op, &s).unwrap().to_polynomial(ctx).unwrap();
                    assert_eq!(comb, oracle_apply_on_subset(ctx, &l, &op, &s).unwrap(), "{op} on {s:?}");
                }
            }
        }
    }

    #[test]
    fn closing_example_thresholds() {
        let ctx = Context::new(4);
        let l = d(&[(1, 0), (0, 1), (1, 1), (0, 2)]);
        for (size, threshold) in [(1, 2), (2, 3), (3, 3), (4, 2)] {
            let subsets = combinations(4, size);
            let kills = |r: usize| {
                subsets.iter().all(|s| oracle_apply_on_subset(ctx, &l, &SymKind::Complete(r), s).unwrap().is_zero())
            };
            assert!(kills(threshold), "|S|={size}");
            assert!(kills(threshold + 1), "|S|={size}");
            assert!(!kills(threshold - 1), "|S|={size}");
        }
    }
}
