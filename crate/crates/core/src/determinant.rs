//! Lattice diagram determinants and their expansion over tableaux.
//!
//! `Δ_L = det ‖ x_i^{p_j} y_i^{q_j} / (p_j! q_j!) ‖` with rows indexed by
//! variables and columns by the cells of `L` in the order given.

use crate::combinatorics::{factorial, permutation_sign, permutations_with_sign};
use crate::diagram::{Cell, LatticeDiagram};
use crate::error::{Error, Result};
use crate::poly::{Context, Monomial, Polynomial};
use crate::scalar::Scalar;
use crate::tableau::{enumerate_tableaux, Tableau, TableauFlavor};

/// Largest size handled by direct permutation expansion.
pub const EXPANSION_LIMIT: usize = 6;

fn inverse_factorial(k: i32) -> Scalar {
    Scalar::from_big(num_rational::BigRational::new(1.into(), factorial(k as usize).into()))
}

/// `∏ 1/(p! q!)` over the cells.
pub fn normalizer(cells: &[Cell]) -> Scalar {
    cells.iter().fold(Scalar::one(), |acc, c| &(&acc * &inverse_factorial(c.p)) * &inverse_factorial(c.q))
}

/// `Σ_σ sgn(σ) ∏_j x_{vars[σ(j)]}^{p_j} y_{vars[σ(j)]}^{q_j}`, scaled by `coeff`.
fn alternant(ctx: Context, vars: &[usize], cells: &[Cell], coeff: &Scalar) -> Polynomial {
    let n = ctx.n();
    let mut out = Polynomial::zero(ctx);
    let neg = -coeff;
    for (perm, sign) in permutations_with_sign(cells.len()) {
        let mut x = vec![0u16; n];
        let mut y = vec![0u16; n];
        for (j, c) in cells.iter().enumerate() {
            let v = vars[perm[j]];
            x[v] += c.p as u16;
            y[v] += c.q as u16;
        }
        out.add_term(Monomial::from_blocks(&x, &y), if sign > 0 { coeff.clone() } else { neg.clone() });
    }
    out
}

/// The matrix `x_v^{p} y_v^{q} / (p! q!)`, rows `vars`, columns `cells`.
pub fn lattice_matrix(ctx: Context, vars: &[usize], cells: &[Cell]) -> Vec<Vec<Polynomial>> {
    let n = ctx.n();
    vars.iter()
        .map(|&v| {
            cells
                .iter()
                .map(|c| {
                    let mut x = vec![0u16; n];
                    let mut y = vec![0u16; n];
                    x[v] = c.p as u16;
                    y[v] = c.q as u16;
                    let k = &inverse_factorial(c.p) * &inverse_factorial(c.q);
                    Polynomial::monomial(ctx, Monomial::from_blocks(&x, &y), k)
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(ctx: Context, m: &[Vec<Polynomial>]) -> Polynomial {
    fn rec(ctx: Context, m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
        if cols.is_empty() {
            return Polynomial::one(ctx);
        }
        let mut out = Polynomial::zero(ctx);
        for (k, &c) in cols.iter().enumerate() {
            if m[row][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
            let minor = rec(ctx, m, row + 1, &rest);
            let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            out.add_scaled(&(&m[row][c] * &minor), &sign);
        }
        out
    }
    let cols: Vec<usize> = (0..m.len()).collect();
    rec(ctx, m, 0, &cols)
}

/// Fraction-free Gaussian elimination.
pub fn det_bareiss(ctx: Context, m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut prev = Polynomial::one(ctx);
    let mut negate = false;
    for i in 0..k {
        let Some(r) = (i..k).find(|&r| !a[r][i].is_zero()) else {
            return Polynomial::zero(ctx);
        };
        if r != i {
            a.swap(r, i);
            negate = !negate;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let num = &(&a[r][c] * &a[i][i]) - &(&a[r][i] * &a[i][c]);
                a[r][c] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
            a[r][i] = Polynomial::zero(ctx);
        }
        prev = a[i][i].clone();
    }
    let det = if k == 0 { Polynomial::one(ctx) } else { a[k - 1][k - 1].clone() };
    if negate {
        -&det
    } else {
        det
    }
}

/// `Δ_L(S; S^Y)`: the determinant on the variable pairs `vars` (0-based).
pub fn delta_minor(ctx: Context, vars: &[usize], l: &LatticeDiagram) -> Result<Polynomial> {
    if vars.len() != l.len() {
        return Err(Error::CellCountMismatch { cells: l.len(), n: vars.len() });
    }
    if let Some(&v) = vars.iter().find(|&&v| v >= ctx.n()) {
        return Err(Error::VariableOutOfRange { var: format!("x{}", v + 1), n: ctx.n() });
    }
    if l.epsilon() == 0 {
        return Ok(Polynomial::zero(ctx));
    }
    if l.len() <= EXPANSION_LIMIT {
        Ok(alternant(ctx, vars, l.cells(), &normalizer(l.cells())))
    } else {
        Ok(det_bareiss(ctx, &lattice_matrix(ctx, vars, l.cells())))
    }
}

/// `Δ_L` on all `n` variable pairs of the context.
pub fn delta_l(ctx: Context, l: &LatticeDiagram) -> Result<Polynomial> {
    if l.len() != ctx.n() {
        return Err(Error::CellCountMismatch { cells: l.len(), n: ctx.n() });
    }
    let vars: Vec<usize> = (0..ctx.n()).collect();
    delta_minor(ctx, &vars, l)
}

/// Same tableau with each column's entries sorted upward.
fn column_sorted(t: &Tableau) -> Vec<usize> {
    let cells = t.shape().cells();
    let mut entries = t.entries().to_vec();
    let mut start = 0;
    for i in 1..=cells.len() {
        if i == cells.len() || cells[i].q != cells[start].q {
            entries[start..i].sort_unstable();
            start = i;
        }
    }
    entries
}

/// `Δ_T(X)`: the product of column alternants `det ‖x_m^h‖` (entries `m`
/// and heights `h` ascending), times the sign of the column-sorted filling.
/// This is the coefficient of `m_T(Y)` in `Δ_L / ∏ 1/(p! q!)`.
pub fn delta_t(ctx: Context, t: &Tableau) -> Result<Polynomial> {
    let n = t.len();
    if ctx.n() != n {
        return Err(Error::CellCountMismatch { cells: n, n: ctx.n() });
    }
    if t.entries().iter().any(|&e| e == 0 || e > n) || t.column_sets().iter().map(|s| s.len()).sum::<usize>() != n {
        return Err(Error::InvalidTableau(format!("{t} is not injective")));
    }
    let sorted = column_sorted(t);
    let sign = permutation_sign(&sorted);
    let cells = t.shape().cells();
    let mut out = Polynomial::constant(ctx, Scalar::from_integer(sign));
    let mut start = 0;
    for i in 1..=n {
        if i == n || cells[i].q != cells[start].q {
            let vars: Vec<usize> = sorted[start..i].iter().map(|e| e - 1).collect();
            let heights: Vec<Cell> = cells[start..i].iter().map(|c| Cell::new(c.p, 0)).collect();
            out = &out * &alternant(ctx, &vars, &heights, &Scalar::one());
            start = i;
        }
    }
    Ok(out)
}

/// `m_T(∂Y) Δ_L`, which equals `Δ_T` times `∏ 1/p!` over the cells.
pub fn derived_delta_t(ctx: Context, t: &Tableau) -> Result<Polynomial> {
    let k = t.shape().cells().iter().fold(Scalar::one(), |acc, c| &acc * &inverse_factorial(c.p));
    Ok(delta_t(ctx, t)?.scale(&k))
}

#[derive(Debug, Clone)]
pub struct ExpansionTerm {
    pub y_monomial: Monomial,
    pub tableau: Tableau,
    pub delta_t: Polynomial,
}

/// `Δ_L = prefactor · Σ m_T(Y) Δ_T(X)`.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub prefactor: Scalar,
    pub terms: Vec<ExpansionTerm>,
}

impl Expansion {
    pub fn reconstruct(&self, ctx: Context) -> Polynomial {
        let mut out = Polynomial::zero(ctx);
        for t in &self.terms {
            let y = Polynomial::monomial(ctx, t.y_monomial.clone(), Scalar::one());
            out.add_scaled(&(&y * &t.delta_t), &self.prefactor);
        }
        out
    }
}

/// Expansion of `Δ_L` over tableaux increasing up the columns.
pub fn expand_delta(ctx: Context, l: &LatticeDiagram) -> Result<Expansion> {
    expand_delta_over(ctx, l, TableauFlavor::IncreasingUpColumns)
}

/// Expansion indexed by tableaux of the given flavor. Only
/// [`TableauFlavor::IncreasingUpColumns`] picks one tableau per column-set
/// class; other flavors are exposed so the choice can be tested.
pub fn expand_delta_over(ctx: Context, l: &LatticeDiagram, flavor: TableauFlavor) -> Result<Expansion> {
    if l.len() != ctx.n() {
        return Err(Error::CellCountMismatch { cells: l.len(), n: ctx.n() });
    }
    let (sorted, sign) = l.normalize_sign()?;
    let prefactor = &normalizer(sorted.cells()) * &Scalar::from_integer(sign);
    let mut terms = Vec::new();
    for t in enumerate_tableaux(&sorted, flavor)? {
        let delta_t = delta_t(ctx, &t)?;
        terms.push(ExpansionTerm { y_monomial: t.y_monomial(ctx.n()), tableau: t, delta_t });
    }
    Ok(Expansion { prefactor, terms })
}
