//! Symmetric polynomials in a subset of the x variables.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{combinations, multisets};
use crate::determinant::det_cofactor;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Context, Monomial, Polynomial};
use crate::scalar::Scalar;
use crate::tableau::{enumerate_tableaux, TableauFlavor};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymKind {
    Power(usize),
    Elementary(usize),
    Complete(usize),
    Schur(Partition),
}

impl fmt::Display for SymKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymKind::Power(k) => write!(f, "p:{k}"),
            SymKind::Elementary(k) => write!(f, "e:{k}"),
            SymKind::Complete(k) => write!(f, "h:{k}"),
            SymKind::Schur(l) => write!(f, "s:{l}"),
        }
    }
}

impl FromStr for SymKind {
    type Err = Error;

    /// `p:k`, `e:k`, `h:k` or `s:λ` with `λ` comma separated.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed operator {s:?}; expected p:k, e:k, h:k or s:λ"));
        let (kind, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        let k = || arg.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "p" => Ok(SymKind::Power(k()?)),
            "e" => Ok(SymKind::Elementary(k()?)),
            "h" => Ok(SymKind::Complete(k()?)),
            "s" => Ok(SymKind::Schur(arg.parse()?)),
            _ => Err(bad()),
        }
    }
}

/// Sorted, deduplicated, range-checked variable subset.
pub fn check_subset(ctx: Context, s: &[usize]) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    if let Some(&v) = s.iter().find(|&&v| v >= ctx.n()) {
        return Err(Error::VariableOutOfRange { var: format!("x{}", v + 1), n: ctx.n() });
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

fn x_monomial(ctx: Context, vars: impl IntoIterator<Item = usize>) -> Monomial {
    let mut x = vec![0u16; ctx.n()];
    for v in vars {
        x[v] += 1;
    }
    Monomial::from_x(&x)
}

pub fn power_sum(ctx: Context, k: usize, s: &[usize]) -> Result<Polynomial> {
    let s = check_subset(ctx, s)?;
    Ok(Polynomial::from_terms(
        ctx,
        s.iter().map(|&v| (x_monomial(ctx, std::iter::repeat_n(v, k)), Scalar::one())),
    ))
}

pub fn elementary(ctx: Context, k: usize, s: &[usize]) -> Result<Polynomial> {
    let s = check_subset(ctx, s)?;
    Ok(Polynomial::from_terms(
        ctx,
        combinations(s.len(), k).into_iter().map(|c| (x_monomial(ctx, c.iter().map(|&i| s[i])), Scalar::one())),
    ))
}

pub fn complete(ctx: Context, k: usize, s: &[usize]) -> Result<Polynomial> {
    let s = check_subset(ctx, s)?;
    Ok(Polynomial::from_terms(
        ctx,
        multisets(s.len(), k).into_iter().map(|c| (x_monomial(ctx, c.iter().map(|&i| s[i])), Scalar::one())),
    ))
}

/// `s_λ(S)` as a sum over column-strict tableaux.
pub fn schur(ctx: Context, lambda: &Partition, s: &[usize]) -> Result<Polynomial> {
    let s = check_subset(ctx, s)?;
    let tableaux = enumerate_tableaux(&lambda.ferrers(), TableauFlavor::ColumnStrict { max_entry: s.len() })?;
    let mut out = Polynomial::zero(ctx);
    for t in tableaux {
        out = &out + &Polynomial::monomial(ctx, x_monomial(ctx, t.entries().iter().map(|&e| s[e - 1])), Scalar::one());
    }
    Ok(out)
}

/// `s_λ(S) = det ‖e_{λ'_i + j - i}(S)‖`.
pub fn schur_jacobi_trudi(ctx: Context, lambda: &Partition, s: &[usize]) -> Result<Polynomial> {
    let s = check_subset(ctx, s)?;
    let conj = lambda.conjugate();
    let l = conj.num_parts();
    let mut matrix = Vec::with_capacity(l);
    for i in 0..l {
        let mut row = Vec::with_capacity(l);
        for j in 0..l {
            let k = conj.parts()[i] as i64 + j as i64 - i as i64;
            row.push(if k < 0 { Polynomial::zero(ctx) } else { elementary(ctx, k as usize, &s)? });
        }
        matrix.push(row);
    }
    Ok(det_cofactor(ctx, &matrix))
}

pub fn sym_poly(ctx: Context, kind: &SymKind, s: &[usize]) -> Result<Polynomial> {
    match kind {
        SymKind::Power(k) => power_sum(ctx, *k, s),
        SymKind::Elementary(k) => elementary(ctx, *k, s),
        SymKind::Complete(k) => complete(ctx, *k, s),
        SymKind::Schur(l) => schur(ctx, l, s),
    }
}
