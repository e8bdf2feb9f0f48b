//! Generating sets for the vanishing ideals of `Δ_μ` and `Δ_{μ/ij}` in the
//! x variables.
//!
//! Families written with "`r > t`" are infinite. For `h_r(S)` only
//! `t < r ≤ t + |S|` is listed: the recurrence
//! `h_r = Σ_{i=1}^{|S|} (-1)^{i-1} e_i(S) h_{r-i}(S)` puts every higher
//! `h_r(S)` in the ideal those generate. For `e_r(S̄)` the family is finite
//! anyway since `e_r` vanishes for `r > |S̄|`.

use std::collections::HashSet;

use serde::Serialize;

use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::linalg::GradedIdeal;
use crate::partition::Partition;
use crate::poly::{Context, Polynomial};
use crate::scalar::Scalar;
use crate::symmetric::{complete, elementary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `h_r(S)`, `r > δ_k(μ) - k`, `|S| = k`.
    TanisakiH,
    /// `e_r(S̄)`, `r > δ_k(μ) - k`, `|S̄| = n - k`.
    TanisakiE,
    /// `h_r(X_n)`, `r > 0`.
    Coinvariant,
    /// `h_r(S)` for the `n + 1` cell partition, `k ≤ n`.
    JMu,
    /// `h_1(X_n)^{ℓ+1}`.
    H1Power,
    /// `h_1(X_n) e_r(S̄)`, `j < k ≤ β_0`, `r = δ_k(μ) - k`.
    JHatProduct,
    /// `e_r(S̄)`, `β_0 < k < μ_1`, `r = δ_k(μ) - k`.
    JHatElementary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorLabel {
    pub family: Family,
    pub k: usize,
    pub r: usize,
    /// 1-based variable numbers.
    pub subset: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    #[serde(flatten)]
    pub label: GeneratorLabel,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealPresentation {
    n: usize,
    generators: Vec<Generator>,
    #[serde(skip)]
    seen: HashSet<String>,
}

/// `h_r` of a possibly empty variable set.
fn h_of(ctx: Context, r: usize, s: &[usize]) -> Polynomial {
    if s.is_empty() {
        return if r == 0 { Polynomial::one(ctx) } else { Polynomial::zero(ctx) };
    }
    complete(ctx, r, s).expect("subset checked by caller")
}

/// `e_r` of a possibly empty variable set.
fn e_of(ctx: Context, r: usize, s: &[usize]) -> Polynomial {
    if s.is_empty() {
        return if r == 0 { Polynomial::one(ctx) } else { Polynomial::zero(ctx) };
    }
    elementary(ctx, r, s).expect("subset checked by caller")
}

fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !s.contains(v)).collect()
}

impl IdealPresentation {
    pub fn new(ctx: Context) -> Self {
        IdealPresentation { n: ctx.n(), generators: Vec::new(), seen: HashSet::new() }
    }

    pub fn ctx(&self) -> Context {
        Context::new(self.n)
    }

    /// Adds a generator unless it is zero or a scalar multiple of one already present.
    pub fn push(&mut self, polynomial: Polynomial, family: Family, k: usize, r: usize, subset: &[usize]) -> bool {
        let Some((_, lead)) = polynomial.leading_term() else {
            return false;
        };
        let key = polynomial.scale(&lead.recip()).to_string();
        if !self.seen.insert(key) {
            return false;
        }
        let label = GeneratorLabel { family, k, r, subset: subset.iter().map(|v| v + 1).collect() };
        self.generators.push(Generator { label, polynomial });
        true
    }

    pub fn extend(&mut self, other: IdealPresentation) {
        for g in other.generators {
            let subset: Vec<usize> = g.label.subset.iter().map(|v| v - 1).collect();
            self.push(g.polynomial, g.label.family, g.label.k, g.label.r, &subset);
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.polynomial.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn graded(&self, cap: Option<usize>) -> Result<GradedIdeal> {
        GradedIdeal::new(self.ctx(), self.polynomials(), cap)
    }

    fn push_h_family(&mut self, family: Family, k: usize, t: i64, s: &[usize], extra: usize) {
        let ctx = self.ctx();
        let lo = (t + 1).max(1) as usize;
        for r in lo..=lo + s.len() - 1 + extra {
            self.push(h_of(ctx, r, s), family, k, r, s);
        }
    }
}

fn threshold(mu: &Partition, k: usize) -> i64 {
    mu.delta_k(k) as i64 - k as i64
}

fn require_size(mu: &Partition, n: usize) -> Result<()> {
    if mu.size() != n {
        return Err(Error::InvalidPartition(format!("{mu} is not a partition of {n}")));
    }
    Ok(())
}

/// `⟨h_r(S) : |S| = k, r > δ_k(μ) - k⟩` for `μ ⊢ n`. `extra` lists that
/// many more degrees in each family.
pub fn tanisaki_dual_generators_with(mu: &Partition, extra: usize) -> Result<IdealPresentation> {
    let n = mu.size();
    let mut out = IdealPresentation::new(Context::new(n));
    for k in 1..=n {
        let t = threshold(mu, k);
        for s in combinations(n, k) {
            out.push_h_family(Family::TanisakiH, k, t, &s, extra);
        }
    }
    Ok(out)
}

pub fn tanisaki_dual_generators(mu: &Partition) -> Result<IdealPresentation> {
    tanisaki_dual_generators_with(mu, 0)
}

/// `⟨e_r(S̄) : |S̄| = n - k, r > δ_k(μ) - k⟩` for `0 ≤ k < n`.
pub fn tanisaki_e_generators(mu: &Partition) -> Result<IdealPresentation> {
    let n = mu.size();
    let ctx = Context::new(n);
    let mut out = IdealPresentation::new(ctx);
    for k in 0..n {
        let t = threshold(mu, k);
        for sbar in combinations(n, n - k) {
            for r in (t + 1).max(1) as usize..=sbar.len() {
                out.push(e_of(ctx, r, &sbar), Family::TanisakiE, k, r, &sbar);
            }
        }
    }
    Ok(out)
}

/// `⟨h_r(X_n) : r > 0⟩`, the ideal of the coinvariant space.
pub fn coinvariant_generators(n: usize) -> IdealPresentation {
    let ctx = Context::new(n);
    let all: Vec<usize> = (0..n).collect();
    let mut out = IdealPresentation::new(ctx);
    for r in 1..=n {
        out.push(h_of(ctx, r, &all), Family::Coinvariant, n, r, &all);
    }
    out
}

/// `J_μ`: the h-family of `μ ⊢ n + 1` restricted to `|S| ≤ n` in `n` variables.
pub fn j_mu_generators_with(mu: &Partition, n: usize, extra: usize) -> Result<IdealPresentation> {
    require_size(mu, n + 1)?;
    let mut out = IdealPresentation::new(Context::new(n));
    for k in 1..=n {
        let t = threshold(mu, k);
        for s in combinations(n, k) {
            out.push_h_family(Family::JMu, k, t, &s, extra);
        }
    }
    Ok(out)
}

pub fn j_mu_generators(mu: &Partition, n: usize) -> Result<IdealPresentation> {
    j_mu_generators_with(mu, n, 0)
}

/// How the `h_1` factor of the first `Ĵ` family is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JHatRule {
    /// `h_1 e_r(S̄)` for every `j < k ≤ β_0`, as the family is usually written.
    Literal,
    /// `h_1^ζ e_r(S̄)` with `ζ` the least `1 ≤ ζ ≤ ℓ` such that `β_ζ < k`;
    /// dropped when there is none.
    #[default]
    LeastSlide,
}

/// `Ĵ_{μ/ij}`; the hole must not be at the top of its column.
pub fn jhat_generators(mu: &Partition, i: usize, j: usize) -> Result<IdealPresentation> {
    jhat_generators_with(mu, i, j, JHatRule::default())
}

pub fn jhat_generators_with(mu: &Partition, i: usize, j: usize, rule: JHatRule) -> Result<IdealPresentation> {
    if mu.is_column_top(i, j)? {
        return Err(Error::TopOfColumn { i, j });
    }
    let n = mu.size() - 1;
    let ctx = Context::new(n);
    let all: Vec<usize> = (0..n).collect();
    let h1 = h_of(ctx, 1, &all);
    let ell = mu.cells_above(i, j)?;
    let betas: Vec<usize> = (0..=ell).map(|z| mu.corner_ne(i, j, z).map(|c| c.beta)).collect::<Result<_>>()?;
    let beta0 = betas[0];
    let mu1 = mu.row_len(0);
    let mut out = IdealPresentation::new(ctx);
    for k in j + 1..=beta0 {
        let r = threshold(mu, k);
        if r < 0 || k > n {
            continue;
        }
        let power = match rule {
            JHatRule::Literal => 1,
            JHatRule::LeastSlide => match (1..=ell).find(|&z| betas[z] < k) {
                Some(z) => z as u32,
                None => continue,
            },
        };
        let factor = h1.pow(power);
        for sbar in combinations(n, n - k) {
            out.push(&factor * &e_of(ctx, r as usize, &sbar), Family::JHatProduct, k, r as usize, &sbar);
        }
    }
    for k in beta0 + 1..mu1 {
        let r = threshold(mu, k);
        if r < 0 || k > n {
            continue;
        }
        for sbar in combinations(n, n - k) {
            out.push(e_of(ctx, r as usize, &sbar), Family::JHatElementary, k, r as usize, &sbar);
        }
    }
    Ok(out)
}

/// `Ĩ_{μ/ij} = J_μ + ⟨h_1^{ℓ+1}⟩ + Ĵ_{μ/ij}`, or the Tanisaki ideal of
/// `ν(0)` when the hole tops its column.
pub fn punctured_ideal_with(
    mu: &Partition,
    i: usize,
    j: usize,
    extra: usize,
    rule: JHatRule,
) -> Result<IdealPresentation> {
    if mu.is_column_top(i, j)? {
        let nu = mu.corner_ne(i, j, 0)?.nu;
        return tanisaki_dual_generators_with(&nu, extra);
    }
    let n = mu.size() - 1;
    let ctx = Context::new(n);
    let all: Vec<usize> = (0..n).collect();
    let ell = mu.cells_above(i, j)?;
    let mut out = j_mu_generators_with(mu, n, extra)?;
    out.push(h_of(ctx, 1, &all).pow(ell as u32 + 1), Family::H1Power, n, ell + 1, &all);
    out.extend(jhat_generators_with(mu, i, j, rule)?);
    Ok(out)
}

pub fn punctured_ideal(mu: &Partition, i: usize, j: usize) -> Result<IdealPresentation> {
    punctured_ideal_with(mu, i, j, 0, JHatRule::default())
}

/// `h_r(S) ≡ (-1)^r e_r(S̄)` modulo the coinvariant ideal.
pub fn htoe_check(s: &[usize], r: usize, n: usize) -> Result<bool> {
    htoe_holds(&coinvariant_generators(n).graded(None)?, s, r)
}

/// [`htoe_check`] against an already computed coinvariant ideal.
pub fn htoe_holds(coinvariant: &GradedIdeal, s: &[usize], r: usize) -> Result<bool> {
    let ctx = coinvariant.ctx();
    let n = ctx.n();
    if let Some(&v) = s.iter().find(|&&v| v >= n) {
        return Err(Error::VariableOutOfRange { var: format!("x{}", v + 1), n });
    }
    let sbar = complement(n, s);
    let sign = if r.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    let diff = &h_of(ctx, r, s) - &e_of(ctx, r, &sbar).scale(&sign);
    coinvariant.member(&diff)
}
