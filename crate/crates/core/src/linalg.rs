//! Exact graded linear algebra over the rationals.
//!
//! Spans are kept in reduced row echelon form keyed by pivot. Quotients
//! `R/I` of the x-polynomial ring by homogeneous ideals are measured through
//! the inverse system `I^⊥ = {f : g(∂X) f = 0 for every g ∈ I}`, whose degree
//! `d` part has the same dimension as `(R/I)_d`.

use std::collections::{BTreeMap, BTreeSet};

use crate::combinatorics::{binomial, multisets};
use crate::determinant::{delta_l, derived_delta_t};
use crate::diagram::LatticeDiagram;
use crate::error::{Error, Result};
use crate::operators::oracle_apply;
use crate::poly::{Context, Monomial, Polynomial, Var};
use crate::scalar::Scalar;
use crate::tableau::{enumerate_tableaux, TableauFlavor};

type SparseVec<K> = BTreeMap<K, Scalar>;

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, c: &Scalar, src: &SparseVec<K>) {
    for (k, v) in src {
        let add = c * v;
        match target.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(add);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &add;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

/// Reduced row echelon form of sparse vectors; pivot = largest key, pivot
/// coefficient 1, and no row mentions another row's pivot.
#[derive(Debug, Clone)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        // Rows never mention other pivots, so one pass over the pivots of `v` suffices.
        let hits: Vec<(K, Scalar)> =
            v.iter().filter(|(k, _)| self.rows.contains_key(*k)).map(|(k, c)| (k.clone(), c.clone())).collect();
        for (k, c) in hits {
            axpy(&mut out, &-c, &self.rows[&k]);
        }
        out
    }

    /// Adds `v` to the span; `false` when it was already there.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip();
        for c in r.values_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter()
    }

    pub fn row(&self, pivot: &K) -> Option<&SparseVec<K>> {
        self.rows.get(pivot)
    }
}

/// Basis of the null space of the given rows over columns `0..ncols`.
pub fn nullspace(rows: &[SparseVec<usize>], ncols: usize) -> Vec<SparseVec<usize>> {
    let mut ech = SparseEchelon::<usize>::default();
    for r in rows {
        ech.insert(r);
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| ech.row(c).is_none()) {
        let mut v = SparseVec::new();
        v.insert(free, Scalar::one());
        for (pivot, row) in ech.rows() {
            if let Some(c) = row.get(&free) {
                v.insert(*pivot, -c);
            }
        }
        out.push(v);
    }
    out
}

fn to_sparse(p: &Polynomial) -> SparseVec<Monomial> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Span of polynomials in one context, in reduced echelon form under the
/// monomial order (pivot = leading monomial).
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    ctx: Context,
    inner: SparseEchelon<Monomial>,
}

impl EchelonBasis {
    pub fn new(ctx: Context) -> Self {
        EchelonBasis { ctx, inner: SparseEchelon::default() }
    }

    pub fn from_polys<'a>(ctx: Context, polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut b = Self::new(ctx);
        for p in polys {
            b.insert(p);
        }
        b
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn insert(&mut self, p: &Polynomial) -> bool {
        assert_eq!(self.ctx, p.ctx(), "context mismatch");
        self.inner.insert(&to_sparse(p))
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(self.ctx, self.inner.reduce(&to_sparse(p)))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.inner.reduce(&to_sparse(p)).is_empty()
    }

    /// Basis polynomials in increasing pivot order.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.inner.rows().map(|(_, r)| Polynomial::from_terms(self.ctx, r.clone())).collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.inner.rows().map(|(k, _)| k)
    }

    /// Monomials appearing in some basis polynomial.
    pub fn support(&self) -> BTreeSet<Monomial> {
        self.inner.rows().flat_map(|(_, r)| r.keys().cloned()).collect()
    }
}

/// Spans indexed by bidegree `(x-degree, y-degree)`.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    ctx: Context,
    components: BTreeMap<(u32, u32), EchelonBasis>,
}

impl GradedBasis {
    pub fn new(ctx: Context) -> Self {
        GradedBasis { ctx, components: BTreeMap::new() }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    /// Inserts a bihomogeneous polynomial; zero and non-bihomogeneous input is rejected.
    pub fn insert(&mut self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(false);
        }
        let bd = p.bidegree().ok_or(Error::NotHomogeneous)?;
        Ok(self.components.entry(bd).or_insert_with(|| EchelonBasis::new(self.ctx)).insert(p))
    }

    pub fn component(&self, bidegree: (u32, u32)) -> Option<&EchelonBasis> {
        self.components.get(&bidegree)
    }

    pub fn components(&self) -> impl Iterator<Item = ((u32, u32), &EchelonBasis)> {
        self.components.iter().map(|(k, v)| (*k, v))
    }

    pub fn dim(&self) -> usize {
        self.components.values().map(EchelonBasis::len).sum()
    }

    /// Nonzero dimensions by bidegree.
    pub fn bigraded_dims(&self) -> BTreeMap<(u32, u32), usize> {
        self.components.iter().filter(|(_, b)| !b.is_empty()).map(|(k, b)| (*k, b.len())).collect()
    }

    /// Dimensions by x-degree, from degree 0 to the top nonzero one.
    pub fn x_degree_dims(&self) -> Vec<usize> {
        let top = self.components.iter().filter(|(_, b)| !b.is_empty()).map(|(k, _)| k.0).max();
        let Some(top) = top else { return Vec::new() };
        let mut out = vec![0; top as usize + 1];
        for ((a, _), b) in &self.components {
            out[*a as usize] += b.len();
        }
        out
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        p.bidegree_components()
            .iter()
            .all(|(bd, part)| self.components.get(bd).is_some_and(|b| b.contains(part)))
    }
}

fn closure_from(ctx: Context, seeds: &[Polynomial], y_too: bool) -> Result<GradedBasis> {
    let mut g = GradedBasis::new(ctx);
    for s in seeds {
        for part in s.bidegree_components().values() {
            g.insert(part)?;
        }
    }
    let vars: Vec<Var> =
        (0..ctx.n()).map(Var::X).chain((0..ctx.n()).filter(|_| y_too).map(Var::Y)).collect();
    // Derivatives only lower degrees, so finishing each component before
    // differentiating it visits everything once.
    let mut done: BTreeSet<(u32, u32)> = BTreeSet::new();
    while let Some(bd) = g
        .components
        .keys()
        .filter(|k| !done.contains(*k))
        .max_by_key(|(a, b)| (a + b, *a))
        .copied()
    {
        done.insert(bd);
        for p in g.components[&bd].basis() {
            for v in &vars {
                let dp = p.partial_derivative(*v)?;
                g.insert(&dp)?;
            }
        }
    }
    Ok(g)
}

/// Span of all iterated partial derivatives of `p`, by bidegree.
pub fn derivative_closure(p: &Polynomial) -> Result<GradedBasis> {
    closure_from(p.ctx(), std::slice::from_ref(p), true)
}

/// Span of all iterated x-derivatives of the seeds.
pub fn x_derivative_closure(ctx: Context, seeds: &[Polynomial]) -> Result<GradedBasis> {
    closure_from(ctx, seeds, false)
}

/// The bidegree `(r, 0)` part.
pub fn y_free_component(m: &GradedBasis) -> GradedBasis {
    GradedBasis {
        ctx: m.ctx,
        components: m.components.iter().filter(|(k, _)| k.1 == 0).map(|(k, v)| (*k, v.clone())).collect(),
    }
}

/// The y-free part of the derivative closure of `Δ_L`, generated from the
/// y-derivatives `m_T(∂Y) Δ_L` of top y-degree.
pub fn y_free_closure(ctx: Context, l: &LatticeDiagram) -> Result<GradedBasis> {
    if l.len() != ctx.n() {
        return Err(Error::CellCountMismatch { cells: l.len(), n: ctx.n() });
    }
    let (sorted, _) = l.normalize_sign()?;
    let mut seeds = Vec::new();
    for t in enumerate_tableaux(&sorted, TableauFlavor::IncreasingUpColumns)? {
        seeds.push(derived_delta_t(ctx, &t)?);
    }
    x_derivative_closure(ctx, &seeds)
}

/// Full bivariate closure of `Δ_L`.
pub fn diagram_space(ctx: Context, l: &LatticeDiagram) -> Result<GradedBasis> {
    derivative_closure(&delta_l(ctx, l)?)
}

/// `P(∂X) Δ_L = 0` for a y-free `P`.
pub fn annihilates(ctx: Context, p: &Polynomial, l: &LatticeDiagram) -> Result<bool> {
    if !p.is_y_free() {
        return Err(Error::NotYFree);
    }
    Ok(oracle_apply(ctx, p, l)?.is_zero())
}

/// Monomials of degree `d` in the x variables, increasing.
pub fn x_monomials(n: usize, d: usize) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = multisets(n, d)
        .into_iter()
        .map(|ms| {
            let mut x = vec![0u16; n];
            for v in ms {
                x[v] += 1;
            }
            Monomial::from_x(&x)
        })
        .collect();
    out.sort();
    out
}

/// `dim R_d` for `R = Q[x_1..x_n]`.
pub fn ring_dim(n: usize, d: usize) -> usize {
    binomial(n + d - 1, d)
}

fn check_generators(ctx: Context, gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        if g.ctx() != ctx {
            return Err(Error::ContextMismatch { left: ctx.n(), right: g.n() });
        }
        if !g.is_y_free() {
            return Err(Error::NotYFree);
        }
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous);
        }
    }
    Ok(())
}

/// Degree-`d` part of the ideal generated by `gens`, spanned directly by
/// the products `m · g`.
pub fn ideal_component(ctx: Context, gens: &[Polynomial], d: usize) -> Result<EchelonBasis> {
    check_generators(ctx, gens)?;
    let mut out = EchelonBasis::new(ctx);
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.homogeneous_degree().unwrap() as usize;
        if dg > d {
            continue;
        }
        for m in x_monomials(ctx.n(), d - dg) {
            out.insert(&(&Polynomial::monomial(ctx, m, Scalar::one()) * g));
        }
    }
    Ok(out)
}

fn monomial_factorial(m: &Monomial) -> Scalar {
    let f: u128 = m.x_exps().iter().map(|&e| crate::combinatorics::factorial(e as usize)).product();
    Scalar::from_big(num_rational::BigRational::from_integer(f.into()))
}

/// `⟨p, q⟩ = p(∂X) q` evaluated at 0, for x-polynomials of equal degree.
pub fn apolar(p: &Polynomial, q: &Polynomial) -> Scalar {
    let mut s = Scalar::zero();
    for (m, c) in p.terms() {
        let d = q.coefficient(m);
        if !d.is_zero() {
            s = &s + &(&(c * &d) * &monomial_factorial(m));
        }
    }
    s
}

/// Default bound on the degrees searched for a finite quotient.
pub fn default_degree_cap(n: usize) -> usize {
    2 * n * n + 2
}

/// The inverse system of a homogeneous x-ideal, degree by degree up to the
/// first vanishing component.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    ctx: Context,
    generators: Vec<Polynomial>,
    dual: Vec<EchelonBasis>,
}

impl GradedIdeal {
    pub fn new(ctx: Context, generators: Vec<Polynomial>, cap: Option<usize>) -> Result<Self> {
        check_generators(ctx, &generators)?;
        let cap = cap.unwrap_or_else(|| default_degree_cap(ctx.n()));
        let mut ideal = GradedIdeal { ctx, generators, dual: Vec::new() };
        for d in 0..=cap {
            let comp = ideal.next_dual_component(d);
            let empty = comp.is_empty();
            ideal.dual.push(comp);
            if empty {
                return Ok(ideal);
            }
        }
        Err(Error::QuotientNotFinite { cap })
    }

    /// `{f ∈ R_d : ∂_i f ∈ I^⊥_{d-1} for all i, ⟨g, f⟩ = 0 for generators of degree d}`.
    fn next_dual_component(&self, d: usize) -> EchelonBasis {
        let ctx = self.ctx;
        let n = ctx.n();
        let gens_d: Vec<&Polynomial> =
            self.generators.iter().filter(|g| !g.is_zero() && g.homogeneous_degree() == Some(d as u32)).collect();
        let candidates: Vec<Monomial> = if d == 0 {
            vec![Monomial::one(n)]
        } else {
            let prev = &self.dual[d - 1];
            let supp = prev.support();
            let mut set = BTreeSet::new();
            for s in &supp {
                for i in 0..n {
                    let m = s.times_slot(i);
                    let parents_ok = (0..n).filter(|&j| m.x_exps()[j] > 0).all(|j| {
                        let mut x = m.x_exps().to_vec();
                        x[j] -= 1;
                        supp.contains(&Monomial::from_x(&x))
                    });
                    if parents_ok {
                        set.insert(m);
                    }
                }
            }
            set.into_iter().collect()
        };
        let mut rows: BTreeMap<(usize, Monomial), SparseVec<usize>> = BTreeMap::new();
        if d > 0 {
            let prev = &self.dual[d - 1];
            for (col, m) in candidates.iter().enumerate() {
                for i in (0..n).filter(|&i| m.x_exps()[i] > 0) {
                    let dm = Polynomial::monomial(ctx, m.clone(), Scalar::one()).partial_derivative(Var::X(i)).unwrap();
                    for (mono, c) in prev.reduce(&dm).terms() {
                        let row = rows.entry((i, mono.clone())).or_default();
                        let e = row.entry(col).or_insert_with(Scalar::zero);
                        *e = &*e + c;
                    }
                }
            }
        }
        let mut constraint_rows: Vec<SparseVec<usize>> =
            rows.into_values().map(|r| r.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect();
        for g in gens_d {
            let row: SparseVec<usize> = candidates
                .iter()
                .enumerate()
                .filter_map(|(col, m)| {
                    let c = g.coefficient(m);
                    (!c.is_zero()).then(|| (col, &c * &monomial_factorial(m)))
                })
                .collect();
            constraint_rows.push(row);
        }
        let mut out = EchelonBasis::new(ctx);
        for v in nullspace(&constraint_rows, candidates.len()) {
            out.insert(&Polynomial::from_terms(ctx, v.into_iter().map(|(col, c)| (candidates[col].clone(), c))));
        }
        out
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `dim (R/I)_d` for `d = 0, 1, ...` up to the last nonzero degree.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.dual.iter().map(EchelonBasis::len).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    pub fn quotient_dim(&self) -> usize {
        self.dual.iter().map(EchelonBasis::len).sum()
    }

    /// Degree-`d` part of the inverse system (empty above the top degree).
    pub fn dual_component(&self, d: usize) -> Option<&EchelonBasis> {
        self.dual.get(d)
    }

    /// Ideal membership of a homogeneous x-polynomial.
    pub fn member(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        if !p.is_y_free() {
            return Err(Error::NotYFree);
        }
        let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)? as usize;
        Ok(match self.dual.get(d) {
            None => true,
            Some(comp) => comp.basis().iter().all(|f| apolar(p, f).is_zero()),
        })
    }
}

/// Quotient Hilbert function of the ideal generated by `gens`.
pub fn hilbert_function(ctx: Context, gens: &[Polynomial], cap: Option<usize>) -> Result<Vec<usize>> {
    Ok(GradedIdeal::new(ctx, gens.to_vec(), cap)?.hilbert_function())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::symmetric::{complete, elementary};

    fn x(ctx: Context, i: usize) -> Polynomial {
        Polynomial::x(ctx, i)
    }

    #[test]
    fn echelon_basics() {
        let ctx = Context::new(2);
        let mut b = EchelonBasis::new(ctx);
        assert!(b.insert(&(&x(ctx, 0) + &x(ctx, 1))));
        assert!(b.insert(&x(ctx, 0)));
        assert!(!b.insert(&x(ctx, 1)));
        assert_eq!(b.len(), 2);
        assert!(b.contains(&(&x(ctx, 0) - &x(ctx, 1))));
        assert!(!b.insert(&Polynomial::zero(ctx)));
        // fully reduced: each basis element is a single monomial now
        assert!(b.basis().iter().all(|p| p.len() == 1));
    }

    #[test]
    fn nullspace_small() {
        let row: SparseVec<usize> = [(0, Scalar::one()), (1, Scalar::one())].into_iter().collect();
        let ns = nullspace(std::slice::from_ref(&row), 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = v.iter().fold(Scalar::zero(), |acc, (k, c)| &acc + &(c * &row.get(k).cloned().unwrap_or_default()));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn closure_examples() {
        let c1 = Context::new(1);
        let m = derivative_closure(&x(c1, 0)).unwrap();
        assert_eq!(m.dim(), 2);
        let c3 = Context::new(3);
        let l = "2,1".parse::<Partition>().unwrap().ferrers();
        let m = diagram_space(c3, &l).unwrap();
        assert_eq!(m.dim(), 6);
        let y0 = y_free_component(&m);
        assert_eq!(y0.x_degree_dims(), vec![1, 2]);
        let m = diagram_space(c3, &Partition::column(3).ferrers()).unwrap();
        assert_eq!(m.dim(), 6);
        let c2 = Context::new(2);
        let m = diagram_space(c2, &Partition::column(2).ferrers()).unwrap();
        let y0 = y_free_component(&m);
        assert_eq!(y0.dim(), 2);
        assert!(y0.contains(&(&x(c2, 1) - &x(c2, 0))));
        assert!(y0.contains(&Polynomial::one(c2)));
        let m = diagram_space(c3, &Partition::row(3).ferrers()).unwrap();
        assert_eq!(y_free_component(&m).x_degree_dims(), vec![1]);
    }

    #[test]
    fn fast_y_free_route_matches_full_closure() {
        for n in 1..=4 {
            let ctx = Context::new(n);
            for l in LatticeDiagram::all_in_box(3, 3, n).into_iter().step_by(if n == 4 { 17 } else { 2 }) {
                let full = y_free_component(&diagram_space(ctx, &l).unwrap());
                let fast = y_free_closure(ctx, &l).unwrap();
                assert_eq!(full.bigraded_dims(), fast.bigraded_dims(), "{l}");
                for (_, comp) in fast.components() {
                    for p in comp.basis() {
                        assert!(full.contains(&p));
                    }
                }
                let top = full.x_degree_dims().len().saturating_sub(1) as i64;
                assert!(top <= l.row_sum());
            }
        }
    }

    #[test]
    fn n_factorial_small() {
        for n in 1..=4 {
            let ctx = Context::new(n);
            for mu in Partition::all(n) {
                assert_eq!(diagram_space(ctx, &mu.ferrers()).unwrap().dim() as u128, crate::combinatorics::factorial(n));
            }
        }
    }

    #[test]
    fn annihilation_examples() {
        let ctx = Context::new(4);
        let l = LatticeDiagram::from_pairs(&[(1, 0), (0, 1), (1, 1), (0, 2)]);
        // h3 on two variables
        assert!(annihilates(ctx, &complete(ctx, 3, &[0, 1]).unwrap(), &l).unwrap());
        assert!(!annihilates(ctx, &Polynomial::one(ctx), &l).unwrap());
        assert_eq!(annihilates(ctx, &Polynomial::y(ctx, 0), &l), Err(Error::NotYFree));
        let mu: Partition = "2,2,1".parse().unwrap();
        let c = Context::new(4);
        let hole = mu.remove_cell(0, 1).unwrap();
        assert!(!annihilates(c, &complete(c, 1, &[0, 1, 2, 3]).unwrap(), &hole).unwrap());
    }

    #[test]
    fn ideal_component_examples() {
        let c1 = Context::new(1);
        let sq = x(c1, 0).pow(2);
        assert_eq!(ideal_component(c1, std::slice::from_ref(&sq), 3).unwrap().len(), 1);
        assert!(ideal_component(c1, &[sq], 1).unwrap().is_empty());
        let c2 = Context::new(2);
        let gens = vec![complete(c2, 1, &[0, 1]).unwrap(), complete(c2, 2, &[0, 1]).unwrap()];
        let comp = ideal_component(c2, &gens, 1).unwrap();
        assert_eq!(comp.len(), 1);
        assert!(comp.contains(&(&x(c2, 0) + &x(c2, 1))));
    }

    #[test]
    fn hilbert_examples() {
        let c1 = Context::new(1);
        assert_eq!(hilbert_function(c1, &[x(c1, 0).pow(2)], None).unwrap(), vec![1, 1]);
        let c2 = Context::new(2);
        let h = |r| complete(c2, r, &[0, 1]).unwrap();
        let gens = vec![x(c2, 0).pow(2), x(c2, 1).pow(2), h(2), &h(1) * &x(c2, 0), &h(1) * &x(c2, 1), h(1).pow(2)];
        assert_eq!(hilbert_function(c2, &gens, None).unwrap(), vec![1, 2]);
        let coinv = GradedIdeal::new(c2, vec![h(1), h(2)], None).unwrap();
        assert_eq!(coinv.hilbert_function(), vec![1, 1]);
        assert!(coinv.member(&h(1)).unwrap());
        assert!(!coinv.member(&x(c2, 0)).unwrap());
        assert!(coinv.member(&Polynomial::zero(c2)).unwrap());
        assert!(coinv.member(&x(c2, 0).pow(2)).unwrap());
        assert_eq!(coinv.member(&(&x(c2, 0) + &Polynomial::one(c2))), Err(Error::NotHomogeneous));
        assert_eq!(
            hilbert_function(c2, &[x(c2, 0).pow(2)], Some(6)),
            Err(Error::QuotientNotFinite { cap: 6 })
        );
    }

    /// The inverse-system dimensions against the direct span of `m · g`.
    #[test]
    fn dual_matches_direct_components() {
        for n in 1..=3 {
            let ctx = Context::new(n);
            let all: Vec<usize> = (0..n).collect();
            let mut presentations: Vec<Vec<Polynomial>> = Vec::new();
            presentations.push((1..=n).map(|r| elementary(ctx, r, &all).unwrap()).collect());
            presentations.push((0..n).map(|i| x(ctx, i).pow(2)).collect());
            let mut mixed: Vec<Polynomial> = (0..n).map(|i| x(ctx, i).pow(3)).collect();
            mixed.push(complete(ctx, 2, &all).unwrap());
            presentations.push(mixed);
            for gens in presentations {
                let ideal = GradedIdeal::new(ctx, gens.clone(), None).unwrap();
                let h = ideal.hilbert_function();
                for d in 0..=h.len() + 1 {
                    let direct = ring_dim(n, d) - ideal_component(ctx, &gens, d).unwrap().len();
                    assert_eq!(direct, h.get(d).copied().unwrap_or(0), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn adding_a_member_changes_nothing() {
        let ctx = Context::new(3);
        let all = [0, 1, 2];
        let gens: Vec<Polynomial> = (1..=3).map(|r| complete(ctx, r, &all).unwrap()).collect();
        let ideal = GradedIdeal::new(ctx, gens.clone(), None).unwrap();
        let extra = &complete(ctx, 1, &all).unwrap() * &x(ctx, 2);
        assert!(ideal.member(&extra).unwrap());
        let mut more = gens;
        more.push(extra);
        assert_eq!(hilbert_function(ctx, &more, None).unwrap(), ideal.hilbert_function());
        assert_eq!(ideal.quotient_dim(), 6);
    }

    #[test]
    fn ring_dims() {
        assert_eq!(ring_dim(1, 0), 1);
        assert_eq!(ring_dim(3, 2), 6);
        assert_eq!(x_monomials(3, 2).len(), 6);
        assert_eq!(ring_dim(5, 10), 1001);
    }
}
