//! Sparse polynomials with exact rational coefficients in the `2n`
//! variables `x1..xn, y1..yn`.
//!
//! Every polynomial carries the [`Context`] it was built in. Binary
//! operations between different contexts are errors: the `checked_*`
//! methods report them, the operator impls panic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Number of variable pairs `(x_i, y_i)` shared by every value in a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Context {
    n: usize,
}

impl Context {
    pub fn new(n: usize) -> Self {
        Context { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, other: &Context) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch { left: self.n, right: other.n })
        }
    }
}

/// A variable, 0-based within its block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl Var {
    fn slot(&self, n: usize) -> Result<usize> {
        let (i, off) = match *self {
            Var::X(i) => (i, 0),
            Var::Y(i) => (i, n),
        };
        if i < n {
            Ok(i + off)
        } else {
            Err(Error::VariableOutOfRange { var: self.to_string(), n })
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{}", i + 1),
            Var::Y(i) => write!(f, "y{}", i + 1),
        }
    }
}

type Exps = SmallVec<[u16; 12]>;

/// Exponent vector `(x-block, y-block)`, each of length `n`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vector `x1..xn, y1..yn` compared left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, 2 * n) }
    }

    pub fn from_blocks(x: &[u16], y: &[u16]) -> Self {
        assert_eq!(x.len(), y.len(), "exponent blocks must have equal length");
        let mut exps = Exps::with_capacity(2 * x.len());
        exps.extend_from_slice(x);
        exps.extend_from_slice(y);
        Monomial { exps }
    }

    /// Monomial in the x-block only.
    pub fn from_x(x: &[u16]) -> Self {
        let mut exps = Exps::from_slice(x);
        exps.resize(2 * x.len(), 0);
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn x_exps(&self) -> &[u16] {
        &self.exps[..self.n()]
    }

    pub fn y_exps(&self) -> &[u16] {
        &self.exps[self.n()..]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        let x = self.x_exps().iter().map(|&e| e as u32).sum();
        let y = self.y_exps().iter().map(|&e| e as u32).sum();
        (x, y)
    }

    pub fn is_y_free(&self) -> bool {
        self.y_exps().iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial { exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect() }
    }

    /// Multiply by a single variable slot.
    pub fn times_slot(&self, slot: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[slot] += 1;
        Monomial { exps }
    }

    fn permuted(&self, perm: &[usize]) -> Monomial {
        let n = self.n();
        let mut exps: Exps = SmallVec::from_elem(0, 2 * n);
        for i in 0..n {
            exps[perm[i]] = self.exps[i];
            exps[n + perm[i]] = self.exps[n + i];
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}|{:?}", self.x_exps(), self.y_exps())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut first = true;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let v = if slot < n { Var::X(slot) } else { Var::Y(slot - n) };
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `e (e-1) ... (e-a+1)`, the coefficient produced by `a` derivatives of `x^e`.
fn falling(e: u16, a: u16) -> u128 {
    (0..a as u128).map(|t| e as u128 - t).product()
}

fn derivative_factor(target: &Monomial, op: &Monomial) -> Scalar {
    let mut acc: u128 = 1;
    let mut big: Option<BigInt> = None;
    for (&e, &a) in target.exps.iter().zip(&op.exps) {
        if a == 0 {
            continue;
        }
        let f = falling(e, a);
        match big.as_mut() {
            Some(b) => *b *= f,
            None => match acc.checked_mul(f) {
                Some(v) => acc = v,
                None => big = Some(BigInt::from(acc) * f),
            },
        }
    }
    match big {
        Some(b) => Scalar::from_big(num_rational::BigRational::from_integer(b)),
        None => match i64::try_from(acc) {
            Ok(v) => Scalar::from_integer(v),
            Err(_) => Scalar::from_big(num_rational::BigRational::from_integer(BigInt::from(acc))),
        },
    }
}

/// Sparse polynomial: finite map from monomial to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Context,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ctx: Context) -> Self {
        Polynomial { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: Context) -> Self {
        Self::constant(ctx, Scalar::one())
    }

    pub fn constant(ctx: Context, c: Scalar) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.n), c)
    }

    pub fn monomial(ctx: Context, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.n(), ctx.n, "monomial does not match context");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ctx, terms }
    }

    pub fn var(ctx: Context, v: Var) -> Result<Self> {
        let slot = v.slot(ctx.n)?;
        Ok(Self::monomial(ctx, Monomial::one(ctx.n).times_slot(slot), Scalar::one()))
    }

    /// `x_i` for a 0-based index. Panics when out of range.
    pub fn x(ctx: Context, i: usize) -> Self {
        Self::var(ctx, Var::X(i)).expect("x index in range")
    }

    pub fn y(ctx: Context, i: usize) -> Self {
        Self::var(ctx, Var::Y(i)).expect("y index in range")
    }

    /// Sums coefficients of repeated monomials and drops zeros.
    pub fn from_terms(ctx: Context, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(ctx);
        for (m, c) in terms {
            assert_eq!(m.n(), ctx.n, "monomial does not match context");
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest monomial in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Scalar) {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), c * d);
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check(&other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check(&other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check(&other.ctx)?;
        let mut out = Polynomial::zero(self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ctx);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative.
    pub fn partial_derivative(&self, v: Var) -> Result<Polynomial> {
        let slot = v.slot(self.ctx.n)?;
        let mut out = Polynomial::zero(self.ctx);
        for (m, c) in &self.terms {
            let e = m.exps[slot];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[slot] -= 1;
            out.terms.insert(Monomial { exps }, c * &Scalar::from_integer(e as i64));
        }
        Ok(out)
    }

    /// `self(∂X; ∂Y)` applied to `target`.
    pub fn apply_diff_operator(&self, target: &Polynomial) -> Result<Polynomial> {
        self.ctx.check(&target.ctx)?;
        let mut out = Polynomial::zero(self.ctx);
        for (op_m, op_c) in &self.terms {
            for (t_m, t_c) in &target.terms {
                if !op_m.divides(t_m) {
                    continue;
                }
                let f = derivative_factor(t_m, op_m);
                out.add_term(op_m.quotient_of(t_m), &(op_c * t_c) * &f);
            }
        }
        Ok(out)
    }

    /// Derivative by a single monomial `∂^m`.
    pub fn differentiate_by(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.ctx);
        for (t_m, t_c) in &self.terms {
            if m.divides(t_m) {
                let f = derivative_factor(t_m, m);
                out.terms.insert(m.quotient_of(t_m), t_c * &f);
            }
        }
        out
    }

    /// Partition of the terms by bidegree `(x-degree, y-degree)`.
    pub fn bidegree_components(&self) -> BTreeMap<(u32, u32), Polynomial> {
        let mut out: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| Polynomial::zero(self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// `Some((r, s))` when every term has bidegree `(r, s)`; `None` for zero
    /// or mixed polynomials.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Total degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_y_free(&self) -> bool {
        self.terms.keys().all(Monomial::is_y_free)
    }

    /// The x-polynomial multiplying `y^yexp` when `self` is viewed as a
    /// polynomial in `Y` with coefficients in `Q[X]`.
    pub fn y_coefficient(&self, yexp: &[u16]) -> Polynomial {
        let mut out = Polynomial::zero(self.ctx);
        for (m, c) in &self.terms {
            if m.y_exps() == yexp {
                out.terms.insert(Monomial::from_x(m.x_exps()), c.clone());
            }
        }
        out
    }

    /// Rename variable pairs: `(x_i, y_i) -> (x_perm[i], y_perm[i])`.
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.ctx.n);
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect(),
        }
    }

    /// The same polynomial viewed in a context with at least as many variables.
    pub fn embed(&self, ctx: Context) -> Result<Polynomial> {
        if ctx.n < self.ctx.n {
            return Err(Error::ContextMismatch { left: self.ctx.n, right: ctx.n });
        }
        let mut out = Polynomial::zero(ctx);
        for (m, c) in &self.terms {
            let mut x = m.x_exps().to_vec();
            let mut y = m.y_exps().to_vec();
            x.resize(ctx.n, 0);
            y.resize(ctx.n, 0);
            out.terms.insert(Monomial::from_blocks(&x, &y), c.clone());
        }
        Ok(out)
    }

    /// `self / divisor` when the division is exact, otherwise `None`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.ctx, divisor.ctx, "context mismatch");
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.ctx);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c / lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

fn panic_ctx(a: &Polynomial, b: &Polynomial) -> ! {
    panic!("context mismatch: {} vs {} variables", a.ctx.n, b.ctx.n)
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).unwrap_or_else(|_| panic_ctx(self, rhs))
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).unwrap_or_else(|_| panic_ctx(self, rhs))
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|_| panic_ctx(self, rhs))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Ascending canonical order, e.g. `x2 - x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_one = m.degree() == 0;
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            match (abs.is_one(), is_one) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "{coeff}")?,
                (false, false) => write!(f, "{coeff}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({})", self.ctx.n, self)
    }
}

/// One serialized term: `[[x-exponents], [y-exponents], "num/den"]`.
struct TermRef<'a>(&'a Monomial, &'a Scalar);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        seq.serialize_element(self.0.x_exps())?;
        seq.serialize_element(self.0.y_exps())?;
        seq.serialize_element(&self.1.to_string())?;
        seq.end()
    }
}

struct Terms<'a>(&'a BTreeMap<Monomial, Scalar>);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (m, c) in self.0 {
            seq.serialize_element(&TermRef(m, c))?;
        }
        seq.end()
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Polynomial", 2)?;
        st.serialize_field("n", &self.ctx.n)?;
        st.serialize_field("terms", &Terms(&self.terms))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            terms: Vec<(Vec<u16>, Vec<u16>, String)>,
        }
        let raw = Raw::deserialize(d)?;
        let ctx = Context::new(raw.n);
        let mut p = Polynomial::zero(ctx);
        for (x, y, c) in raw.terms {
            if x.len() != raw.n || y.len() != raw.n {
                return Err(de::Error::custom("exponent block length does not match n"));
            }
            let c: Scalar = c.parse().map_err(de::Error::custom)?;
            p.add_term(Monomial::from_blocks(&x, &y), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(n: usize) -> Context {
        Context::new(n)
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::x(ctx(n), i)
    }

    fn y(n: usize, i: usize) -> Polynomial {
        Polynomial::y(ctx(n), i)
    }

    fn c(n: usize, num: i64, den: i64) -> Polynomial {
        Polynomial::constant(ctx(n), Scalar::new(num, den))
    }

    #[test]
    fn add_examples() {
        assert!((&x(2, 0) + &(-&x(2, 0))).is_zero());
        assert_eq!(&(&x(2, 1) - &x(2, 0)) + &x(2, 0), x(2, 1));
        let half = &c(2, 1, 2) * &(&x(2, 0) * &y(2, 0));
        assert_eq!(&half + &half, &x(2, 0) * &y(2, 0));
    }

    #[test]
    fn multiply_examples() {
        let s = &x(2, 0) + &x(2, 1);
        assert_eq!(&s * &Polynomial::one(ctx(2)), s);
        let sq = &(&x(2, 0).pow(2) + &(&c(2, 2, 1) * &(&x(2, 0) * &x(2, 1)))) + &x(2, 1).pow(2);
        assert_eq!(&s * &s, sq);
        assert!((&(&x(2, 1) - &x(2, 0)) * &Polynomial::zero(ctx(2))).is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        assert_eq!(x(2, 0).checked_add(&x(3, 0)), Err(Error::ContextMismatch { left: 2, right: 3 }));
        assert!(x(2, 0).checked_mul(&x(1, 0)).is_err());
        assert!(x(2, 0).apply_diff_operator(&x(3, 0)).is_err());
    }

    #[test]
    fn partial_derivative_examples() {
        assert_eq!(x(1, 0).pow(2).partial_derivative(Var::X(0)).unwrap(), &c(1, 2, 1) * &x(1, 0));
        let d = &(&x(2, 0) * &y(2, 1)) - &(&x(2, 1) * &y(2, 0));
        assert_eq!(d.partial_derivative(Var::Y(0)).unwrap(), -&x(2, 1));
        let s = &x(3, 0) + &x(3, 1);
        assert!(s.partial_derivative(Var::X(2)).unwrap().is_zero());
        assert!(matches!(s.partial_derivative(Var::X(3)), Err(Error::VariableOutOfRange { .. })));
    }

    #[test]
    fn apply_diff_operator_examples() {
        let op = &x(2, 0) + &x(2, 1);
        let target = &x(2, 1) - &x(2, 0);
        assert!(op.apply_diff_operator(&target).unwrap().is_zero());
        let p = &(&x(2, 0) * &y(2, 1)) + &c(2, 3, 4);
        assert_eq!(Polynomial::one(ctx(2)).apply_diff_operator(&p).unwrap(), p);
        assert_eq!(
            x(1, 0).pow(2).apply_diff_operator(&x(1, 0).pow(3)).unwrap(),
            &c(1, 6, 1) * &x(1, 0)
        );
    }

    #[test]
    fn bidegree_components_examples() {
        let d = &(&x(2, 0) * &y(2, 1)) - &(&x(2, 1) * &y(2, 0));
        let comps = d.bidegree_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&(1, 1)], d);
        let p = &Polynomial::one(ctx(1)) + &x(1, 0);
        let comps = p.bidegree_components();
        assert_eq!(comps[&(0, 0)], Polynomial::one(ctx(1)));
        assert_eq!(comps[&(1, 0)], x(1, 0));
        assert!(Polynomial::zero(ctx(1)).bidegree_components().is_empty());
    }

    #[test]
    fn display_ascending() {
        assert_eq!((&x(2, 1) - &x(2, 0)).to_string(), "x2 - x1");
        assert_eq!((&c(2, -1, 2) * &x(2, 0).pow(2)).to_string(), "-(1/2)*x1^2");
        assert_eq!(Polynomial::zero(ctx(2)).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let p = &(&x(2, 0) * &y(2, 1)) - &c(2, 1, 2);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":2,"terms":[[[0,0],[0,0],"-1/2"],[[1,0],[0,1],"1/1"]]}"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &y(2, 1);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(a.exact_div(&b).is_none());
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        let term = (proptest::collection::vec(0u16..3, 2 * n), -3i64..4, 1i64..3);
        proptest::collection::vec(term, 0..5).prop_map(move |ts| {
            Polynomial::from_terms(
                ctx(n),
                ts.into_iter().map(|(e, a, b)| (Monomial::from_blocks(&e[..n], &e[n..]), Scalar::new(a, b))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(2), b in small_poly(2), c in small_poly(2)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn operator_composition_is_multiplication(f in small_poly(2), g in small_poly(2), p in small_poly(2)) {
            let lhs = (&f * &g).apply_diff_operator(&p).unwrap();
            let rhs = f.apply_diff_operator(&g.apply_diff_operator(&p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mixed_partials_commute(p in small_poly(2), i in 0usize..4, j in 0usize..4) {
            let var = |s: usize| if s < 2 { Var::X(s) } else { Var::Y(s - 2) };
            let a = p.partial_derivative(var(i)).unwrap().partial_derivative(var(j)).unwrap();
            let b = p.partial_derivative(var(j)).unwrap().partial_derivative(var(i)).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn bidegree_components_sum_to_input(p in small_poly(3)) {
            let total = p
                .bidegree_components()
                .values()
                .fold(Polynomial::zero(p.ctx()), |acc, q| &acc + q);
            prop_assert_eq!(total, p);
        }

        #[test]
        fn json_round_trip(p in small_poly(2)) {
            let back: Polynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
