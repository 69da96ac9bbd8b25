//! Sparse multivariate polynomials over an exact coefficient ring, q-integers
//! and truncated power-series arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::{self, Cyclotomic, ExactError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("coefficient ring mismatch")]
    RingMismatch,
    #[error("constant term must be 1 to invert a series")]
    NonUnitConstantTerm,
    #[error("exponent vector has {got} entries, expected {expected}")]
    BadExponentLength { expected: usize, got: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("series has a term that the truncation cap does not bound")]
    UnboundedSeries,
}

impl From<ExactError> for PolyError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::OrderMismatch { .. } => PolyError::RingMismatch,
            other => PolyError::Parse(other.to_string()),
        }
    }
}

/// Exact coefficient ring usable inside a [`SparsePoly`].
///
/// `Ctx` identifies the concrete ring (the cyclotomic order for
/// [`Cyclotomic`], nothing for [`Rational`]).
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Ctx: Copy + Eq + fmt::Debug;
    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn from_rational_in(ctx: Self::Ctx, q: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn try_add(&self, rhs: &Self) -> Result<Self, PolyError>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, PolyError>;
    fn negate(&self) -> Self;

    fn one_in(ctx: Self::Ctx) -> Self {
        Self::from_rational_in(ctx, Rational::one())
    }
    fn from_int_in(ctx: Self::Ctx, n: i64) -> Self {
        Self::from_rational_in(ctx, exactnum::rational(n))
    }
}

impl Coeff for Rational {
    type Ctx = ();
    fn ctx(&self) {}
    fn zero_in(_: ()) -> Self {
        Rational::zero()
    }
    fn from_rational_in(_: (), q: Rational) -> Self {
        q
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        Ok(self + rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        Ok(self * rhs)
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Coeff for Cyclotomic {
    type Ctx = u32;
    fn ctx(&self) -> u32 {
        self.order()
    }
    fn zero_in(r: u32) -> Self {
        Cyclotomic::zero(r)
    }
    fn from_rational_in(r: u32, q: Rational) -> Self {
        Cyclotomic::from_rational(r, q)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        Ok(self.checked_add(rhs)?)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        Ok(self.checked_mul(rhs)?)
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Exponent vector of a monomial; its length is the number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// `x1 > x2 > …`.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which terms survive a truncated product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TruncationContext {
    /// Keep terms of total degree `<= cap`.
    TotalDegree(u32),
    /// Keep terms whose exponent in `var` is `<= cap`.
    Variable { var: usize, cap: u32 },
}

impl TruncationContext {
    pub fn keeps(&self, e: &ExponentVector) -> bool {
        match *self {
            TruncationContext::TotalDegree(cap) => e.degree() <= cap,
            TruncationContext::Variable { var, cap } => e.0[var] <= cap,
        }
    }
}

/// Sparse polynomial with exponent-vector keys.
#[derive(Clone, PartialEq)]
pub struct SparsePoly<C: Coeff> {
    nvars: usize,
    ctx: C::Ctx,
    terms: BTreeMap<ExponentVector, C>,
}

pub type RationalPoly = SparsePoly<Rational>;
pub type CyclotomicPoly = SparsePoly<Cyclotomic>;

impl<C: Coeff> SparsePoly<C> {
    pub fn zero(nvars: usize, ctx: C::Ctx) -> Self {
        SparsePoly {
            nvars,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, ctx: C::Ctx, c: C) -> Self {
        let mut p = Self::zero(nvars, ctx);
        p.add_term(ExponentVector::zeros(nvars), c);
        p
    }

    pub fn one(nvars: usize, ctx: C::Ctx) -> Self {
        Self::constant(nvars, ctx, C::one_in(ctx))
    }

    pub fn monomial(ctx: C::Ctx, exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(exps.len(), ctx);
        p.add_term(ExponentVector(exps), c);
        p
    }

    /// The single variable `x_{var}` (0-based).
    pub fn var(nvars: usize, ctx: C::Ctx, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Self::monomial(ctx, e, C::one_in(ctx))
    }

    pub fn from_terms(
        nvars: usize,
        ctx: C::Ctx,
        terms: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(nvars, ctx);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::BadExponentLength {
                    expected: nvars,
                    got: e.len(),
                });
            }
            if c.ctx() != ctx {
                return Err(PolyError::RingMismatch);
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> C::Ctx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms
            .get(&ExponentVector(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| C::zero_in(self.ctx))
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &C)> {
        self.terms.iter().next_back()
    }

    /// Adds `c · x^e` in place. Panics on a ring mismatch, which cannot happen
    /// for coefficients built from this polynomial's own context.
    pub fn add_term(&mut self, e: ExponentVector, c: C) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let sum = old.try_add(&c).expect("coefficient ring mismatch");
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check(&self, rhs: &Self) -> Result<(), PolyError> {
        if self.nvars != rhs.nvars {
            return Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: rhs.nvars,
            });
        }
        if self.ctx != rhs.ctx {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            nvars: self.nvars,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.negate()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &C) -> Result<Self, PolyError> {
        if s.ctx() != self.ctx {
            return Err(PolyError::RingMismatch);
        }
        let mut out = Self::zero(self.nvars, self.ctx);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.try_mul(s)?);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.mul_truncated(rhs, None)
    }

    /// Product with every term outside `ctx` dropped.
    pub fn mul_truncated(
        &self,
        rhs: &Self,
        ctx: Option<TruncationContext>,
    ) -> Result<Self, PolyError> {
        self.check(rhs)?;
        let mut out = Self::zero(self.nvars, self.ctx);
        for (ea, ca) in &self.terms {
            if ctx.is_some_and(|t| !t.keeps(ea)) {
                continue;
            }
            for (eb, cb) in &rhs.terms {
                let e = ea.plus(eb);
                if ctx.is_some_and(|t| !t.keeps(&e)) {
                    continue;
                }
                out.add_term(e, ca.try_mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn truncate(&self, ctx: TruncationContext) -> Self {
        SparsePoly {
            nvars: self.nvars,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| ctx.keeps(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow_truncated(&self, k: u32, ctx: Option<TruncationContext>) -> Result<Self, PolyError> {
        let mut out = Self::one(self.nvars, self.ctx);
        for _ in 0..k {
            out = out.mul_truncated(self, ctx)?;
        }
        Ok(out)
    }

    /// Sum of all coefficients (evaluation at `1, …, 1`).
    pub fn eval_at_ones(&self) -> C {
        self.terms
            .values()
            .fold(C::zero_in(self.ctx), |acc, c| acc.try_add(c).unwrap())
    }

    /// Maps every exponent vector through `f`, summing colliding terms.
    pub fn map_exponents(
        &self,
        nvars: usize,
        mut f: impl FnMut(&[u32]) -> Vec<u32>,
    ) -> Self {
        let mut out = Self::zero(nvars, self.ctx);
        for (e, c) in &self.terms {
            out.add_term(ExponentVector(f(&e.0)), c.clone());
        }
        out
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }
}

impl SparsePoly<Rational> {
    /// Embeds a rational polynomial into `Q(ζ_r)[x]`.
    pub fn to_cyclotomic(&self, r: u32) -> CyclotomicPoly {
        let mut out = CyclotomicPoly::zero(self.nvars, r);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), Cyclotomic::from_rational(r, c.clone()));
        }
        out
    }

    /// Parses the text form written by `Display`, e.g. `3/2 * x1^2 x3 + -1`.
    pub fn parse(nvars: usize, text: &str) -> Result<Self, PolyError> {
        let bad = |m: &str| PolyError::Parse(format!("{m} in {text:?}"));
        let mut p = Self::zero(nvars, ());
        let text = text.trim();
        if text == "0" {
            return Ok(p);
        }
        for term in text.split(" + ") {
            let (coeff, mono) = match term.split_once('*') {
                Some((c, m)) => (c.trim(), m.trim()),
                None if term.trim_start().starts_with('x') => ("1", term.trim()),
                None => (term.trim(), ""),
            };
            let c = exactnum::parse_rational(coeff).map_err(|_| bad("bad coefficient"))?;
            let mut e = vec![0u32; nvars];
            for factor in mono.split_whitespace() {
                let body = factor.strip_prefix('x').ok_or_else(|| bad("bad variable"))?;
                let (idx, pow) = match body.split_once('^') {
                    Some((i, k)) => (i, k.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (body, 1),
                };
                let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
                if idx == 0 || idx > nvars {
                    return Err(bad("variable index out of range"));
                }
                e[idx - 1] += pow;
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }
}

impl<C: Coeff> fmt::Display for SparsePoly<C> {
    /// Terms in decreasing graded-lex order as `c * x1^a1 … xm^am`, joined
    /// by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            let factors: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, a)
                    }
                })
                .collect();
            if !factors.is_empty() {
                write!(f, " * {}", factors.join(" "))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[{}]({})", self.nvars, self)
    }
}

#[derive(Serialize)]
struct TermRepr<'a, C: Serialize> {
    exp: &'a [u32],
    coeff: C,
}

#[derive(Serialize)]
struct PolyRepr<'a, C: Serialize> {
    vars: usize,
    terms: Vec<TermRepr<'a, C>>,
}

impl Serialize for SparsePoly<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr {
                    exp: &e.0,
                    coeff: exactnum::format_rational(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl Serialize for SparsePoly<Cyclotomic> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr { exp: &e.0, coeff: c })
                .collect(),
        }
        .serialize(s)
    }
}

/// `[k]_q = 1 + q + … + q^{k-1}` as a one-variable polynomial.
pub fn q_integer(k: u32) -> RationalPoly {
    let mut p = RationalPoly::zero(1, ());
    for j in 0..k {
        p.add_term(ExponentVector(vec![j]), Rational::one());
    }
    p
}

/// Truncated inverse of a series with constant term 1.
///
/// Writes `f = 1 - g` and sums `1 + g + g² + …` until no surviving term is
/// left. Every term of `g` must strictly increase the truncation measure,
/// which holds whenever `g` has no constant term and the cap constrains the
/// variables `g` uses.
pub fn geometric_inverse<C: Coeff>(
    f: &SparsePoly<C>,
    ctx: TruncationContext,
) -> Result<SparsePoly<C>, PolyError> {
    let n = f.nvars();
    let one = SparsePoly::<C>::one(n, f.ctx());
    let c0 = f.coeff(&vec![0; n]);
    if c0 != C::one_in(f.ctx()) {
        return Err(PolyError::NonUnitConstantTerm);
    }
    let g = one.sub(f)?.truncate(ctx);
    let grows = g.terms().all(|(e, _)| match ctx {
        TruncationContext::TotalDegree(_) => e.degree() > 0,
        TruncationContext::Variable { var, .. } => e.0[var] > 0,
    });
    if !grows {
        return Err(PolyError::UnboundedSeries);
    }
    let mut result = one.clone();
    let mut power = one;
    loop {
        power = power.mul_truncated(&g, Some(ctx))?;
        if power.is_zero() {
            break;
        }
        result = result.add(&power)?;
    }
    Ok(result)
}

/// Expansion of `1 / (1 - c·x^e)` for a single monomial, truncated.
pub fn geometric_series_monomial<C: Coeff>(
    nvars: usize,
    ctx: C::Ctx,
    exps: &[u32],
    trunc: TruncationContext,
) -> SparsePoly<C> {
    assert!(exps.iter().any(|&a| a > 0), "monomial must be non-constant");
    let mut p = SparsePoly::<C>::zero(nvars, ctx);
    let mut e = ExponentVector::zeros(nvars);
    while trunc.keeps(&e) {
        p.add_term(e.clone(), C::one_in(ctx));
        e = e.plus(&ExponentVector(exps.to_vec()));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use proptest::prelude::*;

    fn q_poly(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_terms(
            1,
            (),
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (vec![k as u32], rational(c))),
        )
        .unwrap()
    }

    #[test]
    fn basic_products() {
        let a = q_poly(&[1, 1]);
        assert_eq!(a.mul(&a).unwrap(), q_poly(&[1, 2, 1]));
        let x1x2 = RationalPoly::monomial((), vec![1, 1], rational(1));
        assert_eq!(x1x2.add(&RationalPoly::zero(2, ())).unwrap(), x1x2);
        let cube = a
            .pow_truncated(3, Some(TruncationContext::TotalDegree(2)))
            .unwrap();
        assert_eq!(cube, q_poly(&[1, 3, 3]));
    }

    #[test]
    fn mismatches() {
        let a = RationalPoly::one(2, ());
        let b = RationalPoly::one(3, ());
        assert_eq!(
            a.mul(&b).unwrap_err(),
            PolyError::VariableCountMismatch { left: 2, right: 3 }
        );
        let c = CyclotomicPoly::one(1, 3);
        let d = CyclotomicPoly::one(1, 4);
        assert_eq!(c.add(&d).unwrap_err(), PolyError::RingMismatch);
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(0), RationalPoly::zero(1, ()));
        assert_eq!(q_integer(1), q_poly(&[1]));
        assert_eq!(q_integer(2), q_poly(&[1, 1]));
        assert_eq!(q_integer(4).eval_at_ones(), rational(4));
    }

    #[test]
    fn geometric_inverses() {
        let f = q_poly(&[1, -1]);
        let inv = geometric_inverse(&f, TruncationContext::TotalDegree(3)).unwrap();
        assert_eq!(inv, q_poly(&[1, 1, 1, 1]));

        // 1 - t^2 q^2 in variables (t, q), cap on t at 3
        let f = RationalPoly::from_terms(2, (), [(vec![0, 0], rational(1)), (vec![2, 2], rational(-1))])
            .unwrap();
        let ctx = TruncationContext::Variable { var: 0, cap: 3 };
        let inv = geometric_inverse(&f, ctx).unwrap();
        let expected =
            RationalPoly::from_terms(2, (), [(vec![0, 0], rational(1)), (vec![2, 2], rational(1))])
                .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(geometric_series_monomial::<Rational>(2, (), &[2, 2], ctx), expected);

        let one = RationalPoly::one(2, ());
        assert_eq!(geometric_inverse(&one, ctx).unwrap(), one);
        assert_eq!(
            geometric_inverse(&q_poly(&[2, 1]), ctx).unwrap_err(),
            PolyError::NonUnitConstantTerm
        );
    }

    #[test]
    fn text_and_json_forms() {
        let p = RationalPoly::from_terms(
            3,
            (),
            [
                (vec![2, 0, 1], exactnum::ratio(3, 2)),
                (vec![0, 0, 0], rational(-1)),
                (vec![0, 1, 0], rational(1)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3/2 * x1^2 x3 + 1 * x2 + -1");
        assert_eq!(RationalPoly::parse(3, &p.to_string()).unwrap(), p);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"vars":3,"terms":[{"exp":[2,0,1],"coeff":"3/2"},{"exp":[0,1,0],"coeff":"1"},{"exp":[0,0,0],"coeff":"-1"}]}"#
        );
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec(
            (prop::collection::vec(0u32..4, nvars), -5i64..=5, 1i64..=3),
            0..6,
        )
        .prop_map(move |ts| {
            RationalPoly::from_terms(
                nvars,
                (),
                ts.into_iter().map(|(e, a, b)| (e, exactnum::ratio(a, b))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(p in arb_poly(3)) {
            prop_assert_eq!(RationalPoly::parse(3, &p.to_string()).unwrap(), p);
        }

        #[test]
        fn truncated_product_matches_exact((a, b, c) in (arb_poly(2), arb_poly(2), arb_poly(2)), cap in 0u32..6) {
            let t = Some(TruncationContext::TotalDegree(cap));
            let exact = a.mul(&b).unwrap().truncate(TruncationContext::TotalDegree(cap));
            prop_assert_eq!(a.mul_truncated(&b, t).unwrap(), exact);
            let left = a.mul_truncated(&b, t).unwrap().mul_truncated(&c, t).unwrap();
            let right = a.mul_truncated(&b.mul_truncated(&c, t).unwrap(), t).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn q_integer_product_at_one(a in 0u32..12, b in 0u32..12) {
            let p = q_integer(a).mul(&q_integer(b)).unwrap();
            prop_assert_eq!(p.eval_at_ones(), rational((a * b) as i64));
        }
    }
}
