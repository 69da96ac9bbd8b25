//! Checks of the generating-function identities, trace identities and
//! multiplicity theorems. Each verifier computes two sides along different
//! routes and reports the first coefficient where they disagree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::chars::{stembridge_with, theorem_main_report, CharacterTable};
use crate::coinv::{act_monomial_power, descent_monomial, straightener, DescentCharacters, DescentClass};
use crate::exactnum::{Cyclotomic, Rational};
use crate::group::{enumerate, ColoredPerm, GroupParams, Which};
use crate::partition::{dominated_by, r_partitions, RPartition};
use crate::poly::{
    geometric_series_monomial, q_integer, Coeff, ExponentVector, RationalPoly, SparsePoly,
    TruncationContext,
};
use crate::tabx::{all_orbits, enumerate_all_syt, enumerate_rssyt, enumerate_syt};
use crate::Error;

/// Default cap on the `t`-degree in the Carlitz identities.
pub const DEFAULT_TCAP: u32 = 8;
/// Default cap on degrees or part sizes in the trace identities.
pub const DEFAULT_CAP: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verifier run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Option<GroupParams>,
    pub caps: BTreeMap<String, u32>,
    /// Number of individual comparisons made.
    pub compared: u64,
    pub pass: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerificationReport {
    pub fn new(identity: &str, params: Option<GroupParams>) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params,
            caps: BTreeMap::new(),
            compared: 0,
            pass: true,
            first_discrepancy: None,
        }
    }

    pub fn with_cap(mut self, name: &str, value: u32) -> Self {
        self.caps.insert(name.to_string(), value);
        self
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + Display>(&mut self, location: impl Display, lhs: &T, rhs: &T) {
        self.compared += 1;
        if lhs != rhs {
            self.fail(location, lhs, rhs);
        }
    }

    pub fn fail(&mut self, location: impl Display, lhs: impl Display, rhs: impl Display) {
        self.pass = false;
        if self.first_discrepancy.is_none() {
            self.first_discrepancy = Some(Discrepancy {
                location: location.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Compares two polynomials coefficient by coefficient.
    pub fn check_polys<C: Coeff>(&mut self, label: &str, lhs: &SparsePoly<C>, rhs: &SparsePoly<C>) {
        let keys: BTreeSet<&ExponentVector> = lhs.terms().chain(rhs.terms()).map(|(e, _)| e).collect();
        for e in keys {
            self.check(format!("{label} at {:?}", e.0), &lhs.coeff(&e.0), &rhs.coeff(&e.0));
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.compared += other.compared;
        if !other.pass {
            self.pass = false;
            if self.first_discrepancy.is_none() {
                self.first_discrepancy = other.first_discrepancy;
            }
        }
    }
}

fn one_var(exps: impl IntoIterator<Item = u32>) -> RationalPoly {
    let mut p = RationalPoly::zero(1, ());
    for e in exps {
        p.add_term(ExponentVector(vec![e]), Rational::one());
    }
    p
}

/// `Σ_{γ∈Γ} q^{fmaj(γ)} = [nd]_q ∏_{i<n} [ri]_q`.
pub fn verify_fmaj_product(params: &GroupParams) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("fmaj-product", Some(*params));
    let lhs = one_var(enumerate(params, Which::Gamma)?.iter().map(|g| g.stats().fmaj));
    let mut rhs = q_integer(params.n * params.d);
    for i in 1..params.n {
        rhs = rhs.mul(&q_integer(params.r * i))?;
    }
    report.check_polys("q", &lhs, &rhs);
    Ok(report)
}

/// `q_1^r ⋯ q_i^r` (or with exponent `e`) as an exponent vector in `n` variables.
fn prefix(n: usize, i: usize, e: u32) -> Vec<u32> {
    (0..n).map(|k| if k < i { e } else { 0 }).collect()
}

/// `1/(1 - q_1^d⋯q_n^d) · ∏_{i<n} 1/(1 - q_1^r⋯q_i^r)`, truncated.
fn invariant_series<C: Coeff>(params: &GroupParams, ctx: C::Ctx, trunc: TruncationContext) -> Result<SparsePoly<C>, Error> {
    let n = params.n as usize;
    let mut out = geometric_series_monomial::<C>(n, ctx, &prefix(n, n, params.d), trunc);
    for i in 1..n {
        let g = geometric_series_monomial::<C>(n, ctx, &prefix(n, i, params.r), trunc);
        out = out.mul_truncated(&g, Some(trunc))?;
    }
    Ok(out)
}

fn multinomial_of(lambda: &[u32]) -> BigInt {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &a in lambda {
        *counts.entry(a).or_default() += 1;
    }
    let fact = |k: u64| (1..=k).fold(BigInt::one(), |acc, x| acc * x);
    counts.values().fold(fact(lambda.len() as u64), |acc, &m| acc / fact(m))
}

/// Partitions with at most `n` parts (zeros padded) and parts at most `cap`.
fn bounded_partitions(n: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..=max {
            cur.push(a);
            rec(n, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, cap, &mut Vec::new(), &mut out);
    out
}

/// Monomials counted by exponent partition against the descent basis times
/// the invariant series. `strict_paper` drops the `q_n^{f_n}` factor from the
/// numerator.
pub fn verify_pri(params: &GroupParams, cap: u32, strict_paper: bool) -> Result<VerificationReport, Error> {
    let name = if strict_paper { "pri (strict)" } else { "pri" };
    let mut report = VerificationReport::new(name, Some(*params)).with_cap("cap", cap);
    let n = params.n as usize;
    let mut lhs = RationalPoly::zero(n, ());
    for lambda in bounded_partitions(n, cap) {
        let m = multinomial_of(&lambda);
        lhs.add_term(ExponentVector(lambda), Rational::from_integer(m));
    }
    let trunc = TruncationContext::Variable { var: 0, cap };
    let mut numerator = RationalPoly::zero(n, ());
    for g in enumerate(params, Which::Gamma)? {
        let mut f = g.stats().f_vector;
        if strict_paper {
            f[n - 1] = 0;
        }
        numerator.add_term(ExponentVector(f), Rational::one());
    }
    let rhs = numerator.mul_truncated(&invariant_series::<Rational>(params, (), trunc)?, Some(trunc))?;
    report.check_polys("q", &lhs, &rhs);
    Ok(report)
}

/// Which Carlitz identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarlitzVariant {
    /// Sum over `Γ`, last denominator factor `1 - t^d q^{nd}`.
    H,
    /// Sum over `G(r,n)`, last denominator factor `1 - t^r q^{nr}`.
    G,
}

/// `Σ_k [k+1]_q^n t^k = Σ t^{fdes} q^{fmaj} / ((1-t) ∏_{i<n}(1 - t^r q^{ri}) (1 - t^d q^{nd}))`
/// through `t^K`. Variable 0 is `t`, variable 1 is `q`.
pub fn verify_carlitz(params: &GroupParams, tcap: u32, variant: CarlitzVariant) -> Result<VerificationReport, Error> {
    let name = match variant {
        CarlitzVariant::H => "carlitz",
        CarlitzVariant::G => "carlitz-g",
    };
    let mut report = VerificationReport::new(name, Some(*params)).with_cap("tcap", tcap);
    let (r, n) = (params.r, params.n);
    let mut lhs = RationalPoly::zero(2, ());
    for k in 0..=tcap {
        let qk = q_integer(k + 1).pow_truncated(n, None)?;
        for (e, c) in qk.terms() {
            lhs.add_term(ExponentVector(vec![k, e.0[0]]), c.clone());
        }
    }
    let (elements, last) = match variant {
        CarlitzVariant::H => (enumerate(params, Which::Gamma)?, params.d),
        CarlitzVariant::G => (enumerate(&GroupParams::wreath(r, n)?, Which::G)?, r),
    };
    let mut rhs = RationalPoly::zero(2, ());
    for g in &elements {
        let s = g.stats();
        rhs.add_term(ExponentVector(vec![s.fdes, s.fmaj]), Rational::one());
    }
    let trunc = TruncationContext::Variable { var: 0, cap: tcap };
    let mut factors = vec![vec![1, 0], vec![last, n * last]];
    factors.extend((1..n).map(|i| vec![r, r * i]));
    for f in factors {
        rhs = rhs.mul_truncated(&geometric_series_monomial::<Rational>(2, (), &f, trunc), Some(trunc))?;
    }
    report.check_polys("(t,q)", &lhs, &rhs.truncate(trunc));
    Ok(report)
}

/// Reverse semistandard fillings with entries `≤ B` against pairs (standard
/// tableau, gap vector), both weighted by `q`-monomials.
pub fn verify_stanley(shape: &RPartition, bound: u32) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("stanley", None).with_cap("bound", bound);
    let r = shape.r() as u32;
    let n = shape.size() as usize;
    let mut lhs = RationalPoly::zero(n, ());
    for t in enumerate_rssyt(shape, bound) {
        lhs.add_term(ExponentVector(t.theta().iter().map(|v| v - 1).collect()), Rational::one());
    }
    let mut rhs = RationalPoly::zero(n, ());
    for t in enumerate_syt(shape)? {
        let f = t.stats().f_vector;
        let first = f.first().copied().unwrap_or(0);
        if n > 0 && first + 1 > bound {
            continue;
        }
        let budget = if n == 0 { 0 } else { (bound - 1 - first) / r };
        for delta in compositions_up_to(n, budget) {
            let mut e = f.clone();
            for (j, &dj) in delta.iter().enumerate() {
                for ek in &mut e[..=j] {
                    *ek += r * dj;
                }
            }
            rhs.add_term(ExponentVector(e), Rational::one());
        }
    }
    report.check_polys(&format!("shape {shape}"), &lhs, &rhs);
    Ok(report)
}

/// Vectors of `n` nonnegative integers with sum at most `budget`.
fn compositions_up_to(n: usize, budget: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, budget, &mut Vec::new(), &mut out);
    out
}

/// The Stanley check over every shape of `r` components and `n` cells.
pub fn verify_stanley_all(r: usize, n: u32, bound: u32) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("stanley", None).with_cap("bound", bound);
    for shape in r_partitions(r, n) {
        report.absorb(verify_stanley(&shape, bound)?);
    }
    Ok(report)
}

/// Trace of `h` on all polynomials against its trace on the coinvariant
/// algebra times the invariant series, up to total degree `cap`.
pub fn verify_lemma_ser(params: &GroupParams, h: &ColoredPerm, cap: u32) -> Result<VerificationReport, Error> {
    let desc = DescentCharacters::compute(params)?;
    let mut report = VerificationReport::new("ser", Some(*params)).with_cap("cap", cap);
    let idx = desc
        .elements
        .iter()
        .position(|x| x == h)
        .ok_or_else(|| crate::group::GroupError::NotInH(h.to_string()))?;
    ser_for(&desc, idx, cap, &mut report)?;
    Ok(report)
}

fn ser_for(desc: &DescentCharacters, idx: usize, cap: u32, report: &mut VerificationReport) -> Result<(), Error> {
    let params = &desc.params;
    let h = &desc.elements[idx];
    let trunc = TruncationContext::TotalDegree(cap);
    let lhs = crate::coinv::trace_polynomial_ring(h, cap);
    let series = invariant_series::<Cyclotomic>(params, params.r, trunc)?;
    let rhs = desc.coinvariant_trace(idx).mul_truncated(&series, Some(trunc))?;
    report.check_polys(&format!("h = {h}"), &lhs, &rhs);
    Ok(())
}

/// The trace identity for every element of `H`.
pub fn verify_lemma_ser_all(params: &GroupParams, cap: u32) -> Result<VerificationReport, Error> {
    let desc = DescentCharacters::compute(params)?;
    let mut report = VerificationReport::new("ser", Some(*params)).with_cap("cap", cap);
    for idx in 0..desc.elements.len() {
        ser_for(&desc, idx, cap, &mut report)?;
    }
    Ok(report)
}

/// Shifting a tableau raises every `f_i` by one when `n` is not in the last
/// component; shifting the colors of `g` with `c_n = 0` by `i` raises fdes by
/// `i` and fmaj by `n·i`.
pub fn verify_shift_lemmas(max_r: u32, max_n_tableaux: u32, max_n_elements: u32) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("shift-lemmas", None)
        .with_cap("r", max_r)
        .with_cap("n_tableaux", max_n_tableaux)
        .with_cap("n_elements", max_n_elements);
    for r in 1..=max_r as usize {
        for n in 1..=max_n_tableaux {
            for t in enumerate_all_syt(r, n)? {
                if t.component_of(n) == Some(r - 1) {
                    continue;
                }
                let s = t.shifted();
                let raised: Vec<u32> = t.stats().f_vector.iter().map(|f| f + 1).collect();
                report.check(format!("tableau {t} (r={r})"), &format!("{:?}", s.stats().f_vector), &format!("{raised:?}"));
            }
        }
    }
    for r in 1..=max_r {
        for n in 1..=max_n_elements {
            for g in enumerate(&GroupParams::wreath(r, n)?, Which::G)? {
                if !g.in_color_class(0)? {
                    continue;
                }
                let s = g.stats();
                for i in 0..r {
                    let t = g.shift_colors(i as i64).stats();
                    report.check(format!("fdes of ({g})^{i}"), &t.fdes, &(s.fdes + i));
                    report.check(format!("fmaj of ({g})^{i}"), &t.fmaj, &(s.fmaj + n * i));
                }
            }
        }
    }
    Ok(report)
}

/// Descent classes split the basis by degree, their characters add up to
/// the regular character, and straightening `h·x_γ` only produces basis
/// elements whose exponent partitions are dominated by that of `x_γ`.
pub fn verify_regular_and_decom(params: &GroupParams) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("regular", Some(*params));
    let desc = DescentCharacters::compute(params)?;
    let gammas = enumerate(params, Which::Gamma)?;
    let r = params.r;
    let id = ColoredPerm::identity(r, params.n);
    let id_idx = desc.elements.iter().position(|h| *h == id).expect("identity is in H");

    // (a) dimensions per degree
    let mut by_fmaj: BTreeMap<u32, i64> = BTreeMap::new();
    for g in &gammas {
        *by_fmaj.entry(g.stats().fmaj).or_default() += 1;
        let class = DescentClass::of(g);
        report.check(format!("degree of class of {g}"), &class.degree(r), &g.stats().fmaj);
    }
    let mut dims: BTreeMap<u32, Cyclotomic> = BTreeMap::new();
    for (class, values) in &desc.classes {
        let e = dims.entry(class.degree(r)).or_insert_with(|| Cyclotomic::zero(r));
        *e = &*e + &values[id_idx];
    }
    for (k, count) in &by_fmaj {
        let d = dims.get(k).cloned().unwrap_or_else(|| Cyclotomic::zero(r));
        report.check(format!("dimension in degree {k}"), &d, &Cyclotomic::from_int(r, *count));
    }

    // (b) regular character
    let order = params.order_h() as i64;
    for (i, h) in desc.elements.iter().enumerate() {
        let mut total = Cyclotomic::zero(r);
        for values in desc.classes.values() {
            total = &total + &values[i];
        }
        let expected = Cyclotomic::from_int(r, if i == id_idx { order } else { 0 });
        report.check(format!("sum of class characters at {h}"), &total, &expected);
    }

    // (c) triangularity
    let engine = straightener(params);
    for h in &desc.elements {
        for g in &gammas {
            let x = descent_monomial(g);
            let (_, image) = act_monomial_power(h, &x);
            let lambda = x.exponent_partition();
            for u in engine.straighten(&image)?.terms().keys() {
                let lu = descent_monomial(u).exponent_partition();
                report.compared += 1;
                if !dominated_by(&lu, &lambda) {
                    report.fail(format!("straightening {h} · x[{g}]"), format!("{lu:?}"), format!("not dominated by {lambda:?}"));
                }
            }
        }
    }
    Ok(report)
}

/// Multiplicities of restricted irreducibles in every `R_{D,C}` against
/// weighted counts of n-orbital tableaux.
pub fn verify_main(params: &GroupParams) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("main", Some(*params));
    for row in theorem_main_report(params)?.rows {
        report.compared += 1;
        if !row.equal {
            report.fail(format!("orbit {} class {}", row.orbit, row.class), &row.lhs, row.rhs);
        }
    }
    Ok(report)
}

/// Graded multiplicities of every restricted irreducible in the coinvariant
/// algebra against fmaj generating functions of n-orbital tableaux.
pub fn verify_stembridge(params: &GroupParams) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("stembridge", Some(*params));
    let table = CharacterTable::cached(params.r, params.n)?;
    let desc = DescentCharacters::compute(params)?;
    for orb in all_orbits(params) {
        let sides = stembridge_with(params, orb.representative(), &table, &desc)?;
        report.check_polys(&format!("orbit {}", orb.representative()), &sides.lhs, &sides.rhs);
    }
    Ok(report)
}
