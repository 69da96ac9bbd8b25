//! Irreducible characters of `G(r,n)` from the Frobenius formula, their
//! restrictions to `G(r,p,n)`, and multiplicities of irreducibles in the
//! colored-descent pieces of the coinvariant algebra.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Signed;
use serde::Serialize;

use crate::coinv::{CoinvError, DescentCharacters, DescentClass, HFunction};
use crate::exactnum::{Cyclotomic, Rational};
use crate::group::{enumerate, ColoredPerm, GroupError, GroupParams, Which};
use crate::partition::{r_partitions, Partition, RPartition};
use crate::poly::{CyclotomicPoly, ExponentVector, PolyError};
use crate::tabx::{all_orbits, enumerate_osyt_n, orbit, ShapeOrbit, TabxError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharsError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Coinv(#[from] CoinvError),
    #[error(transparent)]
    Tabx(#[from] TabxError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("polynomial is not symmetric in each alphabet: stuck at {0:?}")]
    NotSymmetric(Vec<u32>),
    #[error("functions are not defined on the same group")]
    ParamsMismatch,
}

/// Conjugacy classes of `G(r,n)` keyed by cycle type, with their sizes.
pub fn conjugacy_classes(r: u32, n: u32) -> Result<BTreeMap<RPartition, u128>, CharsError> {
    let params = GroupParams::wreath(r, n)?;
    let mut out = BTreeMap::new();
    for g in enumerate(&params, Which::G)? {
        *out.entry(g.cycle_type()).or_insert(0u128) += 1;
    }
    Ok(out)
}

/// `p_α = ∏_{j,i} Σ_k ζ^{jk} p_{α^j_i}(y^k)` in `r` alphabets of `n`
/// variables each; variable `k·n + i` is `y^k_{i+1}`.
pub fn power_sum_product(alpha: &RPartition, n: usize) -> CyclotomicPoly {
    let r = alpha.r();
    let nv = r * n;
    let mut out = CyclotomicPoly::one(nv, r as u32);
    for (j, part) in alpha.components().iter().enumerate() {
        for &a in part.parts() {
            let mut factor = CyclotomicPoly::zero(nv, r as u32);
            for k in 0..r {
                let z = Cyclotomic::zeta_pow(r as u32, (j * k) as i64);
                for i in 0..n {
                    let mut e = vec![0; nv];
                    e[k * n + i] = a;
                    factor.add_term(ExponentVector(e), z.clone());
                }
            }
            out = out.mul(&factor).expect("same ring");
        }
    }
    out
}

/// Exponent vectors (with multiplicity) of the semistandard fillings of `λ`
/// with entries `1..=m`.
fn ssyt_contents(lambda: &Partition, m: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(idx: usize, cells: &[(usize, usize)], m: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<u32>>) {
        if idx == cells.len() {
            let mut e = vec![0u32; m];
            rows.iter().flatten().for_each(|&v| e[v] += 1);
            out.push(e);
            return;
        }
        let (i, j) = cells[idx];
        let lo = if j > 0 { rows[i][j - 1] } else { 0 };
        let lo = if i > 0 { lo.max(rows[i - 1][j] + 1) } else { lo };
        for v in lo..m {
            rows[i].push(v);
            rec(idx + 1, cells, m, rows, out);
            rows[i].pop();
        }
    }
    rec(0, &cells, m, &mut rows, &mut out);
    out
}

/// `s_λ(y_1, …, y_m)` as the sum of the content monomials of its
/// semistandard tableaux.
pub fn schur_polynomial(lambda: &Partition, m: usize) -> CyclotomicPoly {
    let mut out = CyclotomicPoly::zero(m, 1);
    for e in ssyt_contents(lambda, m) {
        out.add_term(ExponentVector(e), Cyclotomic::one(1));
    }
    out
}

/// `∏_k s_{λ^k}(y^k)` in `r` alphabets of `n` variables, over `Q(ζ_r)`.
fn schur_product(shape: &RPartition, n: usize, order: u32) -> CyclotomicPoly {
    let r = shape.r();
    let mut out = CyclotomicPoly::one(r * n, order);
    for (k, part) in shape.components().iter().enumerate() {
        let mut factor = CyclotomicPoly::zero(r * n, order);
        for e in ssyt_contents(part, n) {
            let mut full = vec![0; r * n];
            full[k * n..(k + 1) * n].copy_from_slice(&e);
            factor.add_term(ExponentVector(full), Cyclotomic::one(order));
        }
        out = out.mul(&factor).expect("same ring");
    }
    out
}

/// Coefficients of `P` in the basis of products of Schur polynomials, one per
/// alphabet, by repeatedly peeling off the leading term.
pub fn schur_expand(p: &CyclotomicPoly, r: usize) -> Result<BTreeMap<RPartition, Cyclotomic>, CharsError> {
    let n = p.nvars() / r.max(1);
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.leading_term() {
        let blocks: Vec<&[u32]> = e.0.chunks(n).collect();
        if !blocks.iter().all(|b| b.windows(2).all(|w| w[0] >= w[1])) {
            return Err(CharsError::NotSymmetric(e.0.clone()));
        }
        let shape = RPartition::new(blocks.iter().map(|b| Partition::new(b.to_vec())).collect());
        let c = c.clone();
        let term = schur_product(&shape, n, p.ctx()).scale(&c)?;
        rest = rest.sub(&term)?;
        out.insert(shape, c);
    }
    Ok(out)
}

type TableCache = HashMap<(u32, u32), Arc<CharacterTable>>;

/// Irreducible characters of `G(r,n)`: rows indexed by r-partitions, columns
/// by cycle types, both in [`r_partitions`] order.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub r: u32,
    pub n: u32,
    pub shapes: Vec<RPartition>,
    pub classes: Vec<RPartition>,
    pub class_sizes: Vec<u128>,
    pub values: Vec<Vec<Cyclotomic>>,
}

/// A class function of `G(r,n)` keyed by cycle type.
pub type ClassFunction = BTreeMap<RPartition, Cyclotomic>;

impl CharacterTable {
    pub fn compute(r: u32, n: u32) -> Result<Self, CharsError> {
        let sizes = conjugacy_classes(r, n)?;
        let shapes = r_partitions(r as usize, n);
        let classes = shapes.clone();
        let class_sizes = classes.iter().map(|a| sizes.get(a).copied().unwrap_or(0)).collect();
        let mut values = vec![Vec::with_capacity(classes.len()); shapes.len()];
        for alpha in &classes {
            let expansion = schur_expand(&power_sum_product(alpha, n as usize), r as usize)?;
            for (row, lambda) in values.iter_mut().zip(&shapes) {
                row.push(expansion.get(lambda).cloned().unwrap_or_else(|| Cyclotomic::zero(r)));
            }
        }
        Ok(CharacterTable {
            r,
            n,
            shapes,
            classes,
            class_sizes,
            values,
        })
    }

    /// Shared, cached table for `(r, n)`.
    pub fn cached(r: u32, n: u32) -> Result<Arc<Self>, CharsError> {
        static CACHE: OnceLock<Mutex<TableCache>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&(r, n)) {
            return Ok(t.clone());
        }
        let table = Arc::new(Self::compute(r, n)?);
        cache
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert((r, n), table.clone());
        Ok(table)
    }

    fn shape_index(&self, lambda: &RPartition) -> Option<usize> {
        self.shapes.iter().position(|s| s == lambda)
    }

    fn class_index(&self, alpha: &RPartition) -> Option<usize> {
        self.classes.iter().position(|s| s == alpha)
    }

    pub fn value(&self, lambda: &RPartition, alpha: &RPartition) -> Option<&Cyclotomic> {
        Some(&self.values[self.shape_index(lambda)?][self.class_index(alpha)?])
    }

    pub fn row(&self, lambda: &RPartition) -> Option<ClassFunction> {
        let i = self.shape_index(lambda)?;
        Some(self.classes.iter().cloned().zip(self.values[i].iter().cloned()).collect())
    }

    /// Degree of the character: its value on the identity class.
    pub fn dim(&self, lambda: &RPartition) -> Option<Rational> {
        let id = RPartition::new({
            let mut parts = vec![Partition::empty(); self.r as usize];
            parts[0] = Partition::new(vec![1; self.n as usize]);
            parts
        });
        self.value(lambda, &id)?.to_rational()
    }

    pub fn group_order(&self) -> u128 {
        self.class_sizes.iter().sum()
    }

    /// `(1/|G|) Σ_α |α| χ(α) conj(ψ(α))` for two rows.
    pub fn row_inner_product(&self, i: usize, j: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.r);
        for (k, size) in self.class_sizes.iter().enumerate() {
            let term = &self.values[i][k] * &self.values[j][k].conj();
            acc = &acc + &term.scale(&Rational::from_integer((*size).into()));
        }
        acc.scale(&Rational::new(1.into(), self.group_order().into()))
    }

    /// CSV with one row per shape and one column per class; entries are
    /// coefficient vectors over powers of `ζ` joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("shape");
        for (a, size) in self.classes.iter().zip(&self.class_sizes) {
            out.push_str(&format!(",\"{a} [{size}]\""));
        }
        out.push('\n');
        for (lambda, row) in self.shapes.iter().zip(&self.values) {
            out.push_str(&format!("\"{lambda}\""));
            for v in row {
                let coeffs: Vec<String> = v.coeffs().iter().map(crate::exactnum::format_rational).collect();
                out.push(',');
                out.push_str(&if coeffs.is_empty() { "0".to_string() } else { coeffs.join(";") });
            }
            out.push('\n');
        }
        out
    }
}

/// `χ^λ` restricted to `H`, evaluated element by element through cycle types.
pub fn restricted_character(lambda: &RPartition, params: &GroupParams) -> Result<HFunction, CharsError> {
    let table = CharacterTable::cached(params.r, params.n)?;
    let mut out = HFunction::new();
    for h in enumerate(params, Which::H)? {
        let v = table.value(lambda, &h.cycle_type()).ok_or(CharsError::ParamsMismatch)?.clone();
        out.insert(h, v);
    }
    Ok(out)
}

/// `(1/|H|) Σ_h f(h) conj(g(h))`.
pub fn inner_product_h(f: &HFunction, g: &HFunction, params: &GroupParams) -> Result<Cyclotomic, CharsError> {
    let order = params.order_h();
    if f.len() as u128 != order || g.len() as u128 != order {
        return Err(CharsError::ParamsMismatch);
    }
    let mut acc = Cyclotomic::zero(params.r);
    for (h, a) in f {
        let b = g.get(h).ok_or(CharsError::ParamsMismatch)?;
        acc = &acc + &(a * &b.conj());
    }
    Ok(acc.scale(&Rational::new(1.into(), order.into())))
}

fn inner_product_aligned(f: &[Cyclotomic], g: &[Cyclotomic], r: u32) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(r);
    for (a, b) in f.iter().zip(g) {
        acc = &acc + &(a * &b.conj());
    }
    acc.scale(&Rational::new(1.into(), (f.len() as u64).into()))
}

/// Restricted characters aligned with a list of `H` elements.
fn restricted_values(
    lambda: &RPartition,
    elements: &[ColoredPerm],
    table: &CharacterTable,
) -> Result<Vec<Cyclotomic>, CharsError> {
    elements
        .iter()
        .map(|h| table.value(lambda, &h.cycle_type()).cloned().ok_or(CharsError::ParamsMismatch))
        .collect()
}

/// One comparison of the multiplicity theorem.
#[derive(Debug, Clone, Serialize)]
pub struct MainRow {
    pub orbit: RPartition,
    pub u: u32,
    pub class: DescentClass,
    /// `⟨χ↓, char R_{D,C}⟩_H`.
    pub lhs: Cyclotomic,
    /// `u · #{T ∈ OSYT_n : (Des, Col) = (D, C)}`.
    pub rhs: u64,
    /// `lhs` is a nonnegative rational integer.
    pub lhs_integral: bool,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MainReport {
    pub params: GroupParams,
    pub rows: Vec<MainRow>,
    pub all_equal: bool,
}

fn nonnegative_integer(c: &Cyclotomic) -> Option<u64> {
    let q = c.to_rational()?;
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().try_into().ok()
}

/// Compares, for every shape orbit and descent class, the multiplicity of
/// the restricted irreducible in `R_{D,C}` with the weighted count of
/// n-orbital tableaux in that class.
pub fn theorem_main_report(params: &GroupParams) -> Result<MainReport, CharsError> {
    let table = CharacterTable::cached(params.r, params.n)?;
    let desc = DescentCharacters::compute(params)?;
    let mut rows = Vec::new();
    for orb in all_orbits(params) {
        let chi = restricted_values(orb.representative(), &desc.elements, &table)?;
        let mut counts: BTreeMap<DescentClass, u64> = BTreeMap::new();
        for t in enumerate_osyt_n(&orb, params)? {
            let s = t.stats();
            *counts.entry(DescentClass { des: s.des, colors: s.colors }).or_default() += 1;
        }
        for (class, values) in &desc.classes {
            let lhs = inner_product_aligned(&chi, values, params.r);
            let rhs = orb.u as u64 * counts.get(class).copied().unwrap_or(0);
            let as_int = nonnegative_integer(&lhs);
            rows.push(MainRow {
                orbit: orb.representative().clone(),
                u: orb.u,
                class: class.clone(),
                lhs_integral: as_int.is_some(),
                equal: as_int == Some(rhs),
                lhs,
                rhs,
            });
        }
        // tableaux in classes that are not valid descent classes would be missed above
        for class in counts.keys() {
            if !desc.classes.contains_key(class) {
                rows.push(MainRow {
                    orbit: orb.representative().clone(),
                    u: orb.u,
                    class: class.clone(),
                    lhs: Cyclotomic::zero(params.r),
                    rhs: orb.u as u64 * counts[class],
                    lhs_integral: true,
                    equal: false,
                });
            }
        }
    }
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(MainReport {
        params: *params,
        rows,
        all_equal,
    })
}

/// Both sides of the graded multiplicity identity for one orbit.
#[derive(Debug, Clone, Serialize)]
pub struct StembridgeSides {
    pub orbit: ShapeOrbit,
    /// `Σ_k ⟨χ↓, char R_k⟩ q^k`.
    pub lhs: CyclotomicPoly,
    /// `u · Σ_{T ∈ OSYT_n} q^{fmaj(T)}`.
    pub rhs: CyclotomicPoly,
}

/// Graded multiplicities of `χ^λ↓` in the coinvariant algebra against the
/// fmaj generating function of n-orbital tableaux.
pub fn stembridge_graded(params: &GroupParams, lambda: &RPartition) -> Result<StembridgeSides, CharsError> {
    let table = CharacterTable::cached(params.r, params.n)?;
    let desc = DescentCharacters::compute(params)?;
    stembridge_with(params, lambda, &table, &desc)
}

pub(crate) fn stembridge_with(
    params: &GroupParams,
    lambda: &RPartition,
    table: &CharacterTable,
    desc: &DescentCharacters,
) -> Result<StembridgeSides, CharsError> {
    let orb = orbit(lambda, params.p);
    let chi = restricted_values(lambda, &desc.elements, table)?;
    let r = params.r;
    let mut by_degree: BTreeMap<u32, Vec<Cyclotomic>> = BTreeMap::new();
    for (class, values) in &desc.classes {
        let slot = by_degree
            .entry(class.degree(r))
            .or_insert_with(|| vec![Cyclotomic::zero(r); values.len()]);
        for (s, v) in slot.iter_mut().zip(values) {
            *s = &*s + v;
        }
    }
    let mut lhs = CyclotomicPoly::zero(1, r);
    for (k, values) in by_degree {
        lhs.add_term(ExponentVector(vec![k]), inner_product_aligned(&chi, &values, r));
    }
    let mut rhs = CyclotomicPoly::zero(1, r);
    for t in enumerate_osyt_n(&orb, params)? {
        rhs.add_term(ExponentVector(vec![t.stats().fmaj]), Cyclotomic::from_int(r, orb.u as i64));
    }
    Ok(StembridgeSides { orbit: orb, lhs, rhs })
}

/// `true` when every value is zero.
pub fn is_zero_function(f: &HFunction) -> bool {
    f.values().all(Cyclotomic::is_zero)
}

/// Sum of two functions on `H`.
pub fn add_functions(f: &HFunction, g: &HFunction) -> HFunction {
    let mut out = f.clone();
    for (h, v) in g {
        let e = out.entry(h.clone()).or_insert_with(|| Cyclotomic::zero(v.order()));
        *e = &*e + v;
    }
    out
}
