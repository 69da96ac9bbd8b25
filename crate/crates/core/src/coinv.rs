//! The descent basis of the coinvariant algebra `C[x]_H`, straightening of
//! monomials into that basis, and graded characters of the colored-descent
//! pieces `R_{D,C}`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactnum::{Cyclotomic, Rational};
use crate::group::{enumerate, ColoredPerm, GroupError, GroupParams, Which};
use crate::partition::Partition;
use crate::poly::{CyclotomicPoly, ExponentVector, RationalPoly};

/// Default number of reductions a single straightening call may perform.
pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoinvError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("monomial {0} is zero in the quotient")]
    ZeroInQuotient(Monomial),
    #[error("exponent gap is not a multiple of r in {0}")]
    InternalNonIntegral(Monomial),
    #[error("monomial has {got} variables, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("straightening exceeded its fuel of {0} reductions")]
    FuelExhausted(u64),
    #[error("straightening revisited {0} before finishing it")]
    Cycle(Monomial),
    #[error("leading coefficient of the reduction of {0} is not 1")]
    BadReduction(Monomial),
    #[error("invalid descent class: {0}")]
    InvalidClass(String),
}

/// A monomial `x_1^{a_1} ⋯ x_n^{a_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All exponents `≥ d`: the monomial is a multiple of `(x_1⋯x_n)^d`.
    pub fn is_zero_in_quotient(&self, params: &GroupParams) -> bool {
        self.0.iter().all(|&a| a >= params.d)
    }

    /// `λ(M)`: the exponents sorted decreasingly, zeros kept.
    pub fn exponent_partition(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    fn check_len(&self, params: &GroupParams) -> Result<(), CoinvError> {
        if self.0.len() != params.n as usize {
            return Err(CoinvError::BadLength {
                expected: params.n as usize,
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if any {
                f.write_str(" ")?;
            }
            any = true;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{a}", i + 1)?;
            }
        }
        if !any {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `∏ x_{σ(i)}^{f_i(g)}` for any colored permutation.
pub fn descent_monomial(g: &ColoredPerm) -> Monomial {
    let f = g.stats().f_vector;
    let mut a = vec![0; g.n() as usize];
    for (i, &v) in g.sigma().iter().enumerate() {
        a[v as usize - 1] = f[i];
    }
    Monomial(a)
}

/// The basis monomial `x_γ` of an element of `Γ`.
pub fn descent_basis_monomial(gamma: &ColoredPerm, params: &GroupParams) -> Result<Monomial, CoinvError> {
    gamma.gamma_stats(params)?;
    Ok(descent_monomial(gamma))
}

/// The colored index permutation without the `Γ` membership check: sort
/// the exponents decreasingly (ties by increasing index), colors are the
/// sorted exponents modulo `r`.
pub fn index_permutation(m: &Monomial, r: u32) -> ColoredPerm {
    let mut order: Vec<usize> = (0..m.0.len()).collect();
    order.sort_by(|&i, &j| m.0[j].cmp(&m.0[i]).then(i.cmp(&j)));
    let sigma = order.iter().map(|&i| i as u32 + 1).collect();
    let colors = order.iter().map(|&i| m.0[i] % r).collect();
    ColoredPerm::new(r, sigma, colors).expect("sorting yields a permutation")
}

/// `γ(M) ∈ Γ` for a monomial that is nonzero in the quotient.
pub fn colored_index_permutation(m: &Monomial, params: &GroupParams) -> Result<ColoredPerm, CoinvError> {
    m.check_len(params)?;
    if m.is_zero_in_quotient(params) {
        return Err(CoinvError::ZeroInQuotient(m.clone()));
    }
    Ok(index_permutation(m, params.r))
}

/// `μ′(M)`, the weakly decreasing gaps `(a_{σ(i)} - f_i)/r`.
fn complementary_conjugate(m: &Monomial, gamma: &ColoredPerm, r: u32) -> Result<Vec<u32>, CoinvError> {
    let f = gamma.stats().f_vector;
    let n = f.len();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for (&v, &fi) in gamma.sigma().iter().zip(&f).take(n.saturating_sub(1)) {
        let a = m.0[v as usize - 1];
        if a < fi || !(a - fi).is_multiple_of(r) {
            return Err(CoinvError::InternalNonIntegral(m.clone()));
        }
        out.push((a - fi) / r);
    }
    Ok(out)
}

/// The complementary partition `μ(M)`, conjugate of the exponent gaps.
pub fn complementary_partition(m: &Monomial, params: &GroupParams) -> Result<Partition, CoinvError> {
    let gamma = colored_index_permutation(m, params)?;
    let gaps = complementary_conjugate(m, &gamma, params.r)?;
    Ok(Partition::new(gaps).conjugate())
}

/// An element of `C[x]_H` written in the descent basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BasisExpansion {
    terms: BTreeMap<ColoredPerm, BigInt>,
}

impl BasisExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(gamma: ColoredPerm) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(gamma, BigInt::one());
        BasisExpansion { terms }
    }

    pub fn terms(&self) -> &BTreeMap<ColoredPerm, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, gamma: &ColoredPerm) -> BigInt {
        self.terms.get(gamma).cloned().unwrap_or_default()
    }

    fn add_scaled(&mut self, other: &BasisExpansion, k: &BigInt) {
        for (g, c) in &other.terms {
            let e = self.terms.entry(g.clone()).or_default();
            *e += c * k;
            if e.is_zero() {
                self.terms.remove(g);
            }
        }
    }

    /// `{window: coefficient}` with windows in the usual notation.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|(g, c)| (g.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "x[{g}]")?;
        }
        Ok(())
    }
}

/// Straightening engine for one group, with a memo of finished reductions.
pub struct Straightener {
    params: GroupParams,
    fuel: u64,
    memo: Mutex<HashMap<Vec<u32>, Arc<BasisExpansion>>>,
}

impl Straightener {
    pub fn new(params: GroupParams) -> Self {
        Self::with_fuel(params, DEFAULT_FUEL)
    }

    pub fn with_fuel(params: GroupParams, fuel: u64) -> Self {
        Straightener {
            params,
            fuel,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    /// Class of `M` in `C[x]_H` in the descent basis.
    pub fn straighten(&self, m: &Monomial) -> Result<Arc<BasisExpansion>, CoinvError> {
        m.check_len(&self.params)?;
        let mut memo = self.memo.lock().unwrap_or_else(|e| e.into_inner());
        let mut run = Run {
            params: self.params,
            fuel: self.fuel,
            used: 0,
            open: HashSet::new(),
            memo: &mut memo,
        };
        run.reduce(&m.0)
    }
}

struct Run<'a> {
    params: GroupParams,
    fuel: u64,
    used: u64,
    open: HashSet<Vec<u32>>,
    memo: &'a mut HashMap<Vec<u32>, Arc<BasisExpansion>>,
}

impl Run<'_> {
    fn reduce(&mut self, a: &[u32]) -> Result<Arc<BasisExpansion>, CoinvError> {
        if let Some(done) = self.memo.get(a) {
            return Ok(done.clone());
        }
        let m = Monomial(a.to_vec());
        if m.is_zero_in_quotient(&self.params) {
            return Ok(Arc::new(BasisExpansion::zero()));
        }
        self.used += 1;
        if self.used > self.fuel {
            return Err(CoinvError::FuelExhausted(self.fuel));
        }
        if !self.open.insert(a.to_vec()) {
            return Err(CoinvError::Cycle(m));
        }
        let r = self.params.r;
        let gamma = index_permutation(&m, r);
        let gaps = complementary_conjugate(&m, &gamma, r)?;
        let mu = Partition::new(gaps).conjugate();
        let result = if mu.is_empty() {
            BasisExpansion::single(gamma)
        } else {
            // x_γ·ϑ_μ lies in the ideal and contains M with coefficient 1
            let mut expansion: HashMap<Vec<u32>, BigInt> = HashMap::new();
            expansion.insert(descent_monomial(&gamma).0, BigInt::one());
            for &k in mu.parts() {
                expansion = times_elementary(&expansion, k as usize, r);
            }
            if expansion.remove(a) != Some(BigInt::one()) {
                return Err(CoinvError::BadReduction(m));
            }
            let mut others: Vec<_> = expansion.into_iter().collect();
            others.sort();
            let mut out = BasisExpansion::zero();
            for (b, c) in others {
                let sub = self.reduce(&b)?;
                out.add_scaled(&sub, &-c);
            }
            out
        };
        self.open.remove(a);
        let result = Arc::new(result);
        self.memo.insert(a.to_vec(), result.clone());
        Ok(result)
    }
}

/// Multiplies by `e_k(x_1^r, …, x_n^r)`.
fn times_elementary(p: &HashMap<Vec<u32>, BigInt>, k: usize, r: u32) -> HashMap<Vec<u32>, BigInt> {
    let n = p.keys().next().map_or(0, Vec::len);
    let mut out: HashMap<Vec<u32>, BigInt> = HashMap::new();
    for subset in itertools::Itertools::combinations(0..n, k) {
        for (e, c) in p {
            let mut e = e.clone();
            for &i in &subset {
                e[i] += r;
            }
            *out.entry(e).or_default() += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn registry() -> &'static Mutex<HashMap<GroupParams, Arc<Straightener>>> {
    static REG: OnceLock<Mutex<HashMap<GroupParams, Arc<Straightener>>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

/// Shared straightener for `params`, memo included.
pub fn straightener(params: &GroupParams) -> Arc<Straightener> {
    let mut reg = registry().lock().unwrap_or_else(|e| e.into_inner());
    reg.entry(*params)
        .or_insert_with(|| Arc::new(Straightener::new(*params)))
        .clone()
}

/// Straightens `M` with the shared per-group memo.
pub fn straighten(m: &Monomial, params: &GroupParams) -> Result<BasisExpansion, CoinvError> {
    Ok((*straightener(params).straighten(m)?).clone())
}

/// `x_i ↦ ζ^{c_{σ(i)}} x_{σ(i)}` on a monomial; returns the power of `ζ` and
/// the image monomial.
pub fn act_monomial_power(g: &ColoredPerm, m: &Monomial) -> (u32, Monomial) {
    let r = g.r();
    let mut b = vec![0; m.0.len()];
    let mut k = 0u64;
    for (i, &a) in m.0.iter().enumerate() {
        let target = g.sigma()[i] as usize;
        b[target - 1] = a;
        k += a as u64 * g.color_at(target) as u64;
    }
    ((k % r as u64) as u32, Monomial(b))
}

/// The action of `g` on a monomial: a scalar and the image monomial.
pub fn act_monomial(g: &ColoredPerm, m: &Monomial) -> (Cyclotomic, Monomial) {
    let (k, b) = act_monomial_power(g, m);
    (Cyclotomic::zeta_pow(g.r(), k as i64), b)
}

/// A pair `(D, C)` indexing the colored-descent representation `R_{D,C}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DescentClass {
    pub des: Vec<usize>,
    pub colors: Vec<u32>,
}

impl DescentClass {
    pub fn new(params: &GroupParams, mut des: Vec<usize>, colors: Vec<u32>) -> Result<Self, CoinvError> {
        let n = params.n as usize;
        des.sort_unstable();
        des.dedup();
        let bad = |m: String| Err(CoinvError::InvalidClass(m));
        if colors.len() != n {
            return bad(format!("expected {n} colors"));
        }
        if let Some(&i) = des.iter().find(|&&i| i == 0 || i >= n) {
            return bad(format!("descent {i} outside 1..{n}"));
        }
        if colors.iter().any(|&c| c >= params.r) {
            return bad(format!("colors must lie below {}", params.r));
        }
        if colors[n - 1] >= params.d {
            return bad(format!("last color must lie below {}", params.d));
        }
        let class = DescentClass { des, colors };
        if !class.lambda(params.r).windows(2).all(|w| w[0] >= w[1]) {
            return bad(format!("r·λ_D + C is not weakly decreasing for {class}"));
        }
        Ok(class)
    }

    /// The class `(Des(γ), Col(γ))`.
    pub fn of(gamma: &ColoredPerm) -> Self {
        DescentClass {
            des: gamma.stats().des,
            colors: gamma.colors().to_vec(),
        }
    }

    /// `r·λ_D + C`, the exponent partition of any `x_γ` in the class.
    pub fn lambda(&self, r: u32) -> Vec<u32> {
        (1..=self.colors.len())
            .map(|i| r * self.des.iter().filter(|&&j| j >= i).count() as u32 + self.colors[i - 1])
            .collect()
    }

    /// Degree `r·Σ D + Σ C` of the piece.
    pub fn degree(&self, r: u32) -> u32 {
        r * self.des.iter().sum::<usize>() as u32 + self.colors.iter().sum::<u32>()
    }
}

impl fmt::Display for DescentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D={:?} C={:?}", self.des, self.colors)
    }
}

/// Every valid descent class of the group.
pub fn all_descent_classes(params: &GroupParams) -> Vec<DescentClass> {
    let n = params.n as usize;
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let des: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let mut colors = vec![0u32; n];
        loop {
            if let Ok(c) = DescentClass::new(params, des.clone(), colors.clone()) {
                out.push(c);
            }
            let mut k = n;
            let mut done = true;
            while k > 0 {
                k -= 1;
                let cap = if k == n - 1 { params.d } else { params.r };
                colors[k] += 1;
                if colors[k] < cap {
                    done = false;
                    break;
                }
                colors[k] = 0;
            }
            if done {
                break;
            }
        }
    }
    out.sort();
    out
}

/// A function on `H`, keyed by element.
pub type HFunction = BTreeMap<ColoredPerm, Cyclotomic>;

/// Sums `Σ n_k ζ^k` with integer `n_k`, kept unreduced until the end.
#[derive(Debug, Clone)]
pub(crate) struct ZetaSum(Vec<BigInt>);

impl ZetaSum {
    pub(crate) fn new(r: u32) -> Self {
        ZetaSum(vec![BigInt::zero(); r as usize])
    }

    pub(crate) fn add(&mut self, k: u32, c: &BigInt) {
        self.0[k as usize] += c;
    }

    pub(crate) fn value(&self) -> Cyclotomic {
        let r = self.0.len() as u32;
        Cyclotomic::reduce(r, self.0.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }
}

/// For one `h ∈ H`, the diagonal entry of `h` on each basis element: the
/// `ζ` power and the coefficient of `γ` in the straightening of `h·x_γ`.
fn diagonal(
    h: &ColoredPerm,
    gammas: &[(ColoredPerm, Monomial)],
    engine: &Straightener,
) -> Result<Vec<(u32, BigInt)>, CoinvError> {
    gammas
        .iter()
        .map(|(g, m)| {
            let (k, image) = act_monomial_power(h, m);
            Ok((k, engine.straighten(&image)?.coeff(g)))
        })
        .collect()
}

fn basis_with_monomials(params: &GroupParams) -> Result<Vec<(ColoredPerm, Monomial)>, CoinvError> {
    Ok(enumerate(params, Which::Gamma)?
        .into_iter()
        .map(|g| {
            let m = descent_monomial(&g);
            (g, m)
        })
        .collect())
}

/// The character of `R_{D,C}` on every element of `H`.
pub fn character_rdc(class: &DescentClass, params: &GroupParams) -> Result<HFunction, CoinvError> {
    DescentClass::new(params, class.des.clone(), class.colors.clone())?;
    let engine = straightener(params);
    let gammas: Vec<_> = basis_with_monomials(params)?
        .into_iter()
        .filter(|(g, _)| DescentClass::of(g) == *class)
        .collect();
    let mut out = HFunction::new();
    for h in enumerate(params, Which::H)? {
        let mut acc = ZetaSum::new(params.r);
        for (k, c) in diagonal(&h, &gammas, &engine)? {
            acc.add(k, &c);
        }
        out.insert(h, acc.value());
    }
    Ok(out)
}

/// Characters of all descent classes at once, sharing the straightening work.
#[derive(Debug, Clone)]
pub struct DescentCharacters {
    pub params: GroupParams,
    /// Elements of `H` in enumeration order.
    pub elements: Vec<ColoredPerm>,
    /// Character values aligned with `elements`.
    pub classes: BTreeMap<DescentClass, Vec<Cyclotomic>>,
    /// Graded diagonal data: for each element of `H`, `(class, ζ power,
    /// coefficient, λ(x_γ))` for every basis element.
    pub(crate) diagonals: Vec<Vec<(usize, u32, BigInt)>>,
    pub(crate) basis: Vec<(ColoredPerm, Monomial)>,
}

impl DescentCharacters {
    pub fn compute(params: &GroupParams) -> Result<Self, CoinvError> {
        let engine = straightener(params);
        let basis = basis_with_monomials(params)?;
        let class_list = all_descent_classes(params);
        let index: HashMap<&DescentClass, usize> =
            class_list.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let class_of: Vec<usize> = basis
            .iter()
            .map(|(g, _)| index[&DescentClass::of(g)])
            .collect();
        let elements = enumerate(params, Which::H)?;
        let mut diagonals = Vec::with_capacity(elements.len());
        let mut sums = vec![vec![ZetaSum::new(params.r); elements.len()]; class_list.len()];
        for (hi, h) in elements.iter().enumerate() {
            let diag = diagonal(h, &basis, &engine)?;
            let mut row = Vec::with_capacity(diag.len());
            for (bi, (k, c)) in diag.into_iter().enumerate() {
                sums[class_of[bi]][hi].add(k, &c);
                row.push((bi, k, c));
            }
            diagonals.push(row);
        }
        let classes = class_list
            .into_iter()
            .zip(sums)
            .map(|(c, s)| (c, s.iter().map(ZetaSum::value).collect()))
            .collect();
        Ok(DescentCharacters {
            params: *params,
            elements,
            classes,
            diagonals,
            basis,
        })
    }

    /// Graded trace of `elements[h]` on `C[x]_H`: `Σ_γ ⟨h·x_γ, x_γ⟩ q^{λ(x_γ)}`.
    pub fn coinvariant_trace(&self, h: usize) -> CyclotomicPoly {
        let r = self.params.r;
        let n = self.params.n as usize;
        let mut by_lambda: BTreeMap<Vec<u32>, ZetaSum> = BTreeMap::new();
        for (bi, k, c) in &self.diagonals[h] {
            if c.is_zero() {
                continue;
            }
            let lambda = self.basis[*bi].1.exponent_partition();
            by_lambda.entry(lambda).or_insert_with(|| ZetaSum::new(r)).add(*k, c);
        }
        let mut out = CyclotomicPoly::zero(n, r);
        for (lambda, s) in by_lambda {
            out.add_term(ExponentVector(lambda), s.value());
        }
        out
    }
}

/// `Σ_{γ∈Γ} q^{fmaj(γ)}`.
pub fn hilbert_series(params: &GroupParams) -> Result<RationalPoly, CoinvError> {
    let mut out = RationalPoly::zero(1, ());
    for g in enumerate(params, Which::Gamma)? {
        out.add_term(ExponentVector(vec![g.stats().fmaj]), Rational::one());
    }
    Ok(out)
}

/// All monomials in `n` variables of total degree at most `cap`.
pub fn monomials_up_to(n: usize, cap: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial(cur.clone()));
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, cap, &mut Vec::new(), &mut out);
    out
}

/// Graded trace of `h` on polynomials of degree `≤ cap`:
/// `Σ_M ⟨h·M, M⟩ q^{λ(M)}`.
pub fn trace_polynomial_ring(h: &ColoredPerm, cap: u32) -> CyclotomicPoly {
    let r = h.r();
    let n = h.n() as usize;
    let mut by_lambda: BTreeMap<Vec<u32>, ZetaSum> = BTreeMap::new();
    for m in monomials_up_to(n, cap) {
        let (k, image) = act_monomial_power(h, &m);
        if image == m {
            by_lambda
                .entry(m.exponent_partition())
                .or_insert_with(|| ZetaSum::new(r))
                .add(k, &BigInt::one());
        }
    }
    let mut out = CyclotomicPoly::zero(n, r);
    for (lambda, s) in by_lambda {
        out.add_term(ExponentVector(lambda), s.value());
    }
    out
}

/// Distinct classes `(Des, Col)` realized by elements of `Γ`.
pub fn realized_classes(params: &GroupParams) -> Result<BTreeSet<DescentClass>, CoinvError> {
    Ok(enumerate(params, Which::Gamma)?.iter().map(DescentClass::of).collect())
}
