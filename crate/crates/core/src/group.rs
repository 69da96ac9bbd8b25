//! Colored permutations, the groups `G(r,n) ⊇ G(r,p,n)`, the transversal
//! `Γ(r,p,n)` and their descent statistics.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::partition::{Partition, RPartition};

/// Default cap on `n!·r^n` for anything that enumerates a whole group.
pub const DEFAULT_SIZE_GUARD: u128 = 10_000_000;

/// Enumeration guard, overridable through `GRPN_SIZE_GUARD`.
pub fn size_guard() -> u128 {
    std::env::var("GRPN_SIZE_GUARD")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_GUARD)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid parameters r={r}, p={p}, n={n}: need positive integers with p | r")]
    InvalidParams { r: u32, p: u32, n: u32 },
    #[error("malformed window token {0:?}")]
    MalformedToken(String),
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: u32, n: u32 },
    #[error("window is not a permutation of 1..={0}")]
    NotAPermutation(u32),
    #[error("color {color} out of range 0..{r}")]
    ColorOutOfRange { color: u32, r: u32 },
    #[error("enumeration of {size} elements exceeds the guard {guard}")]
    SizeGuardExceeded { size: u128, guard: u128 },
    #[error("element {0} is not in G(r,p,n)")]
    NotInH(String),
    #[error("element {0} is not in Γ(r,p,n)")]
    NotInGamma(String),
    #[error("operands live in different groups")]
    ParamsMismatch,
    #[error("cannot drop the last letter of a one-letter permutation")]
    NIsOne,
}

/// `(r, p, n)` with `p | r`, and `d = r/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupParams {
    pub r: u32,
    pub p: u32,
    pub n: u32,
    pub d: u32,
}

impl GroupParams {
    pub fn new(r: u32, p: u32, n: u32) -> Result<Self, GroupError> {
        if r == 0 || p == 0 || n == 0 || !r.is_multiple_of(p) {
            return Err(GroupError::InvalidParams { r, p, n });
        }
        Ok(GroupParams { r, p, n, d: r / p })
    }

    /// Parameters of the full wreath product `G(r,n) = G(r,1,n)`.
    pub fn wreath(r: u32, n: u32) -> Result<Self, GroupError> {
        Self::new(r, 1, n)
    }

    /// `|G(r,n)| = n!·r^n`.
    pub fn order_g(&self) -> u128 {
        (1..=self.n as u128).product::<u128>() * (self.r as u128).pow(self.n)
    }

    /// `|G(r,p,n)| = |Γ(r,p,n)| = n!·r^n/p`.
    pub fn order_h(&self) -> u128 {
        self.order_g() / self.p as u128
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.r, self.p, self.n)
    }
}

/// Which subset of `G(r,n)` to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    G,
    H,
    Gamma,
}

/// An element `((c_1,…,c_n), σ)` of `G(r,n)`; `c_i` colors the window entry
/// `σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPerm {
    r: u32,
    sigma: Vec<u32>,
    colors: Vec<u32>,
}

/// A colored letter `value^color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoredLetter {
    pub value: u32,
    pub color: u32,
}

/// `a ≺ b`: higher colors are smaller, equal colors compare by value.
pub fn colored_less(a: ColoredLetter, b: ColoredLetter) -> bool {
    if a.color != b.color {
        a.color > b.color
    } else {
        a.value < b.value
    }
}

impl ColoredPerm {
    /// Builds an element from its window `(σ(1),…,σ(n))` and colors.
    pub fn new(r: u32, sigma: Vec<u32>, colors: Vec<u32>) -> Result<Self, GroupError> {
        let n = sigma.len() as u32;
        if colors.len() != sigma.len() {
            return Err(GroupError::NotAPermutation(n));
        }
        let mut seen = vec![false; sigma.len()];
        for &v in &sigma {
            if v == 0 || v > n {
                return Err(GroupError::ValueOutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(GroupError::NotAPermutation(n));
            }
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= r) {
            return Err(GroupError::ColorOutOfRange { color, r });
        }
        Ok(ColoredPerm { r, sigma, colors })
    }

    pub fn identity(r: u32, n: u32) -> Self {
        ColoredPerm {
            r,
            sigma: (1..=n).collect(),
            colors: vec![0; n as usize],
        }
    }

    /// Parses window notation such as `6 2^5 4^4 3^1 1^6 5^3`.
    pub fn parse_window(text: &str, params: &GroupParams) -> Result<Self, GroupError> {
        let mut sigma = Vec::new();
        let mut colors = Vec::new();
        for tok in text.split_whitespace() {
            let bad = || GroupError::MalformedToken(tok.to_string());
            let (v, c) = match tok.split_once('^') {
                Some((v, c)) => (v, Some(c)),
                None => (tok, None),
            };
            let v: u32 = v.parse().map_err(|_| bad())?;
            let c: u32 = match c {
                Some(c) => c.parse().map_err(|_| bad())?,
                None => 0,
            };
            sigma.push(v);
            colors.push(c);
        }
        if sigma.len() != params.n as usize {
            return Err(GroupError::NotAPermutation(params.n));
        }
        Self::new(params.r, sigma, colors)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.sigma.len() as u32
    }

    /// The window `(σ(1),…,σ(n))`.
    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    /// The color vector `Col(g)`.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// `σ(i)` for 1-based `i`.
    pub fn value_at(&self, i: usize) -> u32 {
        self.sigma[i - 1]
    }

    /// `c_i` for 1-based `i`.
    pub fn color_at(&self, i: usize) -> u32 {
        self.colors[i - 1]
    }

    pub fn letter(&self, i: usize) -> ColoredLetter {
        ColoredLetter {
            value: self.sigma[i - 1],
            color: self.colors[i - 1],
        }
    }

    /// Color weight `col(g) = Σ c_i`.
    pub fn col(&self) -> u32 {
        self.colors.iter().sum()
    }

    pub fn in_h(&self, params: &GroupParams) -> bool {
        self.col().is_multiple_of(params.p)
    }

    pub fn in_gamma(&self, params: &GroupParams) -> bool {
        *self.colors.last().unwrap_or(&0) < params.d
    }

    fn check_params(&self, params: &GroupParams) -> Result<(), GroupError> {
        if self.r != params.r || self.n() != params.n {
            return Err(GroupError::ParamsMismatch);
        }
        Ok(())
    }

    /// Group product. The convention is the one making the polynomial action
    /// of [`crate::coinv::act_monomial`] a left action:
    /// `(g·h)` has window `σ_g∘σ_h` and color `c_g(k) + c_h(σ_g^{-1}(k))` at
    /// position `k`.
    pub fn multiply(&self, h: &ColoredPerm) -> Result<ColoredPerm, GroupError> {
        if self.r != h.r || self.n() != h.n() {
            return Err(GroupError::ParamsMismatch);
        }
        let n = self.sigma.len();
        let inv = self.inverse_sigma();
        let sigma = (0..n).map(|i| self.sigma[h.sigma[i] as usize - 1]).collect();
        let colors = (0..n)
            .map(|k| (self.colors[k] + h.colors[inv[k] as usize - 1]) % self.r)
            .collect();
        Ok(ColoredPerm {
            r: self.r,
            sigma,
            colors,
        })
    }

    fn inverse_sigma(&self) -> Vec<u32> {
        let mut inv = vec![0; self.sigma.len()];
        for (i, &v) in self.sigma.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        inv
    }

    pub fn inverse(&self) -> ColoredPerm {
        let sigma = self.inverse_sigma();
        let colors = self
            .sigma
            .iter()
            .map(|&v| (self.r - self.colors[v as usize - 1]) % self.r)
            .collect();
        ColoredPerm {
            r: self.r,
            sigma,
            colors,
        }
    }

    /// `g^i`: every color shifted by `i` modulo `r`, window unchanged.
    pub fn shift_colors(&self, i: i64) -> ColoredPerm {
        let r = self.r as i64;
        ColoredPerm {
            r: self.r,
            sigma: self.sigma.clone(),
            colors: self
                .colors
                .iter()
                .map(|&c| (c as i64 + i).rem_euclid(r) as u32)
                .collect(),
        }
    }

    /// `ĝ`: drop the last position and standardize the remaining window.
    pub fn hat(&self) -> Result<ColoredPerm, GroupError> {
        let n = self.sigma.len();
        if n < 2 {
            return Err(GroupError::NIsOne);
        }
        let last = self.sigma[n - 1];
        let sigma = self.sigma[..n - 1]
            .iter()
            .map(|&v| if v > last { v - 1 } else { v })
            .collect();
        Ok(ColoredPerm {
            r: self.r,
            sigma,
            colors: self.colors[..n - 1].to_vec(),
        })
    }

    /// Membership in `G_i = {g : c_n = i}`.
    pub fn in_color_class(&self, i: u32) -> Result<bool, GroupError> {
        if i >= self.r {
            return Err(GroupError::ColorOutOfRange { color: i, r: self.r });
        }
        Ok(*self.colors.last().unwrap_or(&0) == i)
    }

    /// Cycle type: `α^i` collects the lengths of the cycles whose colors sum
    /// to `i` modulo `r`.
    pub fn cycle_type(&self) -> RPartition {
        let n = self.sigma.len();
        let mut seen = vec![false; n];
        let mut lengths: Vec<Vec<u32>> = vec![Vec::new(); self.r as usize];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut color, mut i) = (0u32, 0u32, start);
            while !seen[i] {
                seen[i] = true;
                len += 1;
                color += self.colors[i];
                i = self.sigma[i] as usize - 1;
            }
            lengths[(color % self.r) as usize].push(len);
        }
        RPartition::new(lengths.into_iter().map(Partition::new).collect())
    }

    /// Descent statistics computed with the formulas of `Γ`; valid on any
    /// element of `G(r,n)`.
    pub fn stats(&self) -> Stats {
        Stats::of(self)
    }

    /// Statistics of an element of `Γ(r,p,n)`.
    pub fn gamma_stats(&self, params: &GroupParams) -> Result<Stats, GroupError> {
        self.check_params(params)?;
        if !self.in_gamma(params) {
            return Err(GroupError::NotInGamma(self.to_string()));
        }
        Ok(Stats::of(self))
    }

    /// `φ: H → Γ`, replacing `c_n` by `⌊c_n/p⌋`.
    pub fn phi_h_to_gamma(&self, params: &GroupParams) -> Result<ColoredPerm, GroupError> {
        self.check_params(params)?;
        if !self.in_h(params) {
            return Err(GroupError::NotInH(self.to_string()));
        }
        let mut out = self.clone();
        let last = out.colors.last_mut().unwrap();
        *last /= params.p;
        Ok(out)
    }

    /// Inverse of [`phi_h_to_gamma`](Self::phi_h_to_gamma).
    pub fn phi_gamma_to_h(&self, params: &GroupParams) -> Result<ColoredPerm, GroupError> {
        self.check_params(params)?;
        if !self.in_gamma(params) {
            return Err(GroupError::NotInGamma(self.to_string()));
        }
        let n = self.colors.len();
        let rest: u32 = self.colors[..n - 1].iter().sum();
        let base = self.colors[n - 1] * params.p;
        let t = (0..params.p)
            .find(|t| (rest + base + t).is_multiple_of(params.p))
            .expect("some residue works");
        let mut out = self.clone();
        out.colors[n - 1] = base + t;
        Ok(out)
    }
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, c)) in self.sigma.iter().zip(&self.colors).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *c == 0 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Descent statistics of a colored permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Descent positions, increasing, 1-based.
    pub des: Vec<usize>,
    pub maj: u32,
    pub col: u32,
    pub d_vector: Vec<u32>,
    pub f_vector: Vec<u32>,
    pub fmaj: u32,
    pub fdes: u32,
    pub inv: u32,
}

impl Stats {
    pub fn of(g: &ColoredPerm) -> Stats {
        let n = g.sigma.len();
        let r = g.r;
        let des: Vec<usize> = (1..n)
            .filter(|&i| colored_less(g.letter(i + 1), g.letter(i)))
            .collect();
        let maj = des.iter().sum::<usize>() as u32;
        let col = g.col();
        let d_vector: Vec<u32> = (1..=n)
            .map(|i| des.iter().filter(|&&j| j >= i).count() as u32)
            .collect();
        let f_vector: Vec<u32> = d_vector
            .iter()
            .zip(&g.colors)
            .map(|(d, c)| r * d + c)
            .collect();
        let fmaj = f_vector.iter().sum();
        let fdes = r * d_vector.first().copied().unwrap_or(0) + g.colors.first().copied().unwrap_or(0);
        let inv = (1..=n)
            .tuple_combinations()
            .filter(|&(i, j)| colored_less(g.letter(j), g.letter(i)))
            .count() as u32;
        Stats {
            des,
            maj,
            col,
            d_vector,
            f_vector,
            fmaj,
            fdes,
            inv,
        }
    }
}

/// Every element of `G`, `H` or `Γ`, ordered lexicographically by window and
/// then by colors.
pub fn enumerate(params: &GroupParams, which: Which) -> Result<Vec<ColoredPerm>, GroupError> {
    let size = params.order_g();
    let guard = size_guard();
    if size > guard {
        return Err(GroupError::SizeGuardExceeded { size, guard });
    }
    let n = params.n as usize;
    let r = params.r;
    let mut out = Vec::new();
    for sigma in (1..=params.n).permutations(n) {
        let mut colors = vec![0u32; n];
        loop {
            let g = ColoredPerm {
                r,
                sigma: sigma.clone(),
                colors: colors.clone(),
            };
            let keep = match which {
                Which::G => true,
                Which::H => g.in_h(params),
                Which::Gamma => g.in_gamma(params),
            };
            if keep {
                out.push(g);
            }
            // odometer over colors, last position fastest
            let mut k = n;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                colors[k] += 1;
                if colors[k] < r {
                    break;
                }
                colors[k] = 0;
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX {
                break;
            }
        }
    }
    Ok(out)
}
