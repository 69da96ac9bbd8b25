//! Young r-tableaux: standard fillings and their descent statistics, shift
//! orbits of shapes, n-orbital tableaux, reverse semistandard fillings and
//! the bijection between those and pairs (standard tableau, gap vector).

use std::fmt;

use serde::Serialize;

use crate::group::{size_guard, GroupParams};
use crate::partition::{r_partitions, Partition, RPartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TabxError {
    #[error("enumeration exceeded the guard {0}")]
    SizeGuardExceeded(u128),
    #[error("tableau shape does not match")]
    ShapeMismatch,
    #[error("gap at position {0} is not a nonnegative multiple of r")]
    NonIntegralDelta(usize),
    #[error("filling is not a valid tableau: {0}")]
    Invalid(String),
}

/// Statistics of a standard r-tableau, all 1-based like those of colored
/// permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauStats {
    pub des: Vec<usize>,
    pub d_vector: Vec<u32>,
    pub colors: Vec<u32>,
    pub f_vector: Vec<u32>,
    pub col: u32,
    pub maj: u32,
    pub fmaj: u32,
}

/// A filling of the diagrams of an r-partition; `rows[k][i][j]` is the entry
/// in row `i`, column `j` of component `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RTableau {
    shape: RPartition,
    rows: Vec<Vec<Vec<u32>>>,
}

/// A cell `(component, row, column)`, 0-based.
pub type Cell = (usize, usize, usize);

impl RTableau {
    /// Builds a filling and checks it matches `shape`.
    pub fn new(shape: RPartition, rows: Vec<Vec<Vec<u32>>>) -> Result<Self, TabxError> {
        if rows.len() != shape.r() {
            return Err(TabxError::ShapeMismatch);
        }
        for (comp, part) in rows.iter().zip(shape.components()) {
            let lens: Vec<u32> = comp.iter().map(|row| row.len() as u32).collect();
            if Partition::new(lens.clone()).parts() != part.parts() || lens.contains(&0) {
                return Err(TabxError::ShapeMismatch);
            }
        }
        Ok(RTableau { shape, rows })
    }

    pub fn shape(&self) -> &RPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.shape.size() as usize
    }

    fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(k, comp)| {
            comp.iter().enumerate().flat_map(move |(i, row)| {
                row.iter().enumerate().map(move |(j, &v)| ((k, i, j), v))
            })
        })
    }

    /// Cell of each entry, indexed by entry − 1. Requires a standard filling.
    pub fn positions(&self) -> Vec<Cell> {
        let mut out = vec![(0, 0, 0); self.n()];
        for (cell, v) in self.cells() {
            out[v as usize - 1] = cell;
        }
        out
    }

    /// Entries `1..=n` each once, increasing along rows and down columns.
    pub fn is_standard(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        for (_, v) in self.cells() {
            if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize - 1], true) {
                return false;
            }
        }
        self.rows.iter().all(|comp| {
            comp.iter().enumerate().all(|(i, row)| {
                row.windows(2).all(|w| w[0] < w[1])
                    && (i == 0 || row.iter().enumerate().all(|(j, v)| comp[i - 1][j] < *v))
            })
        })
    }

    /// Descent set and colored statistics. `i` is a descent when `i+1` sits
    /// in a lower row of the same component or in a later component.
    pub fn stats(&self) -> TableauStats {
        let pos = self.positions();
        let n = pos.len();
        let r = self.r() as u32;
        let des: Vec<usize> = (1..n)
            .filter(|&i| {
                let (a, b) = (pos[i - 1], pos[i]);
                b.0 > a.0 || (b.0 == a.0 && b.1 > a.1)
            })
            .collect();
        let colors: Vec<u32> = pos.iter().map(|c| c.0 as u32).collect();
        let d_vector: Vec<u32> = (1..=n)
            .map(|i| des.iter().filter(|&&j| j >= i).count() as u32)
            .collect();
        let f_vector: Vec<u32> = d_vector.iter().zip(&colors).map(|(d, c)| r * d + c).collect();
        TableauStats {
            maj: des.iter().sum::<usize>() as u32,
            col: colors.iter().sum(),
            fmaj: f_vector.iter().sum(),
            des,
            d_vector,
            colors,
            f_vector,
        }
    }

    /// The 1-shift: component `k` moves to `k+1` (mod r), entries travel
    /// with their cells.
    pub fn shifted(&self) -> RTableau {
        let mut rows = self.rows.clone();
        rows.rotate_right(1);
        RTableau {
            shape: self.shape.shifted(1),
            rows,
        }
    }

    /// Component holding entry `i`.
    pub fn component_of(&self, i: u32) -> Option<usize> {
        self.cells().find(|&(_, v)| v == i).map(|(c, _)| c.0)
    }
}

impl fmt::Display for RTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows).map_err(|_| fmt::Error)?)
    }
}

/// All standard fillings of `shape`.
pub fn enumerate_syt(shape: &RPartition) -> Result<Vec<RTableau>, TabxError> {
    let target: Vec<Vec<usize>> = shape
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&x| x as usize).collect())
        .collect();
    let n = shape.size();
    let guard = size_guard();
    let mut rows: Vec<Vec<Vec<u32>>> = target.iter().map(|t| vec![Vec::new(); t.len()]).collect();
    let mut out = Vec::new();
    fn rec(
        next: u32,
        n: u32,
        target: &[Vec<usize>],
        rows: &mut Vec<Vec<Vec<u32>>>,
        shape: &RPartition,
        out: &mut Vec<RTableau>,
        guard: u128,
    ) -> Result<(), TabxError> {
        if next > n {
            if out.len() as u128 >= guard {
                return Err(TabxError::SizeGuardExceeded(guard));
            }
            out.push(RTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return Ok(());
        }
        for k in 0..target.len() {
            for i in 0..target[k].len() {
                let len = rows[k][i].len();
                if len < target[k][i] && (i == 0 || rows[k][i - 1].len() > len) {
                    rows[k][i].push(next);
                    rec(next + 1, n, target, rows, shape, out, guard)?;
                    rows[k][i].pop();
                }
            }
        }
        Ok(())
    }
    rec(1, n, &target, &mut rows, shape, &mut out, guard)?;
    Ok(out)
}

/// All standard r-tableaux with `n` cells.
pub fn enumerate_all_syt(r: usize, n: u32) -> Result<Vec<RTableau>, TabxError> {
    let mut out = Vec::new();
    for shape in r_partitions(r, n) {
        out.extend(enumerate_syt(&shape)?);
    }
    Ok(out)
}

/// The orbit of a shape under `d`-fold shifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeOrbit {
    /// Distinct shapes, starting with the one the orbit was built from.
    pub members: Vec<RPartition>,
    /// Number of distinct members.
    pub b: u32,
    /// Stabilizer order `p/b`.
    pub u: u32,
}

impl ShapeOrbit {
    pub fn representative(&self) -> &RPartition {
        &self.members[0]
    }

    pub fn contains(&self, shape: &RPartition) -> bool {
        self.members.contains(shape)
    }
}

pub fn orbit(shape: &RPartition, p: u32) -> ShapeOrbit {
    let r = shape.r() as u32;
    let d = r / p;
    let mut members: Vec<RPartition> = Vec::new();
    for i in 0..p {
        let s = shape.shifted((i * d) as i64);
        if !members.contains(&s) {
            members.push(s);
        }
    }
    let b = members.len() as u32;
    ShapeOrbit { members, b, u: p / b }
}

/// Distinct orbits of r-partitions of `n`, each led by its first member in
/// enumeration order.
pub fn all_orbits(params: &GroupParams) -> Vec<ShapeOrbit> {
    let mut out: Vec<ShapeOrbit> = Vec::new();
    for shape in r_partitions(params.r as usize, params.n) {
        if !out.iter().any(|o| o.contains(&shape)) {
            out.push(orbit(&shape, params.p));
        }
    }
    out
}

/// Standard tableaux with shape in the orbit and `n` in one of the first `d`
/// components.
pub fn enumerate_osyt_n(orb: &ShapeOrbit, params: &GroupParams) -> Result<Vec<RTableau>, TabxError> {
    let mut out = Vec::new();
    for shape in &orb.members {
        for t in enumerate_syt(shape)? {
            if t.component_of(params.n).is_some_and(|c| (c as u32) < params.d) {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// A reverse semistandard filling: rows weakly decrease, columns strictly
/// decrease, and entries of component `k` are `≡ k+1 (mod r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RSSTableau {
    shape: RPartition,
    rows: Vec<Vec<Vec<u32>>>,
}

impl RSSTableau {
    pub fn new(shape: RPartition, rows: Vec<Vec<Vec<u32>>>) -> Result<Self, TabxError> {
        let t = RTableau::new(shape, rows)?;
        let out = RSSTableau {
            shape: t.shape,
            rows: t.rows,
        };
        out.validate()?;
        Ok(out)
    }

    fn validate(&self) -> Result<(), TabxError> {
        let r = self.rows.len() as u32;
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v == 0 || v % r != (k as u32 + 1) % r {
                        return Err(TabxError::Invalid(format!("entry {v} in component {k}")));
                    }
                    if j > 0 && row[j - 1] < v {
                        return Err(TabxError::Invalid("row increases".into()));
                    }
                    if i > 0 && comp[i - 1][j] <= v {
                        return Err(TabxError::Invalid("column not strictly decreasing".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &RPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    /// Entries sorted weakly decreasing.
    pub fn theta(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.rows.iter().flatten().flatten().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// All reverse semistandard fillings of `shape` with entries at most `bound`.
pub fn enumerate_rssyt(shape: &RPartition, bound: u32) -> Vec<RSSTableau> {
    let r = shape.r() as u32;
    let per_component: Vec<Vec<Vec<Vec<u32>>>> = shape
        .components()
        .iter()
        .enumerate()
        .map(|(k, part)| {
            let allowed: Vec<u32> = (1..=bound).rev().filter(|v| v % r == (k as u32 + 1) % r).collect();
            fill_component(part.parts(), &allowed)
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; per_component.len()];
    if per_component.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        out.push(RSSTableau {
            shape: shape.clone(),
            rows: pick.iter().enumerate().map(|(k, &i)| per_component[k][i].clone()).collect(),
        });
        let mut k = pick.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < per_component[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}

/// Reverse column-strict fillings of one partition with values from
/// `allowed` (given in decreasing order).
fn fill_component(parts: &[u32], allowed: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(idx: usize, cells: &[(usize, usize)], allowed: &[u32], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if idx == cells.len() {
            out.push(rows.clone());
            return;
        }
        let (i, j) = cells[idx];
        for &v in allowed {
            if j > 0 && rows[i][j - 1] < v {
                continue;
            }
            if i > 0 && rows[i - 1][j] <= v {
                continue;
            }
            rows[i].push(v);
            rec(idx + 1, cells, allowed, rows, out);
            rows[i].pop();
        }
    }
    rec(0, &cells, allowed, &mut rows, &mut out);
    out
}

/// Splits a reverse semistandard filling into a standard tableau and the
/// gap vector `Δ`.
///
/// Entry `i` of the standard tableau goes where the `i`-th largest entry
/// sits, equal entries numbered left to right.
pub fn phi_lambda(t: &RSSTableau) -> Result<(RTableau, Vec<u32>), TabxError> {
    let r = t.rows.len() as i64;
    let mut cells: Vec<(u32, usize, usize, usize)> = Vec::new();
    for (k, comp) in t.rows.iter().enumerate() {
        for (i, row) in comp.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                cells.push((v, k, i, j));
            }
        }
    }
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.3.cmp(&b.3)));
    let mut rows: Vec<Vec<Vec<u32>>> = t.rows.iter().map(|c| c.iter().map(|row| vec![0; row.len()]).collect()).collect();
    for (idx, &(_, k, i, j)) in cells.iter().enumerate() {
        rows[k][i][j] = idx as u32 + 1;
    }
    let std = RTableau {
        shape: t.shape.clone(),
        rows,
    };
    let f = std.stats().f_vector;
    let theta: Vec<i64> = cells.iter().map(|c| c.0 as i64).collect();
    let n = theta.len();
    let mut delta = Vec::with_capacity(n);
    for i in 0..n {
        let (next_theta, next_f) = if i + 1 < n { (theta[i + 1], f[i + 1] as i64) } else { (1, 0) };
        let gap = theta[i] - f[i] as i64 - next_theta + next_f;
        if gap < 0 || gap % r != 0 {
            return Err(TabxError::NonIntegralDelta(i + 1));
        }
        delta.push((gap / r) as u32);
    }
    Ok((std, delta))
}

/// Rebuilds the reverse semistandard filling from `(T, Δ)`:
/// `θ_i = 1 + f_i(T) + r·Σ_{j≥i} Δ_j`.
pub fn phi_lambda_inverse(t: &RTableau, delta: &[u32]) -> Result<RSSTableau, TabxError> {
    if delta.len() != t.n() {
        return Err(TabxError::ShapeMismatch);
    }
    if !t.is_standard() {
        return Err(TabxError::Invalid("tableau is not standard".into()));
    }
    let r = t.r() as u32;
    let f = t.stats().f_vector;
    let mut tail = 0u32;
    let mut theta = vec![0u32; f.len()];
    for i in (0..f.len()).rev() {
        tail += delta[i];
        theta[i] = 1 + f[i] + r * tail;
    }
    let rows = t
        .rows
        .iter()
        .map(|comp| comp.iter().map(|row| row.iter().map(|&v| theta[v as usize - 1]).collect()).collect())
        .collect();
    RSSTableau::new(t.shape.clone(), rows)
}
