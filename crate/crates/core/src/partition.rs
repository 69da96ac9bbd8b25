//! Integer partitions and r-tuples of partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Dominance order on weakly decreasing vectors of equal sum, compared by
/// partial sums. Vectors may carry trailing zeros.
pub fn dominated_by(mu: &[u32], lambda: &[u32]) -> bool {
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..len {
        a += *mu.get(i).unwrap_or(&0) as u64;
        b += *lambda.get(i).unwrap_or(&0) as u64;
        if a > b {
            return false;
        }
    }
    a == b
}

/// An r-tuple of partitions `(λ⁰, …, λ^{r-1})`.
///
/// Serves both as the shape of an r-tableau and as the cycle type of a colored
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RPartition(Vec<Partition>);

impl RPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        RPartition(parts)
    }

    pub fn from_slices(parts: &[&[u32]]) -> Self {
        RPartition(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// The shape `(n)` in component 0, empty elsewhere.
    pub fn trivial(r: usize, n: u32) -> Self {
        let mut parts = vec![Partition::empty(); r];
        parts[0] = Partition::new(vec![n]);
        RPartition(parts)
    }

    /// `(λ⁰,…,λ^{r-1}) ↦ (λ^{r-1},λ⁰,…,λ^{r-2})`, applied `times` times.
    pub fn shifted(&self, times: i64) -> Self {
        let r = self.0.len();
        if r == 0 {
            return self.clone();
        }
        let k = times.rem_euclid(r as i64) as usize;
        let mut parts = self.0.clone();
        parts.rotate_right(k);
        RPartition(parts)
    }
}

impl fmt::Display for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if p.is_empty() {
                write!(f, "∅")?;
            } else {
                write!(f, "{p}")?;
            }
        }
        write!(f, ")")
    }
}

/// All r-tuples of partitions of total size `n`, ordered by the size
/// composition (lexicographically decreasing) and then componentwise.
pub fn r_partitions(r: usize, n: u32) -> Vec<RPartition> {
    fn rec(r: usize, n: u32, cur: &mut Vec<Partition>, out: &mut Vec<RPartition>) {
        if cur.len() + 1 == r {
            for p in Partition::all(n) {
                cur.push(p);
                out.push(RPartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for k in (0..=n).rev() {
            for p in Partition::all(k) {
                cur.push(p);
                rec(r, n - k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    rec(r, n, &mut Vec::new(), &mut out);
    out
}
