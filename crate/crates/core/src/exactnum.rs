//! Exact arithmetic: big rationals and the cyclotomic field `Q(ζ_r)`.
//!
//! A [`Cyclotomic`] value is stored as its coefficient vector in the power
//! basis `1, ζ, …, ζ^{φ(r)-1}`, reduced modulo the `r`-th cyclotomic
//! polynomial. Because `Φ_r` is irreducible, two values are equal exactly when
//! their reduced coefficient vectors are equal.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("coefficient vector for order {order} must have length {expected}, got {got}")]
    BadLength { order: u32, expected: usize, got: usize },
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::ParseRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn euler_phi(r: u32) -> usize {
    (1..=r).filter(|&k| num_integer::gcd(k, r) == 1).count()
}

/// Coefficients of `Φ_r`, lowest degree first.
///
/// Computed by dividing `x^r - 1` by every `Φ_d` with `d | r, d < r`.
pub fn cyclotomic_polynomial(r: u32) -> Vec<i64> {
    assert!(r >= 1, "cyclotomic polynomial needs r >= 1");
    cyclotomic_polynomial_cached(r).as_ref().clone()
}

fn cyclotomic_polynomial_cached(r: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&r) {
        return p.clone();
    }
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in 1..r {
        if r.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial_cached(d));
        }
    }
    let p = Arc::new(num);
    cache.write().unwrap().insert(r, p.clone());
    p
}

/// Exact division by a monic divisor; panics if a remainder is left.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Q(ζ_r)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, rational(n))
    }

    /// `ζ_r^k` with `k` taken modulo `r`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); order as usize];
        raw[k] = Rational::one();
        Self::reduce(order, raw)
    }

    /// Builds a value from an already reduced coefficient vector.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        let expected = euler_phi(order);
        if coeffs.len() != expected {
            return Err(ExactError::BadLength {
                order,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Cyclotomic { order, coeffs })
    }

    /// Reduces an arbitrary polynomial in `ζ` modulo `Φ_r`.
    pub fn reduce(order: u32, mut raw: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial_cached(order);
        let deg = phi.len() - 1;
        if raw.len() > deg {
            for k in (deg..raw.len()).rev() {
                let c = std::mem::take(&mut raw[k]);
                if c.is_zero() {
                    continue;
                }
                // x^k = x^{k-deg} * x^deg and x^deg = -Σ_{j<deg} phi_j x^j
                for (j, &pj) in phi.iter().enumerate().take(deg) {
                    if pj != 0 {
                        raw[k - deg + j] -= &c * BigInt::from(pj);
                    }
                }
            }
            raw.truncate(deg);
        }
        raw.resize(deg, Rational::zero());
        Cyclotomic { order, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn check(&self, rhs: &Self) -> Result<(), ExactError> {
        if self.order != rhs.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check(rhs)?;
        let len = self.coeffs.len();
        if len == 1 {
            return Ok(Self::from_rational(
                self.order,
                &self.coeffs[0] * &rhs.coeffs[0],
            ));
        }
        let mut raw = vec![Rational::zero(); 2 * len - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(Self::reduce(self.order, raw))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplies by `ζ^k`.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        self.checked_mul(&Self::zeta_pow(self.order, k)).unwrap()
    }

    /// Complex conjugation, `ζ^k ↦ ζ^{r-k}`.
    pub fn conj(&self) -> Self {
        let r = self.order as usize;
        let mut raw = vec![Rational::zero(); r];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(r - k) % r] += c;
        }
        Self::reduce(self.order, raw)
    }

    /// Multiplicative inverse, found by solving `a · v = 1` in the power basis.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.coeffs.len();
        // column j of the multiplication matrix is a·ζ^j
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.clone();
        for _ in 0..n {
            cols.push(cur.coeffs.clone());
            cur = cur.mul_zeta_pow(1);
        }
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !aug[i][col].is_zero())
                .ok_or(ExactError::DivisionByZero)?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = aug[col].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (v, p) in row.iter_mut().zip(&pivot_row) {
                        *v -= &f * p;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            order: self.order,
            coeffs: aug.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{}>({})", self.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = format_rational(&abs);
            match k {
                0 => f.write_str(&mag)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).expect("mixed-order cyclotomic arithmetic")
            }
        }
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    r: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            r: self.order,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.r == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Cyclotomic::from_coeffs(repr.r, coeffs).map_err(D::Error::custom)
    }
}
