//! Sparse Laurent polynomials in two commuting variables `t` and `l` with
//! arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Integer Laurent polynomial in `t` and `l`. Keys are `(t-exponent,
/// l-exponent)`; no stored coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

/// Display order: total degree `|i| + |j|` descending, then `i`, then `j`
/// descending.
fn display_order(a: &(i64, i64), b: &(i64, i64)) -> Ordering {
    let da = a.0.abs() + a.1.abs();
    let db = b.0.abs() + b.1.abs();
    db.cmp(&da).then(b.0.cmp(&a.0)).then(b.1.cmp(&a.1))
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff.into(), i, j);
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(c.into(), i, j);
        }
        p
    }

    pub fn add_term(&mut self, coeff: BigInt, i: i64, j: i64) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
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

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in display order.
    pub fn terms(&self) -> Vec<(i64, i64, &BigInt)> {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(display_order);
        keys.into_iter().map(|k| (k.0, k.1, &self.terms[&k])).collect()
    }

    /// True when no term mentions `l`.
    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j == 0)
    }

    pub fn negate(&self) -> Self {
        -self.clone()
    }

    fn map_exponents(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let (a, b) = f(i, j);
            out.add_term(c.clone(), a, b);
        }
        out
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        self.map_exponents(|i, j| (-i, j))
    }

    /// Substitutes `l -> l^-1`.
    pub fn invert_l(&self) -> Self {
        self.map_exponents(|i, j| (i, -j))
    }

    /// Substitutes `l -> 1`.
    pub fn set_l_to_one(&self) -> Self {
        self.map_exponents(|i, _| (i, 0))
    }

    /// Replaces every `l^q` by `l^|q|`.
    pub fn fold_abs_l(&self) -> Self {
        self.map_exponents(|i, j| (i, j.abs()))
    }

    /// Multiplies by `t^i l^j`.
    pub fn shift(&self, i: i64, j: i64) -> Self {
        self.map_exponents(|a, b| (a + i, b + j))
    }

    fn triples(&self) -> Vec<(i64, i64, Coeff)> {
        self.terms().into_iter().map(|(i, j, c)| (i, j, Coeff::from(c))).collect()
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(c.clone(), i, j);
        }
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl Add<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Sub<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.clone() - rhs.clone()
    }
}

impl Mul<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term(x * y, a + c, b + d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly2 {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Renders e.g. `-t^2*l - t^-2*l + 2`; the zero polynomial renders as `0`.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, j, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut parts = 0;
            if (i, j) == (0, 0) || !mag.is_one() {
                write!(f, "{mag}")?;
                parts += 1;
            }
            for (var, e) in [('t', i), ('l', j)] {
                if e != 0 {
                    if parts > 0 {
                        f.write_str("*")?;
                    }
                    write_power(f, var, e)?;
                    parts += 1;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {position}: {reason}")]
pub struct ParsePolyError {
    pub position: usize,
    pub reason: &'static str,
}

/// Accepts the display syntax, with `ℓ` allowed for `l` and `*` optional.
impl FromStr for LaurentPoly2 {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('ℓ', "l");
        let b = s.as_bytes();
        let err = |position, reason| ParsePolyError { position, reason };
        let mut i = 0;
        let skip = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let int = |i: &mut usize| -> Option<BigInt> {
            let start = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > start).then(|| s[start..*i].parse().unwrap())
        };

        let mut out = LaurentPoly2::zero();
        skip(&mut i);
        if i == b.len() {
            return Err(err(0, "empty input"));
        }
        let mut first = true;
        while i < b.len() {
            let mut negative = false;
            if b[i] == b'+' || b[i] == b'-' {
                negative = b[i] == b'-';
                i += 1;
                skip(&mut i);
            } else if !first {
                return Err(err(i, "expected + or -"));
            }
            first = false;

            let explicit = int(&mut i);
            let had_coeff = explicit.is_some();
            let mut coeff = explicit.unwrap_or_else(BigInt::one);
            let (mut ti, mut lj) = (0i64, 0i64);
            let mut factors = 0;
            loop {
                skip(&mut i);
                if i < b.len() && b[i] == b'*' {
                    i += 1;
                    skip(&mut i);
                }
                let Some(&v) = b.get(i) else { break };
                if v != b't' && v != b'l' {
                    break;
                }
                i += 1;
                let mut e = 1i64;
                if b.get(i) == Some(&b'^') {
                    i += 1;
                    let neg = b.get(i) == Some(&b'-');
                    if neg {
                        i += 1;
                    }
                    let n = int(&mut i).ok_or(err(i, "expected exponent"))?;
                    let n = n.to_i64().ok_or(err(i, "exponent out of range"))?;
                    e = if neg { -n } else { n };
                }
                if v == b't' {
                    ti += e;
                } else {
                    lj += e;
                }
                factors += 1;
            }
            if factors == 0 && !had_coeff {
                return Err(err(i, "expected term"));
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(coeff, ti, lj);
            skip(&mut i);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Coeff {
    fn from(c: &BigInt) -> Self {
        c.to_i64().map_or_else(|| Coeff::Big(c.to_string()), Coeff::Small)
    }
}

/// JSON form: a list of `[i, j, coeff]` triples in display order. Coefficients
/// outside the `i64` range are written as decimal strings.
impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<(i64, i64, Coeff)>::deserialize(d)?;
        let mut out = LaurentPoly2::zero();
        for (i, j, c) in raw {
            let c = match c {
                Coeff::Small(v) => BigInt::from(v),
                Coeff::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            out.add_term(c, i, j);
        }
        Ok(out)
    }
}
