//! Sparse Laurent polynomials in `q` and `t` with big-integer coefficients,
//! `t`-binomials and symmetric functions in the monomial basis.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::Partition;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` and `t`. Terms are keyed by `(q_exp, t_exp)`;
/// zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QtPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * q^qe * t^te`.
    pub fn monomial(c: impl Into<BigInt>, qe: i64, te: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(qe, te, c.into());
        p
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    /// Builds a polynomial in `t` alone from coefficients of `t^0, t^1, ...`.
    pub fn from_t_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(0, e as i64, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, qe: i64, te: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((qe, te)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(q, t), c)| (q, t, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, qe: i64, te: i64) -> BigInt {
        self.terms.get(&(qe, te)).cloned().unwrap_or_default()
    }

    /// Multiplies by `c * q^qe * t^te`.
    pub fn shift(&self, qe: i64, te: i64) -> Self {
        QtPoly { terms: self.terms.iter().map(|(&(q, t), c)| ((q + qe, t + te), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `t` by `t^{-1}`.
    pub fn substitute_t_inverse(&self) -> Self {
        QtPoly { terms: self.terms.iter().map(|(&(q, t), c)| ((q, -t), c.clone())).collect() }
    }

    /// Replaces `q` by `q^{-1}`.
    pub fn substitute_q_inverse(&self) -> Self {
        QtPoly { terms: self.terms.iter().map(|(&(q, t), c)| ((-q, t), c.clone())).collect() }
    }

    /// Substitutes `q -> q^a t^b` (with `q` otherwise absent from `self`,
    /// this is how `z` is specialised in the chain sums).
    pub fn substitute_q_monomial(&self, a: i64, b: i64) -> Self {
        let mut out = Self::zero();
        for (&(q, t), c) in &self.terms {
            out.add_term(q * a, t + q * b, c.clone());
        }
        out
    }

    /// Value at `q = t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every coefficient is positive and every exponent is nonnegative.
    pub fn in_natural_qt(&self) -> bool {
        self.terms.iter().all(|(&(q, t), c)| q >= 0 && t >= 0 && c.is_positive())
    }

    pub fn min_exponents(&self) -> Option<(i64, i64)> {
        let q = self.terms.keys().map(|k| k.0).min()?;
        let t = self.terms.keys().map(|k| k.1).min()?;
        Some((q, t))
    }

    pub fn max_exponents(&self) -> Option<(i64, i64)> {
        let q = self.terms.keys().map(|k| k.0).max()?;
        let t = self.terms.keys().map(|k| k.1).max()?;
        Some((q, t))
    }
}

impl<'a> Add<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, c.clone());
        }
    }
}

impl AddAssign for QtPoly {
    fn add_assign(&mut self, rhs: QtPoly) {
        for ((q, t), c) in rhs.terms {
            self.add_term(q, t, c);
        }
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl<'a> Sub<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

impl<'a> Mul<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(q1, t1), c1) in &self.terms {
            for (&(q2, t2), c2) in &rhs.terms {
                out.add_term(q1 + q2, t1 + t2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QtPoly {
    fn sum<I: Iterator<Item = QtPoly>>(iter: I) -> QtPoly {
        let mut acc = QtPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

pub fn poly_add(a: &QtPoly, b: &QtPoly) -> QtPoly {
    a + b
}

pub fn poly_mul(a: &QtPoly, b: &QtPoly) -> QtPoly {
    a * b
}

pub fn substitute_t_inverse(p: &QtPoly) -> QtPoly {
    p.substitute_t_inverse()
}

fn fmt_power(f: &mut fmt::Formatter<'_>, var: &str, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(q, t), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = q == 0 && t == 0;
            if !mag.is_one() || unit {
                write!(f, "{mag}")?;
                if !unit {
                    write!(f, "*")?;
                }
            }
            fmt_power(f, "q", q)?;
            if q != 0 && t != 0 {
                write!(f, "*")?;
            }
            fmt_power(f, "t", t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: i64,
    t: i64,
    c: String,
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self.terms.iter().map(|(&(q, t), c)| TermJson { q, t, c: c.to_string() }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut p = QtPoly::zero();
        for term in terms {
            let c: BigInt = term.c.parse().map_err(D::Error::custom)?;
            p.add_term(term.q, term.t, c);
        }
        Ok(p)
    }
}

thread_local! {
    static BINOMIALS: RefCell<HashMap<(i64, i64), QtPoly>> = RefCell::new(HashMap::new());
}

/// The `t`-binomial `[n k]_t`, zero outside `0 <= k <= n`.
pub fn t_binomial(n: i64, k: i64) -> QtPoly {
    if k < 0 || n < 0 || k > n {
        return QtPoly::zero();
    }
    if k == 0 || k == n {
        return QtPoly::one();
    }
    if let Some(p) = BINOMIALS.with(|m| m.borrow().get(&(n, k)).cloned()) {
        return p;
    }
    // Pascal: [n k] = [n-1 k-1] + t^k [n-1 k]
    let p = &t_binomial(n - 1, k - 1) + &t_binomial(n - 1, k).shift(0, k);
    BINOMIALS.with(|m| m.borrow_mut().insert((n, k), p.clone()));
    p
}

/// The `t`-multinomial `[n; parts]_t` as a product of binomials.
pub fn t_multinomial(n: i64, parts: &[i64]) -> Result<QtPoly> {
    let sum: i64 = parts.iter().sum();
    if sum != n || parts.iter().any(|&p| p < 0) {
        return Err(Error::MultinomialSum { n, sum });
    }
    let mut acc = QtPoly::one();
    let mut rest = n;
    for &p in parts {
        acc = &acc * &t_binomial(rest, p);
        rest -= p;
    }
    Ok(acc)
}

/// A symmetric function in the monomial basis with `q,t` coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MonomialSym {
    coeffs: BTreeMap<Partition, QtPoly>,
}

impl MonomialSym {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_coeff(&mut self, mu: Partition, p: &QtPoly) {
        let entry = self.coeffs.entry(mu).or_default();
        *entry += p;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coefficient_of(&self, mu: &Partition) -> QtPoly {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &QtPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Keeps only the terms `m_mu` with `l(mu) <= max_parts`.
    pub fn truncate_parts(&self, max_parts: usize) -> Self {
        MonomialSym {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(mu, _)| mu.len() <= max_parts)
                .map(|(mu, p)| (mu.clone(), p.clone()))
                .collect(),
        }
    }

    /// True when all keys have the same size.
    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.coeffs.keys().map(|mu| mu.size());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|x| x == s),
        }
    }
}

pub fn coefficient_of(f: &MonomialSym, mu: &Partition) -> QtPoly {
    f.coefficient_of(mu)
}

impl fmt::Display for MonomialSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (mu, p) in &self.coeffs {
            writeln!(f, "m[{mu}]: {p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialSym(")?;
        for (mu, p) in &self.coeffs {
            write!(f, "[{mu}] => {p}; ")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    mu: Vec<usize>,
    poly: QtPoly,
}

impl Serialize for MonomialSym {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let items: Vec<MonomialJson> =
            self.coeffs.iter().map(|(mu, p)| MonomialJson { mu: mu.parts().to_vec(), poly: p.clone() }).collect();
        items.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialSym {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<MonomialJson>::deserialize(d)?;
        let mut f = MonomialSym::zero();
        for item in items {
            let mu = Partition::new(item.mu).map_err(D::Error::custom)?;
            f.add_coeff(mu, &item.poly);
        }
        Ok(f)
    }
}
