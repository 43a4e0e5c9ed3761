//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Variables are 1-based indices (`x_1`, `x_2`, ...). Monomials are kept in a
//! fixed graded-lexicographic order so that every polynomial has exactly one
//! canonical form; identity checks are literal term-by-term equality and
//! serialization is deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (the `num-rational` crate maintains both invariants).
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// `base^exp` with the empty-product convention `0^0 = 1`.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// A product of variable powers, e.g. `x_1^2 x_3`.
///
/// Zero exponents are never stored; the empty monomial is the constant `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// `(variable index, exponent)` pairs, sorted by variable, exponents > 0.
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The single variable `x_i` (1-based).
    pub fn var(i: u32) -> Self {
        assert!(i >= 1, "variables are 1-based");
        Monomial { exps: vec![(i, 1)] }
    }

    /// Build from `(variable, exponent)` pairs; zero exponents are dropped
    /// and repeated variables are combined.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in pairs {
            assert!(v >= 1, "variables are 1-based");
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    /// Exponent of `x_i` (0 if absent).
    pub fn exponent(&self, i: u32) -> u32 {
        self.exps
            .binary_search_by_key(&i, |&(v, _)| v)
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Iterate `(variable, exponent)` pairs in variable order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }
}

/// Graded lexicographic order: compare total degree first, then lexicographic
/// with `x_1 > x_2 > ...` (at the first variable where exponents differ, the
/// larger exponent wins). This is the canonical term order everywhere.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    match va.cmp(&vb) {
                        // Earlier variable present only on one side: that side
                        // has the larger exponent there, so it is greater.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => {
                                a.next();
                                b.next();
                            }
                            ord => return ord,
                        },
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x_{v}")?;
            } else {
                write!(f, "x_{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: a map from monomials to nonzero rational coefficients.
///
/// Zero coefficients are never stored, so `PartialEq` is exact term-by-term
/// equality and `p == q` decides the polynomial identity `p = q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn constant_int(c: i64) -> Self {
        Polynomial::constant(rat_int(c))
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: u32) -> Self {
        let mut p = Polynomial::zero();
        p.terms.insert(Monomial::var(i), Rat::one());
        p
    }

    /// A single term `c * m`.
    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// If the polynomial is constant, its value.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// All variables that occur with nonzero exponent.
    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    /// Terms in descending canonical (graded-lex) order, leading term first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    /// Add `c * m` in place, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `self^e` by binary exponentiation; `p^0 = 1` for every `p`.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute polynomials for variables. Variables missing from the
    /// assignment are left alone, so this composes and also renames.
    pub fn substitute(&self, assignment: &BTreeMap<u32, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            let mut kept = Monomial::one();
            for (v, e) in m.iter() {
                match assignment.get(&v) {
                    Some(p) => term = term.mul(&p.pow(e)),
                    None => kept = kept.mul(&Monomial::from_pairs([(v, e)])),
                }
            }
            term = term.mul(&Polynomial::term(kept, Rat::one()));
            out = out.add(&term);
        }
        out
    }

    /// Evaluate at a rational point. The point must assign every variable
    /// that occurs in the polynomial.
    pub fn eval(&self, point: &BTreeMap<u32, Rat>) -> Result<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(&v).ok_or(Error::MissingVariable(v))?;
                val *= rat_pow(x, e);
            }
            total += val;
        }
        Ok(total)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Canonical JSON: `{"terms":[{"exps":{"1":2,"3":1},"num":"-3","den":"2"},...]}`
/// with terms in descending graded-lex order and exponent keys in ascending
/// variable order.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct TermRepr<'a>(&'a Monomial, &'a Rat);
        impl Serialize for TermRepr<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut s = serializer.serialize_struct("Term", 3)?;
                struct Exps<'a>(&'a Monomial);
                impl Serialize for Exps<'_> {
                    fn serialize<S: Serializer>(
                        &self,
                        serializer: S,
                    ) -> std::result::Result<S::Ok, S::Error> {
                        let mut m = serializer.serialize_map(Some(self.0.iter().count()))?;
                        for (v, e) in self.0.iter() {
                            m.serialize_entry(&v.to_string(), &e)?;
                        }
                        m.end()
                    }
                }
                s.serialize_field("exps", &Exps(self.0))?;
                s.serialize_field("num", &self.1.numer().to_string())?;
                s.serialize_field("den", &self.1.denom().to_string())?;
                s.end()
            }
        }
        struct Terms<'a>(&'a Polynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.terms.len()))?;
                for (m, c) in self.0.terms_desc() {
                    seq.serialize_element(&TermRepr(m, c))?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("Polynomial", 1)?;
        s.serialize_field("terms", &Terms(self))?;
        s.end()
    }
}

/// `s_V = sum of x_i over i in V`. The empty set is rejected.
pub fn linear_sum(vars: impl IntoIterator<Item = u32>) -> Result<Polynomial> {
    let vars: BTreeSet<u32> = vars.into_iter().collect();
    if vars.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    let mut p = Polynomial::zero();
    for v in vars {
        p.add_term(Monomial::var(v), Rat::one());
    }
    Ok(p)
}

/// `s_[n] = x_1 + ... + x_n`.
pub fn linear_sum_1n(n: u32) -> Result<Polynomial> {
    linear_sum(1..=n)
}

/// The basis polynomial `h_k` applied to an arbitrary argument:
/// `h_0(p) = 1` and `h_k(p) = p * (p + k)^(k-1)` for `k >= 1`.
pub fn h_poly(k: u32, p: &Polynomial) -> Polynomial {
    if k == 0 {
        return Polynomial::one();
    }
    let shifted = p.add(&Polynomial::constant_int(k as i64));
    p.mul(&shifted.pow(k - 1))
}
