//! Euler characteristics of free products and of their Whitehead-type
//! automorphism groups, with the palindromic specializations.
//!
//! Two independent routes compute the outer-Whitehead value: a closed form
//! in `chi(G)` and an alternating sum over the hypertree poset weighted by
//! stabilizer characteristics and edge weights. The sum route is the
//! cross-check and is exact.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counting::{factorial, totient};
use crate::hypertrees::{enumerate_hypertrees, Hypertree};
use crate::poly::{rat_pow, Rat};
use crate::{Error, Result};

/// Maximum ground-set size for which the hypertree-sum route runs by
/// default; above it only the closed forms are offered.
pub const DEFAULT_SUM_CEILING: u32 = 5;

/// One free factor of a free product.
#[derive(Clone, Debug, PartialEq)]
pub enum FactorGroup {
    /// Finite cyclic of the given order (>= 2): `chi = 1/m`, trivial inner
    /// automorphisms, `|Out| = phi(m)`.
    FiniteCyclic(u64),
    /// Finite group with explicitly supplied data. Two factors are treated
    /// as isomorphic exactly when their labels match.
    FiniteGeneral {
        order: u64,
        inn_order: u64,
        out_order: u64,
        iso_label: String,
    },
    /// Infinite cyclic: `chi = 0`; carries no Inn/Out data.
    InfiniteCyclic,
    /// A group known only through its Euler characteristic.
    AbstractChi(Rat),
}

impl FactorGroup {
    pub fn chi(&self) -> Rat {
        match self {
            FactorGroup::FiniteCyclic(m) => Rat::new(BigInt::one(), BigInt::from(*m)),
            FactorGroup::FiniteGeneral { order, .. } => {
                Rat::new(BigInt::one(), BigInt::from(*order))
            }
            FactorGroup::InfiniteCyclic => Rat::zero(),
            FactorGroup::AbstractChi(chi) => chi.clone(),
        }
    }

    /// Inner-automorphism order, when the factor is finite.
    pub fn inn_order(&self) -> Option<u64> {
        match self {
            FactorGroup::FiniteCyclic(_) => Some(1),
            FactorGroup::FiniteGeneral { inn_order, .. } => Some(*inn_order),
            _ => None,
        }
    }

    /// Outer-automorphism order, when the factor is finite.
    pub fn out_order(&self) -> Option<u64> {
        match self {
            FactorGroup::FiniteCyclic(m) => Some(totient(*m)),
            FactorGroup::FiniteGeneral { out_order, .. } => Some(*out_order),
            _ => None,
        }
    }

    /// Label deciding which factors a permutation in Omega may exchange.
    pub fn iso_label(&self) -> Option<String> {
        match self {
            FactorGroup::FiniteCyclic(m) => Some(format!("C{m}")),
            FactorGroup::FiniteGeneral { iso_label, .. } => Some(iso_label.clone()),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FactorGroup::FiniteCyclic(_) => "finite cyclic",
            FactorGroup::FiniteGeneral { .. } => "finite",
            FactorGroup::InfiniteCyclic => "infinite cyclic",
            FactorGroup::AbstractChi(_) => "abstract chi",
        }
    }

    /// Parse one token of the group mini-language: `c<m>`, `z`,
    /// `chi:<p>/<q>`, or `g:<order>:<inn>:<out>:<label>`.
    pub fn parse(token: &str) -> Result<FactorGroup> {
        let bad = || Error::BadGroupToken(token.to_string());
        let t = token.trim();
        if t == "z" {
            return Ok(FactorGroup::InfiniteCyclic);
        }
        if let Some(rest) = t.strip_prefix("chi:") {
            let (p, q) = match rest.split_once('/') {
                Some((p, q)) => (p, q),
                None => (rest, "1"),
            };
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(FactorGroup::AbstractChi(Rat::new(p, q)));
        }
        if let Some(rest) = t.strip_prefix("g:") {
            let parts: Vec<&str> = rest.splitn(4, ':').collect();
            if parts.len() != 4 {
                return Err(bad());
            }
            let order: u64 = parts[0].parse().map_err(|_| bad())?;
            let inn_order: u64 = parts[1].parse().map_err(|_| bad())?;
            let out_order: u64 = parts[2].parse().map_err(|_| bad())?;
            if order == 0 || inn_order == 0 || out_order == 0 || parts[3].is_empty() {
                return Err(bad());
            }
            return Ok(FactorGroup::FiniteGeneral {
                order,
                inn_order,
                out_order,
                iso_label: parts[3].to_string(),
            });
        }
        if let Some(m) = t.strip_prefix('c') {
            let m: u64 = m.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            return Ok(FactorGroup::FiniteCyclic(m));
        }
        Err(bad())
    }
}

impl fmt::Display for FactorGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorGroup::FiniteCyclic(m) => write!(f, "c{m}"),
            FactorGroup::FiniteGeneral {
                order,
                inn_order,
                out_order,
                iso_label,
            } => write!(f, "g:{order}:{inn_order}:{out_order}:{iso_label}"),
            FactorGroup::InfiniteCyclic => write!(f, "z"),
            FactorGroup::AbstractChi(chi) => write!(f, "chi:{chi}"),
        }
    }
}

/// A free product `G_1 * ... * G_n` given by its ordered factors.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSystem {
    factors: Vec<FactorGroup>,
}

impl GroupSystem {
    pub fn new(factors: Vec<FactorGroup>) -> Result<GroupSystem> {
        if factors.is_empty() {
            return Err(Error::TooFewFactors { needed: 1, got: 0 });
        }
        Ok(GroupSystem { factors })
    }

    /// Parse a comma-separated factor list, e.g. `c2,c2,c3` or `z,z,z,z`.
    pub fn parse(list: &str) -> Result<GroupSystem> {
        let factors: Result<Vec<FactorGroup>> =
            list.split(',').map(FactorGroup::parse).collect();
        GroupSystem::new(factors?)
    }

    /// `n` infinite cyclic factors (the free group of rank `n`).
    pub fn free_of_rank(n: u32) -> Result<GroupSystem> {
        GroupSystem::new(vec![FactorGroup::InfiniteCyclic; n as usize])
    }

    /// `count` copies of the cyclic group of order two.
    pub fn z2_copies(count: u32) -> Result<GroupSystem> {
        GroupSystem::new(vec![FactorGroup::FiniteCyclic(2); count as usize])
    }

    pub fn factors(&self) -> &[FactorGroup] {
        &self.factors
    }

    pub fn n(&self) -> u32 {
        self.factors.len() as u32
    }

    fn require_at_least(&self, needed: u32) -> Result<()> {
        if self.n() < needed {
            return Err(Error::TooFewFactors {
                needed,
                got: self.n(),
            });
        }
        Ok(())
    }

    fn require_finite(&self) -> Result<()> {
        for (index, f) in self.factors.iter().enumerate() {
            if f.iso_label().is_none() {
                return Err(Error::NonFiniteFactor {
                    index: index + 1,
                    kind: f.kind_name().to_string(),
                });
            }
        }
        Ok(())
    }

    /// `chi(G) = chi(G_1) + ... + chi(G_n) - (n - 1)`.
    pub fn chi_free_product(&self) -> Rat {
        let sum = self
            .factors
            .iter()
            .fold(Rat::zero(), |acc, f| acc + f.chi());
        sum - Rat::from_integer(BigInt::from(self.n() as i64 - 1))
    }

    /// `chi` of the stabilizer of a hypertree: the direct sum of
    /// `val(i) - 1` copies of each factor, so the product of
    /// `chi(G_i)^(val(i)-1)` (empty product = 1).
    pub fn chi_stabilizer(&self, t: &Hypertree) -> Result<Rat> {
        if t.n() != self.n() {
            return Err(Error::MismatchedGroundSet(t.n(), self.n()));
        }
        let mut acc = Rat::one();
        for (i, &val) in t.valences().iter().enumerate() {
            acc *= rat_pow(&self.factors[i].chi(), val - 1);
        }
        Ok(acc)
    }

    /// Outer-Whitehead route through the hypertree poset:
    /// `(-1)^n * sum over HT_n of (-1)^rank * chi(Stab) * e_weight`.
    pub fn chi_owh_sum(&self, sum_ceiling: u32) -> Result<Rat> {
        self.require_at_least(2)?;
        let n = self.n();
        if n > sum_ceiling {
            return Err(Error::SumCeilingExceeded {
                n,
                ceiling: sum_ceiling,
            });
        }
        let mut acc = Rat::zero();
        for t in enumerate_hypertrees(n)? {
            let mut term = self.chi_stabilizer(&t)?
                * Rat::from_integer(t.e_weight_value());
            if t.rank() % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        if n % 2 == 1 {
            acc = -acc;
        }
        Ok(acc)
    }

    /// Closed form `chi(OWh(G)) = chi(G)^(n-2)`.
    pub fn chi_owh_closed(&self) -> Result<Rat> {
        self.require_at_least(2)?;
        Ok(rat_pow(&self.chi_free_product(), self.n() - 2))
    }

    /// `chi(Wh(G)) = chi(G)^(n-1)`.
    pub fn chi_wh(&self) -> Result<Rat> {
        self.require_at_least(2)?;
        Ok(rat_pow(&self.chi_free_product(), self.n() - 1))
    }

    /// Order of the group permuting isomorphic factors: the product over
    /// iso-label classes of the factorial of the multiplicity.
    pub fn omega_order(&self) -> Result<BigInt> {
        self.require_finite()?;
        let mut counts: std::collections::BTreeMap<String, u32> = Default::default();
        for f in &self.factors {
            *counts.entry(f.iso_label().expect("finite factor")).or_insert(0) += 1;
        }
        Ok(counts.values().map(|&c| factorial(c)).product())
    }

    /// `chi(FR(G)) = chi(G)^(n-1) * prod |Inn(G_i)|`.
    pub fn chi_fr(&self) -> Result<Rat> {
        self.require_at_least(2)?;
        self.require_finite()?;
        let mut acc = self.chi_wh()?;
        for f in &self.factors {
            acc *= Rat::from_integer(BigInt::from(f.inn_order().expect("finite factor")));
        }
        Ok(acc)
    }

    /// `chi(Aut(G)) = chi(G)^(n-1) / (|Omega| * prod |Out(G_i)|)`.
    pub fn chi_aut(&self) -> Result<Rat> {
        self.require_at_least(2)?;
        self.require_finite()?;
        let mut acc = self.chi_wh()? / Rat::from_integer(self.omega_order()?);
        for f in &self.factors {
            acc /= Rat::from_integer(BigInt::from(f.out_order().expect("finite factor")));
        }
        Ok(acc)
    }

    /// `chi(Out(G)) = chi(G)^(n-2) / (|Omega| * prod |Out(G_i)|)`.
    ///
    /// When `chi(G) = 0` the quotient relation `chi(Out) = chi(Aut)/chi(G)`
    /// is indeterminate; this is the direct formula, which still applies.
    pub fn chi_out(&self) -> Result<Rat> {
        self.require_at_least(2)?;
        self.require_finite()?;
        let mut acc = self.chi_owh_closed()? / Rat::from_integer(self.omega_order()?);
        for f in &self.factors {
            acc /= Rat::from_integer(BigInt::from(f.out_order().expect("finite factor")));
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// The three palindromic Euler characteristics for the free group of rank
/// `n`: elementary, pure, and full.
#[derive(Clone, Debug, PartialEq)]
pub struct PalindromicChi {
    pub n: u32,
    /// `(1-n)^(n-1)`
    pub epia: Rat,
    /// `(1-n)^(n-1) / 2^n`
    pub ppia: Rat,
    /// `(1-n)^(n-1) / (2^n * n!)`
    pub pia: Rat,
    /// At `n = 1` the formulas evaluate (with `0^0 = 1`) but carry no
    /// group-theoretic interpretation; this flag marks that case.
    pub formula_only: bool,
}

/// Evaluate the palindromic formulas at rank `n >= 1`.
pub fn chi_palindromic(n: u32) -> PalindromicChi {
    assert!(n >= 1, "rank must be at least 1");
    let epia = rat_pow(&Rat::from_integer(BigInt::from(1i64 - n as i64)), n - 1);
    let two_n = rat_pow(&Rat::from_integer(BigInt::from(2)), n);
    let ppia = &epia / &two_n;
    let pia = &ppia / Rat::from_integer(factorial(n));
    PalindromicChi {
        n,
        epia,
        ppia,
        pia,
        formula_only: n == 1,
    }
}

/// Render a rational as `p/q` (or just `p` when integral); used by the CLI
/// and by serialized outputs.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.denom().is_negative() {
        // num-rational keeps denominators positive; belt and braces
        format!("{}/{}", -r.numer(), -r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
