//! Sparse multivariate polynomials in the cumulants κ₁, κ₂, …, the genus
//! weight ε and the part-counting variable y, with exact scalar coefficients.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::scalar::{Coeff, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Epsilon,
    Y,
    /// The cumulant κ_k, k ≥ 1.
    Kappa(u16),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Epsilon => f.write_str("e"),
            Symbol::Y => f.write_str("y"),
            Symbol::Kappa(k) => write!(f, "k{k}"),
        }
    }
}

/// A power product of symbols; exponents are positive and symbols sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut m = Monomial::one();
        for (s, e) in powers {
            m = m.mul(&Monomial(if e == 0 { vec![] } else { vec![(s, e)] }));
        }
        m
    }

    /// κ_{[α]} = ∏ κ_ℓ^{α_ℓ} for a multiset of part sizes given as `(ℓ, α_ℓ)`.
    pub fn kappa_type(multiplicities: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Self::from_powers(
            multiplicities
                .into_iter()
                .map(|(l, a)| (Symbol::Kappa(l as u16), a)),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn exponent(&self, s: Symbol) -> u32 {
        self.0
            .iter()
            .find(|(t, _)| *t == s)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn without(&self, s: Symbol) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(t, _)| *t != s).collect())
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Part sizes of the κ-factor, largest first: κ₃κ₁² ↦ [3, 1, 1].
    pub fn kappa_parts(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for &(s, e) in self.0.iter().rev() {
            if let Symbol::Kappa(k) = s {
                parts.extend(std::iter::repeat_n(k as u32, e as usize));
            }
        }
        parts
    }

    /// Printing order: κ-type in decreasing lexicographic order of its
    /// parts, then increasing powers of ε and y.
    fn display_key(&self) -> (Reverse<Vec<u32>>, u32, u32) {
        (
            Reverse(self.kappa_parts()),
            self.exponent(Symbol::Epsilon),
            self.exponent(Symbol::Y),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        // κ's with the largest index first, then ε, then y.
        let mut factors: Vec<_> = self.0.clone();
        factors.sort_by_key(|(s, _)| match s {
            Symbol::Kappa(k) => (0, Reverse(*k)),
            Symbol::Epsilon => (1, Reverse(0)),
            Symbol::Y => (2, Reverse(0)),
        });
        for (i, (s, e)) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial `Σ c_m · m`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KappaPolynomial<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Scalar> KappaPolynomial<R> {
    pub fn constant(c: R) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: R, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        KappaPolynomial { terms }
    }

    pub fn var(s: Symbol) -> Self {
        Self::term(R::one(), Monomial::var(s))
    }

    pub fn kappa(k: u16) -> Self {
        Self::var(Symbol::Kappa(k))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    /// Collects the coefficient of `s^k` as a polynomial in the other symbols.
    pub fn coefficient_of_power(&self, s: Symbol, k: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(s) == k)
                .map(|(m, c)| (m.without(s), c.clone())),
        )
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    /// Substitutes the scalar `value` for `s`.
    pub fn substitute(&self, s: Symbol, value: &R) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(s);
            let mut c = c.clone();
            for _ in 0..e {
                c = c * value.clone();
            }
            out.add_term(m.without(s), c);
        }
        out
    }

    /// Terms in printing order (see [`Monomial`] display key).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &R)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_key().cmp(&b.0.display_key()).then(a.0.cmp(b.0)));
        v
    }
}

impl<R: Scalar> Zero for KappaPolynomial<R> {
    fn zero() -> Self {
        KappaPolynomial {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Scalar> One for KappaPolynomial<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Scalar> Add for KappaPolynomial<R> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.add_ref(&rhs);
        self
    }
}

impl<R: Scalar> Sub for KappaPolynomial<R> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self.sub_ref(&rhs);
        self
    }
}

impl<R: Scalar> Mul for KappaPolynomial<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<R: Scalar> Neg for KappaPolynomial<R> {
    type Output = Self;

    fn neg(self) -> Self {
        KappaPolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<R: Scalar> Coeff for KappaPolynomial<R> {
    type Scalar = R;

    fn from_scalar(s: R) -> Self {
        Self::constant(s)
    }

    fn add_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn sub_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        KappaPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        let c = self.as_scalar()?;
        if c.is_zero() {
            None
        } else {
            Some(Self::constant(R::one() / c))
        }
    }

    fn as_scalar(&self) -> Option<R> {
        match self.terms.len() {
            0 => Some(R::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }
}

/// Writes `c·m` sums as `k4 + 4*k3*k1 - 1/2*y`.
impl<R: Scalar> fmt::Display for KappaPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct TermJson {
    pub coefficient: String,
    pub monomial: Vec<(String, u32)>,
}

impl<R: Scalar> KappaPolynomial<R> {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| TermJson {
                coefficient: c.to_string(),
                monomial: m.powers().iter().map(|(s, e)| (s.to_string(), *e)).collect(),
            })
            .collect()
    }
}
