//! Truncated formal power series `Σ_{k≤N} c_k x^k` over an exact
//! coefficient ring.
//!
//! A series carries its truncation order `N` (inclusive). Binary operations
//! between series of different orders work at the smaller order; nothing is
//! ever read beyond the stored coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{KappaPolynomial, TermJson};
use crate::scalar::{Coeff, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// `c·x^k`, which is zero when `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping the excess to reach `order`.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    /// `Σ_{k=0}^{N} f(k) x^k`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> C) -> Self {
        let mut s = Self::zero(order);
        for k in 0..=order {
            s.coeffs[k] = f(k);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        assert!(
            k <= self.order(),
            "coefficient x^{k} is beyond the truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &C::Scalar) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut s = Self::zero(n);
        for i in k..=n {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    /// Divides by `x^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::NotDivisible(k));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(k));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=n)
            .map(|k| self.coeffs[k].scale(&scalar_of::<C>(k as i64)))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `1/f`, defined when the constant term is a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc.add_ref(&self.coeffs[i].mul_ref(&out[k - i]));
                }
            }
            out.push(-acc.mul_ref(&inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `f^e` for a rational exponent, when `f(0) = 1`.
    ///
    /// Uses `f·g' = e·f'·g` for `g = f^e`, which gives
    /// `n·g_n = Σ_{k=1}^{n} (e·k − (n − k)) f_k g_{n−k}`.
    pub fn pow_rational(&self, e: &C::Scalar) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut g: Vec<C> = Vec::with_capacity(n + 1);
        g.push(C::one());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = e.clone() * scalar_of::<C>(k as i64) - scalar_of::<C>((m - k) as i64);
                if w.is_zero() {
                    continue;
                }
                acc.add_ref(&self.coeffs[k].mul_ref(&g[m - k]).scale(&w));
            }
            let inv_m = C::Scalar::one() / scalar_of::<C>(m as i64);
            g.push(acc.scale(&inv_m));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `f ∘ g`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        Ok(Composer::new(g)?.apply(self))
    }
}

fn scalar_of<C: Coeff>(n: i64) -> C::Scalar {
    C::Scalar::from_i64(n).expect("integer embeds in the scalar field")
}

/// Cached powers `g^0 … g^N` of an inner series, so that many outer series
/// can be composed with the same `g` for the cost of scalings and sums.
#[derive(Debug, Clone)]
pub struct Composer<C> {
    powers: Vec<TruncatedSeries<C>>,
}

impl<C: Coeff> Composer<C> {
    pub fn new(g: &TruncatedSeries<C>) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = g.order();
        let mut powers = Vec::with_capacity(n + 1);
        powers.push(TruncatedSeries::one(n));
        for k in 1..=n {
            let next = &powers[k - 1] * g;
            powers.push(next);
        }
        Ok(Composer { powers })
    }

    pub fn order(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn power(&self, k: usize) -> &TruncatedSeries<C> {
        &self.powers[k]
    }

    /// `f(g)` at the smaller of the two orders.
    pub fn apply(&self, f: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let n = self.order().min(f.order());
        let coeffs: Vec<C> = (0..=n)
            .into_par_iter()
            .map(|m| {
                // g^k starts at x^k, so only k ≤ m contributes to x^m.
                let mut acc = C::zero();
                for k in 0..=m {
                    let fk = &f.coeffs[k];
                    if fk.is_zero() {
                        continue;
                    }
                    let p = &self.powers[k].coeffs[m];
                    if !p.is_zero() {
                        acc.add_ref(&fk.mul_ref(p));
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Solves `Z = 1 + W(x·Z)` by iterating `Z ← 1 + W(x·Z)` from `Z = 1`.
///
/// Every pass fixes one more coefficient, so pass `k` works at order `k`;
/// the final result is checked against the defining equation.
pub fn solve_fixed_point<C: Coeff>(w: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    if !w.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let n = w.order();
    let mut z = TruncatedSeries::one(0);
    for k in 1..=n {
        let lifted = TruncatedSeries::from_coeffs(z.coeffs.clone(), k);
        let xz = lifted.shift_up(1);
        z = &TruncatedSeries::one(k) + &w.truncate(k).compose(&xz)?;
    }
    let residual = &(&z - &TruncatedSeries::one(n)) - &w.compose(&z.shift_up(1))?;
    if !residual.is_zero() {
        return Err(Error::NoConvergence(n));
    }
    Ok(z)
}

/// Second route to the same fixed point: by Lagrange inversion,
/// `[x^n] Z = [t^n] (1 + W(t))^{n+1} / (n + 1)`.
pub fn lagrange_fixed_point<C: Coeff>(w: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    if !w.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let n = w.order();
    let phi = &TruncatedSeries::one(n) + w;
    let mut power = phi.clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for m in 0..=n {
        // power = φ^{m+1}
        let inv = C::Scalar::one() / scalar_of::<C>(m as i64 + 1);
        coeffs.push(power.coeffs[m].scale(&inv));
        power = &power * &phi;
    }
    Ok(TruncatedSeries { coeffs })
}

impl<'a, C: Coeff> Add<&'a TruncatedSeries<C>> for &'a TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn add(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut c = self.coeffs[k].clone();
                c.add_ref(&rhs.coeffs[k]);
                c
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<'a, C: Coeff> Sub<&'a TruncatedSeries<C>> for &'a TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn sub(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut c = self.coeffs[k].clone();
                c.sub_ref(&rhs.coeffs[k]);
                c
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<'a, C: Coeff> Mul<&'a TruncatedSeries<C>> for &'a TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn mul(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let n = self.order().min(rhs.order());
        let a = &self.coeffs;
        let b = &rhs.coeffs;
        let lo_a = a.iter().position(|c| !c.is_zero()).unwrap_or(n + 1);
        let lo_b = b.iter().position(|c| !c.is_zero()).unwrap_or(n + 1);
        let coeffs = (0..=n)
            .into_par_iter()
            .map(|k| {
                let mut acc = C::zero();
                if k >= lo_a + lo_b {
                    for i in lo_a..=(k - lo_b) {
                        let (x, y) = (&a[i], &b[k - i]);
                        if !x.is_zero() && !y.is_zero() {
                            acc.add_ref(&x.mul_ref(y));
                        }
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<C: Coeff> Add for TruncatedSeries<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for TruncatedSeries<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for TruncatedSeries<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for TruncatedSeries<C> {
    type Output = Self;

    fn neg(self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

/// How a coefficient is printed inside `c0 + c1*x + …`.
pub trait CoeffDisplay {
    fn fmt_coeff(&self) -> String;
    fn is_single_term(&self) -> bool;
    fn json_terms(&self) -> Vec<TermJson>;
}

impl<T> CoeffDisplay for num_rational::Ratio<T>
where
    T: Clone + num_integer::Integer + fmt::Display,
{
    fn fmt_coeff(&self) -> String {
        self.to_string()
    }

    fn is_single_term(&self) -> bool {
        true
    }

    fn json_terms(&self) -> Vec<TermJson> {
        vec![TermJson {
            coefficient: self.to_string(),
            monomial: vec![],
        }]
    }
}

impl<R: Scalar> CoeffDisplay for KappaPolynomial<R> {
    fn fmt_coeff(&self) -> String {
        self.to_string()
    }

    fn is_single_term(&self) -> bool {
        self.len() <= 1
    }

    fn json_terms(&self) -> Vec<TermJson> {
        self.to_json_terms()
    }
}

impl<C: Coeff + CoeffDisplay> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut body = c.fmt_coeff();
            let negative = c.is_single_term() && body.starts_with('-');
            if negative {
                body.remove(0);
            }
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let body = if c.is_single_term() || k == 0 {
                body
            } else {
                format!("({body})")
            };
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    let xk = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                    if body == "1" {
                        f.write_str(&xk)?
                    } else {
                        write!(f, "{body}*{xk}")?
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[derive(Serialize)]
pub struct SeriesTermJson {
    pub power: usize,
    pub terms: Vec<TermJson>,
}

impl<C: Coeff + CoeffDisplay> TruncatedSeries<C> {
    /// One entry per nonzero coefficient.
    pub fn to_json(&self) -> Vec<SeriesTermJson> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(power, c)| SeriesTermJson {
                power,
                terms: c.json_terms(),
            })
            .collect()
    }
}
