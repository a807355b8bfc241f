//! Closed forms and published expansions used as regression fixtures.
//!
//! Algebraic closed forms are expanded exactly with fractional powers; no
//! radical is ever manipulated symbolically.

use num_traits::Zero;
use serde::Deserialize;

use super::{build_w, genus_series, CumulantSpec};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Symbol};
use crate::scalar::{Coeff, Scalar};
use crate::{NumericSeries, Poly, Rational, SymbolicSeries};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Σ c x^k from `(k, c)` pairs.
fn poly(terms: &[(usize, i64)], order: usize) -> NumericSeries {
    let mut s = NumericSeries::zero(order);
    for &(k, c) in terms {
        s = &s + &NumericSeries::monomial(q(c), k, order);
    }
    s
}

/// Σ c x^i y^j from `(i, j, c)` triples.
fn poly_xy(terms: &[(usize, u32, i64)], order: usize) -> SymbolicSeries {
    let mut s = SymbolicSeries::zero(order);
    for &(i, j, c) in terms {
        let coeff = Poly::term(q(c), Monomial::from_powers([(Symbol::Y, j)]));
        s = &s + &SymbolicSeries::monomial(coeff, i, order);
    }
    s
}

fn pow(s: &NumericSeries, numer: i64, denom: i64) -> NumericSeries {
    s.pow_rational(&Rational::from_ratio(numer, denom)).expect("constant term is 1")
}

fn pow_xy(s: &SymbolicSeries, numer: i64, denom: i64) -> SymbolicSeries {
    s.pow_rational(&Rational::from_ratio(numer, denom)).expect("constant term is 1")
}

/// (1 − √(1 − 4x²)) / (2x²)
pub fn doublets_genus0(order: usize) -> NumericSeries {
    let root = pow(&poly(&[(0, 1), (2, -4)], order + 2), 1, 2);
    (&poly(&[(0, 1)], order + 2) - &root)
        .shift_down(2)
        .expect("divisible by x^2")
        .scale(&Rational::from_ratio(1, 2))
}

/// x⁴ / (1 − 4x²)^{5/2}
pub fn doublets_genus1(order: usize) -> NumericSeries {
    pow(&poly(&[(0, 1), (2, -4)], order), -5, 2).shift_up(4)
}

/// 21 x⁸ (1 + x²) / (1 − 4x²)^{11/2}
pub fn doublets_genus2(order: usize) -> NumericSeries {
    &poly(&[(8, 21), (10, 21)], order) * &pow(&poly(&[(0, 1), (2, -4)], order), -11, 2)
}

/// 11 x¹² (135 + 558 x² + 158 x⁴) / (1 − 4x²)^{17/2}
pub fn genus3_doublet_series(order: usize) -> NumericSeries {
    &poly(&[(12, 11 * 135), (14, 11 * 558), (16, 11 * 158)], order) * &pow(&poly(&[(0, 1), (2, -4)], order), -17, 2)
}

/// (1 − √(1 − 4x)) / (2x), the Catalan numbers.
pub fn ones_genus0(order: usize) -> NumericSeries {
    let root = pow(&poly(&[(0, 1), (1, -4)], order + 1), 1, 2);
    (&poly(&[(0, 1)], order + 1) - &root)
        .shift_down(1)
        .expect("divisible by x")
        .scale(&Rational::from_ratio(1, 2))
}

/// x⁴ / (1 − 4x)^{5/2}
pub fn ones_genus1(order: usize) -> NumericSeries {
    pow(&poly(&[(0, 1), (1, -4)], order), -5, 2).shift_up(4)
}

/// x⁶ (1 + 6x − 19x² + 21x³) / (1 − 4x)^{11/2}
pub fn ones_genus2(order: usize) -> NumericSeries {
    &poly(&[(6, 1), (7, 6), (8, -19), (9, 21)], order) * &pow(&poly(&[(0, 1), (1, -4)], order), -11, 2)
}

/// (1 + x − √(1 − 2x − 3x²)) / (2x(1 + x))
pub fn sf_ones_genus0(order: usize) -> NumericSeries {
    let m = order + 1;
    let root = pow(&poly(&[(0, 1), (1, -2), (2, -3)], m), 1, 2);
    let numerator = (&poly(&[(0, 1), (1, 1)], m) - &root).shift_down(1).expect("divisible by x");
    let inv = poly(&[(0, 1), (1, 1)], order).reciprocal().expect("unit");
    (&numerator * &inv).scale(&Rational::from_ratio(1, 2))
}

/// x⁴ / (1 − 2x − 3x²)^{5/2}
pub fn sf_ones_genus1(order: usize) -> NumericSeries {
    pow(&poly(&[(0, 1), (1, -2), (2, -3)], order), -5, 2).shift_up(4)
}

/// x⁶ (1 + 10x + 5x² + 5x³ + 9x⁴) / (1 − 2x − 3x²)^{11/2}
pub fn sf_ones_genus2(order: usize) -> NumericSeries {
    &poly(&[(6, 1), (7, 10), (8, 5), (9, 5), (10, 9)], order) * &pow(&poly(&[(0, 1), (1, -2), (2, -3)], order), -11, 2)
}

/// (1 + x − xy)² − 4x
fn parts_discriminant(order: usize) -> SymbolicSeries {
    poly_xy(&[(0, 0, 1), (1, 0, -2), (1, 1, -2), (2, 0, 1), (2, 1, -2), (2, 2, 1)], order)
}

/// (1 − x)² − 4x²y
fn sf_parts_discriminant(order: usize) -> SymbolicSeries {
    poly_xy(&[(0, 0, 1), (1, 0, -2), (2, 0, 1), (2, 1, -4)], order)
}

/// (1 + x − xy − √((1 + x − xy)² − 4x)) / (2x), the Narayana numbers.
pub fn parts_genus0(order: usize) -> SymbolicSeries {
    let m = order + 1;
    let root = pow_xy(&parts_discriminant(m), 1, 2);
    (&poly_xy(&[(0, 0, 1), (1, 0, 1), (1, 1, -1)], m) - &root)
        .shift_down(1)
        .expect("divisible by x")
        .scale(&Rational::from_ratio(1, 2))
}

/// x⁴y² / ((1 + x − xy)² − 4x)^{5/2}
pub fn parts_genus1(order: usize) -> SymbolicSeries {
    &poly_xy(&[(4, 2, 1)], order) * &pow_xy(&parts_discriminant(order), -5, 2)
}

/// x⁶y² p(x, y) / ((1 + x − xy)² − 4x)^{11/2}
pub fn parts_genus2(order: usize) -> SymbolicSeries {
    #[rustfmt::skip]
    let p = poly_xy(&[
        (0, 0, 1),
        (1, 0, -4), (1, 1, 10),
        (2, 0, 6), (2, 1, -10), (2, 2, -15),
        (3, 0, -4), (3, 1, -10), (3, 2, 39), (3, 3, -4),
        (4, 0, 1), (4, 1, 10), (4, 2, -15), (4, 3, -4), (4, 4, 8),
    ], order);
    &(&poly_xy(&[(6, 2, 1)], order) * &p) * &pow_xy(&parts_discriminant(order), -11, 2)
}

/// (1 + x − √((1 − x)² − 4x²y)) / (2x(1 + xy))
pub fn sf_parts_genus0(order: usize) -> SymbolicSeries {
    let m = order + 1;
    let root = pow_xy(&sf_parts_discriminant(m), 1, 2);
    let numerator = (&poly_xy(&[(0, 0, 1), (1, 0, 1)], m) - &root).shift_down(1).expect("divisible by x");
    let inv = poly_xy(&[(0, 0, 1), (1, 1, 1)], order).reciprocal().expect("unit");
    (&numerator * &inv).scale(&Rational::from_ratio(1, 2))
}

/// x⁴y² / ((1 − x)² − 4x²y)^{5/2}
pub fn sf_parts_genus1(order: usize) -> SymbolicSeries {
    &poly_xy(&[(4, 2, 1)], order) * &pow_xy(&sf_parts_discriminant(order), -5, 2)
}

/// Coefficient of y^r, as a series in x.
pub fn y_slice(s: &SymbolicSeries, r: u32) -> NumericSeries {
    NumericSeries::from_fn(s.order(), |k| {
        s.coeff(k)
            .coefficient_of_power(Symbol::Y, r)
            .as_scalar()
            .unwrap_or_else(Rational::zero)
    })
}

/// Genus 2 partitions counted by size and number of parts, from the genus 2
/// formula with κ_ℓ = y. Checked on the way out against the two-part count
/// C(n, 6), and the singleton-free three-part count 14·C(n, 7)(3n − 13)/8.
/// Three-part partitions with a singleton are not covered by the latter
/// (there are 21 at n = 7, not 14).
pub fn genus2_parts_gf(order: usize) -> Result<SymbolicSeries> {
    let z = genus_series(&build_w(&CumulantSpec::AllY, order), 2)?;
    let free = genus_series(&build_w(&CumulantSpec::SingletonFreeY, order), 2)?;
    let two = y_slice(&z, 2);
    let three = y_slice(&free, 3);
    for n in 0..=order {
        let c = |k| Rational::from_integer(crate::enumerate::binomial(n as u64, k).into());
        let want2 = if n >= 6 { c(6) } else { Rational::zero() };
        let want3 = if n >= 7 { c(7) * q(14) * q(3 * n as i64 - 13) / q(8) } else { Rational::zero() };
        if two.coeff(n) != &want2 || three.coeff(n) != &want3 {
            return Err(Error::Mismatch(format!("genus 2 parts series at x^{n}")));
        }
    }
    Ok(z)
}

/// A published list of series coefficients.
#[derive(Debug, Clone, Deserialize)]
pub struct PublishedSeries {
    pub name: String,
    pub kappa: String,
    pub genus: u32,
    /// `(power, coefficient)`; powers not listed and below the last one are
    /// zero.
    pub coefficients: Vec<(usize, u64)>,
}

impl PublishedSeries {
    pub fn spec(&self) -> CumulantSpec {
        self.kappa.parse().expect("fixture names a valid specification")
    }

    pub fn max_power(&self) -> usize {
        self.coefficients.iter().map(|(k, _)| *k).max().unwrap_or(0)
    }

    pub fn as_series(&self) -> NumericSeries {
        let mut s = NumericSeries::zero(self.max_power());
        for &(k, c) in &self.coefficients {
            s = &s + &NumericSeries::monomial(Rational::from_integer(c.into()), k, s.order());
        }
        s
    }
}

/// Published expansions shipped with the crate.
pub fn published_series() -> Vec<PublishedSeries> {
    serde_json::from_str(include_str!("../../fixtures/published_series.json")).expect("fixture file is valid")
}

/// A closed form to compare with the generating function of a given genus.
pub struct ClosedForm {
    pub name: &'static str,
    pub kappa: CumulantSpec,
    pub genus: u32,
    pub expand: fn(usize) -> SymbolicSeries,
}

fn lift(s: NumericSeries) -> SymbolicSeries {
    super::to_symbolic(&s)
}

/// Every closed form this crate knows, with the specification it belongs to.
pub fn closed_forms() -> Vec<ClosedForm> {
    use CumulantSpec::*;
    vec![
        ClosedForm { name: "doublets genus 0", kappa: Doublets, genus: 0, expand: |n| lift(doublets_genus0(n)) },
        ClosedForm { name: "doublets genus 1", kappa: Doublets, genus: 1, expand: |n| lift(doublets_genus1(n)) },
        ClosedForm { name: "doublets genus 2", kappa: Doublets, genus: 2, expand: |n| lift(doublets_genus2(n)) },
        ClosedForm { name: "all ones genus 0", kappa: AllOnes, genus: 0, expand: |n| lift(ones_genus0(n)) },
        ClosedForm { name: "all ones genus 1", kappa: AllOnes, genus: 1, expand: |n| lift(ones_genus1(n)) },
        ClosedForm { name: "all ones genus 2", kappa: AllOnes, genus: 2, expand: |n| lift(ones_genus2(n)) },
        ClosedForm { name: "singleton-free ones genus 0", kappa: SingletonFreeOnes, genus: 0, expand: |n| lift(sf_ones_genus0(n)) },
        ClosedForm { name: "singleton-free ones genus 1", kappa: SingletonFreeOnes, genus: 1, expand: |n| lift(sf_ones_genus1(n)) },
        ClosedForm { name: "singleton-free ones genus 2", kappa: SingletonFreeOnes, genus: 2, expand: |n| lift(sf_ones_genus2(n)) },
        ClosedForm { name: "parts genus 0", kappa: AllY, genus: 0, expand: parts_genus0 },
        ClosedForm { name: "parts genus 1", kappa: AllY, genus: 1, expand: parts_genus1 },
        ClosedForm { name: "parts genus 2", kappa: AllY, genus: 2, expand: parts_genus2 },
        ClosedForm { name: "singleton-free parts genus 0", kappa: SingletonFreeY, genus: 0, expand: sf_parts_genus0 },
        ClosedForm { name: "singleton-free parts genus 1", kappa: SingletonFreeY, genus: 1, expand: sf_parts_genus1 },
    ]
}
