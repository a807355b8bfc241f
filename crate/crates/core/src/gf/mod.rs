//! Generating functions of partitions by genus.
//!
//! With `W(x) = Σ κ_ℓ x^ℓ`, the genus 0 series solves `Z⁰ = 1 + W(x Z⁰)`.
//! Genus 1 and 2 follow by dressing the primitive and semi-primitive diagrams
//! of that genus: every 2-line becomes a ladder of parallel lines, every
//! point of the circle a planar insertion, and so on, which is encoded by the
//! series X_ℓ, Y_ℓ, V and their tilde versions below.

mod closed_forms;
mod singleton;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{FromPrimitive, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Symbol;
use crate::scalar::Coeff;
use crate::series::{solve_fixed_point, Composer, SeriesTermJson, TruncatedSeries};
use crate::{NumericSeries, Poly, Rational, SymbolicSeries};

pub use closed_forms::*;
pub use singleton::{singleton_transform, SingletonDirection};

pub const DEFAULT_NUMERIC_ORDER: usize = 20;
pub const DEFAULT_SYMBOLIC_ORDER: usize = 12;

/// Values given to the cumulants κ_ℓ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CumulantSpec {
    /// Every κ_ℓ stays a symbol.
    Symbolic,
    /// Only the listed κ_ℓ stay symbols; the others vanish.
    SymbolicSubset(BTreeSet<u16>),
    /// κ_ℓ = 1 for all ℓ.
    AllOnes,
    /// κ_ℓ = y for all ℓ, so that y counts parts.
    AllY,
    /// κ₂ = 1, all others 0.
    Doublets,
    /// κ₃ = 1, all others 0.
    Triplets,
    /// κ₁ = 0 and κ_ℓ = 1 for ℓ ≥ 2.
    SingletonFreeOnes,
    /// κ₁ = 0 and κ_ℓ = y for ℓ ≥ 2.
    SingletonFreeY,
    /// κ₁, κ₂, … as listed; the rest vanish.
    Custom(Vec<Rational>),
}

impl CumulantSpec {
    /// κ_k under this specification.
    pub fn kappa(&self, k: usize) -> Poly {
        let one = || Poly::one();
        let y = || Poly::var(Symbol::Y);
        match self {
            CumulantSpec::Symbolic => Poly::kappa(k as u16),
            CumulantSpec::SymbolicSubset(set) if set.contains(&(k as u16)) => Poly::kappa(k as u16),
            CumulantSpec::SymbolicSubset(_) => Poly::zero(),
            CumulantSpec::AllOnes => one(),
            CumulantSpec::AllY => y(),
            CumulantSpec::Doublets if k == 2 => one(),
            CumulantSpec::Triplets if k == 3 => one(),
            CumulantSpec::Doublets | CumulantSpec::Triplets => Poly::zero(),
            CumulantSpec::SingletonFreeOnes if k >= 2 => one(),
            CumulantSpec::SingletonFreeY if k >= 2 => y(),
            CumulantSpec::SingletonFreeOnes | CumulantSpec::SingletonFreeY => Poly::zero(),
            CumulantSpec::Custom(values) => values.get(k - 1).cloned().map(Poly::constant).unwrap_or_else(Poly::zero),
        }
    }

    /// Whether every κ_ℓ is a plain number.
    pub fn is_numeric(&self) -> bool {
        !matches!(
            self,
            CumulantSpec::Symbolic | CumulantSpec::SymbolicSubset(_) | CumulantSpec::AllY | CumulantSpec::SingletonFreeY
        )
    }

    pub fn default_order(&self) -> usize {
        if self.is_numeric() {
            DEFAULT_NUMERIC_ORDER
        } else {
            DEFAULT_SYMBOLIC_ORDER
        }
    }
}

impl fmt::Display for CumulantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, items: Vec<String>| f.write_str(&items.join(","));
        match self {
            CumulantSpec::Symbolic => f.write_str("symbolic"),
            CumulantSpec::SymbolicSubset(set) => {
                f.write_str("symbolic=")?;
                list(f, set.iter().map(|k| k.to_string()).collect())
            }
            CumulantSpec::AllOnes => f.write_str("ones"),
            CumulantSpec::AllY => f.write_str("y"),
            CumulantSpec::Doublets => f.write_str("doublets"),
            CumulantSpec::Triplets => f.write_str("triplets"),
            CumulantSpec::SingletonFreeOnes => f.write_str("sf-ones"),
            CumulantSpec::SingletonFreeY => f.write_str("sf-y"),
            CumulantSpec::Custom(values) => {
                f.write_str("custom=")?;
                list(f, values.iter().map(|v| v.to_string()).collect())
            }
        }
    }
}

/// `symbolic`, `symbolic=2,3`, `ones`, `y`, `doublets`, `triplets`, `sf-ones`,
/// `sf-y` or `custom=1,0,1/2` (κ₁, κ₂, … in order).
impl FromStr for CumulantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |position: usize, message: String| Error::Parse { position, message };
        let (name, args) = match s.split_once('=') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        fn values(args: &str, at: usize) -> Result<Vec<&str>> {
            let items: Vec<&str> = args.split(',').map(str::trim).collect();
            if items.iter().any(|i| i.is_empty()) {
                return Err(Error::Parse {
                    position: at,
                    message: "empty list entry".into(),
                });
            }
            Ok(items)
        }
        match (name.trim(), args) {
            ("symbolic", None) => Ok(CumulantSpec::Symbolic),
            ("symbolic", Some(a)) => values(a, name.len() + 1)?
                .into_iter()
                .map(|v| {
                    v.parse::<u16>()
                        .ok()
                        .filter(|&k| k > 0)
                        .ok_or_else(|| err(name.len() + 1, format!("`{v}` is not a cumulant index")))
                })
                .collect::<Result<BTreeSet<u16>>>()
                .map(CumulantSpec::SymbolicSubset),
            ("ones", None) => Ok(CumulantSpec::AllOnes),
            ("y", None) => Ok(CumulantSpec::AllY),
            ("doublets", None) => Ok(CumulantSpec::Doublets),
            ("triplets", None) => Ok(CumulantSpec::Triplets),
            ("sf-ones", None) => Ok(CumulantSpec::SingletonFreeOnes),
            ("sf-y", None) => Ok(CumulantSpec::SingletonFreeY),
            ("custom", Some(a)) => values(a, name.len() + 1)?
                .into_iter()
                .map(|v| {
                    v.parse::<Rational>()
                        .map_err(|_| err(name.len() + 1, format!("`{v}` is not a rational number")))
                })
                .collect::<Result<Vec<Rational>>>()
                .map(CumulantSpec::Custom),
            _ => Err(err(0, format!("unknown cumulant specification `{s}`"))),
        }
    }
}

/// W(x) = Σ_{ℓ=1}^{N} κ_ℓ x^ℓ.
pub fn build_w(spec: &CumulantSpec, order: usize) -> SymbolicSeries {
    SymbolicSeries::from_fn(order, |k| if k == 0 { Poly::zero() } else { spec.kappa(k) })
}

/// W(x) with rational coefficients; fails for specifications with symbols.
pub fn build_w_numeric(spec: &CumulantSpec, order: usize) -> Result<NumericSeries> {
    if !spec.is_numeric() {
        return Err(Error::NotNumeric(spec.to_string()));
    }
    Ok(to_numeric(&build_w(spec, order)).expect("numeric specification"))
}

/// The same series with rational coefficients, if every coefficient is a
/// constant.
pub fn to_numeric(s: &SymbolicSeries) -> Option<NumericSeries> {
    let coeffs = s.coeffs().iter().map(|c| c.as_scalar()).collect::<Option<Vec<Rational>>>()?;
    Some(NumericSeries::from_coeffs(coeffs, s.order()))
}

pub fn to_symbolic(s: &NumericSeries) -> SymbolicSeries {
    s.map(|c| Poly::constant(c.clone()))
}

/// Z⁰(x), the solution of `Z = 1 + W(x Z)`.
pub fn z0<C: Coeff>(w: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    solve_fixed_point(w)
}

/// The dressing series of a given W.
#[derive(Debug, Clone)]
pub struct DressingFunctions<C> {
    pub z0: TruncatedSeries<C>,
    /// x̃ = x Z⁰(x)
    pub x_tilde: TruncatedSeries<C>,
    /// X₂ = x W′ − W
    pub x2: TruncatedSeries<C>,
    /// Y₂ = ½ x² W″
    pub y2: TruncatedSeries<C>,
    pub x3: TruncatedSeries<C>,
    pub y3: TruncatedSeries<C>,
    pub x4: TruncatedSeries<C>,
    pub y4: TruncatedSeries<C>,
    /// V = x W′(x̃)
    pub v: TruncatedSeries<C>,
    /// X₂(x̃)
    pub x2_at: TruncatedSeries<C>,
    /// Y₂(x̃)
    pub y2_at: TruncatedSeries<C>,
    /// X̃₂ = X₂(x̃) / (1 − X₂(x̃))
    pub x2_tilde: TruncatedSeries<C>,
    /// Ỹ₂ = Y₂(x̃) / (1 − X₂(x̃))²
    pub y2_tilde: TruncatedSeries<C>,
    /// X̃₃ = X₃(x̃) / (1 − X₂(x̃))³
    pub x3_tilde: TruncatedSeries<C>,
    pub y3_tilde: TruncatedSeries<C>,
    /// X̃₄ = X₄(x̃) / (1 − X₂(x̃))⁴
    pub x4_tilde: TruncatedSeries<C>,
    pub y4_tilde: TruncatedSeries<C>,
}

/// X_ℓ(x) = Σ_k C(k−1, ℓ−1) κ_k x^k.
pub fn x_ell<C: Coeff>(w: &TruncatedSeries<C>, l: u64) -> TruncatedSeries<C> {
    TruncatedSeries::from_fn(w.order(), |k| {
        if k == 0 {
            C::zero()
        } else {
            w.coeff(k).scale(&scalar(binomial(k as u64 - 1, l - 1)))
        }
    })
}

/// Y_ℓ(x) = Σ_k C(k, ℓ) κ_k x^k.
pub fn y_ell<C: Coeff>(w: &TruncatedSeries<C>, l: u64) -> TruncatedSeries<C> {
    TruncatedSeries::from_fn(w.order(), |k| w.coeff(k).scale(&scalar(binomial(k as u64, l))))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        crate::enumerate::binomial(n, k)
    }
}

fn scalar<S: crate::scalar::Scalar>(n: u64) -> S {
    S::from_u64(n).expect("integer embeds")
}

pub fn dressing<C: Coeff>(w: &TruncatedSeries<C>) -> Result<DressingFunctions<C>> {
    let n = w.order();
    let z0 = z0(w)?;
    let x_tilde = z0.shift_up(1);
    let at = Composer::new(&x_tilde)?;
    let x2 = x_ell(w, 2);
    let y2 = y_ell(w, 2);
    let (x3, y3, x4, y4) = (x_ell(w, 3), y_ell(w, 3), x_ell(w, 4), y_ell(w, 4));

    // W′ is only known to order N − 1, which is all x W′(x̃) needs.
    let w_prime = TruncatedSeries::from_coeffs(w.derivative().into_coeffs(), n);
    let v = at.apply(&w_prime).shift_up(1);

    let x2_at = at.apply(&x2);
    let y2_at = at.apply(&y2);
    let inv = (&TruncatedSeries::one(n) - &x2_at).reciprocal()?;
    let inv2 = &inv * &inv;
    let inv3 = &inv2 * &inv;
    let inv4 = &inv2 * &inv2;
    Ok(DressingFunctions {
        x2_tilde: &x2_at * &inv,
        y2_tilde: &y2_at * &inv2,
        x3_tilde: &at.apply(&x3) * &inv3,
        y3_tilde: &at.apply(&y3) * &inv3,
        x4_tilde: &at.apply(&x4) * &inv4,
        y4_tilde: &at.apply(&y4) * &inv4,
        z0,
        x_tilde,
        x2,
        y2,
        x3,
        y3,
        x4,
        y4,
        v,
        x2_at,
        y2_at,
    })
}

impl<C: Coeff> DressingFunctions<C> {
    pub fn order(&self) -> usize {
        self.z0.order()
    }

    fn one_minus(&self, s: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        &TruncatedSeries::one(self.order()) - s
    }

    /// 1 / (1 − V)
    fn inv_one_minus_v(&self) -> Result<TruncatedSeries<C>> {
        self.one_minus(&self.v).reciprocal()
    }

    /// Z¹ = X₂(x̃) Y₂(x̃) / ((1 − X₂(x̃))⁴ (1 − V)).
    pub fn z1_product_form(&self) -> Result<TruncatedSeries<C>> {
        let d = self.one_minus(&self.x2_at);
        let d2 = &d * &d;
        let denominator = &(&d2 * &d2) * &self.one_minus(&self.v);
        Ok(&(&self.x2_at * &self.y2_at) * &denominator.reciprocal()?)
    }

    /// Z¹ = Ỹ₂ X̃₂ (1 + X̃₂) / (1 − V).
    pub fn z1_tilde_form(&self) -> Result<TruncatedSeries<C>> {
        let t = &self.x2_tilde;
        let one_plus = &TruncatedSeries::one(self.order()) + t;
        Ok(&(&(&self.y2_tilde * t) * &one_plus) * &self.inv_one_minus_v()?)
    }

    /// The five dressed contributions whose sum is Z² (1 − V).
    pub fn genus2_terms(&self) -> Result<Genus2Terms<C>> {
        let t = &self.x2_tilde;
        let p = |cs: &[i64]| poly_in(t, cs);
        let d = self.one_minus(&self.x2_at);
        // 2 Y₂(x̃) / (1 − X₂(x̃))
        let two_y2_over_d = (&self.y2_at * &d.reciprocal()?).scale(&scalar(2));
        let b3 = &self.y3_tilde + &(&self.x3_tilde * &two_y2_over_d);
        let b4 = &self.y4_tilde + &(&self.x4_tilde * &two_y2_over_d);
        let x3y2 = &self.x3_tilde * &self.y2_tilde;
        let x3sq = &self.x3_tilde * &self.x3_tilde;

        let z2 = &self.y2_tilde * &p(&[0, 0, 0, 21, 168, 483, 651, 420, 105]);
        let z3 = &(&x3y2 * &p(&[0, 8, 94, 296, 350, 140])) + &(&p(&[0, 0, 6, 47, 111, 105, 35]) * &b3);
        let z33 = &(&(&x3sq * &self.y2_tilde) * &p(&[5, 26, 26])) + &(&(&self.x3_tilde * &p(&[1, 15, 39, 26])) * &b3);
        let z33s = &(&(&(&(&self.y2_tilde * &x3sq) * &p(&[0, 6, 18, 12])) * &d)
            + &(&(&(&self.y3_tilde * &self.x3_tilde) * &p(&[0, 0, 9, 18, 9])) * &d))
            + &(&(&x3sq * &p(&[0, 0, 15, 30, 15])) * &self.y2_at);
        let z4 = &(&(&self.y2_tilde * &self.x4_tilde) * &p(&[0, 3, 9, 6])) + &(&p(&[0, 0, 3, 6, 3]) * &b4);
        Ok(Genus2Terms { z2, z3, z33, z33s, z4 })
    }

    /// Z² = (z₂ + z₃ + z₃₃ + z₃₃ₛ + z₄) / (1 − V).
    pub fn z2(&self) -> Result<TruncatedSeries<C>> {
        Ok(&self.genus2_terms()?.sum() * &self.inv_one_minus_v()?)
    }
}

/// Σ c_i t^i by Horner's rule.
fn poly_in<C: Coeff>(t: &TruncatedSeries<C>, cs: &[i64]) -> TruncatedSeries<C> {
    let n = t.order();
    let constant = |c: i64| TruncatedSeries::constant(C::from_scalar(C::Scalar::from_i64(c).expect("integer embeds")), n);
    let mut acc = constant(0);
    for &c in cs.iter().rev() {
        acc = &(&acc * t) + &constant(c);
    }
    acc
}

#[derive(Debug, Clone)]
pub struct Genus2Terms<C> {
    pub z2: TruncatedSeries<C>,
    pub z3: TruncatedSeries<C>,
    pub z33: TruncatedSeries<C>,
    pub z33s: TruncatedSeries<C>,
    pub z4: TruncatedSeries<C>,
}

impl<C: Coeff> Genus2Terms<C> {
    pub fn sum(&self) -> TruncatedSeries<C> {
        &(&(&(&self.z2 + &self.z3) + &self.z33) + &self.z33s) + &self.z4
    }
}

/// Z¹ by both printed forms, which must agree.
pub fn z1<C: Coeff>(w: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    let d = dressing(w)?;
    z1_checked(&d)
}

pub(crate) fn z1_checked<C: Coeff>(d: &DressingFunctions<C>) -> Result<TruncatedSeries<C>> {
    let a = d.z1_product_form()?;
    let b = d.z1_tilde_form()?;
    if a != b {
        let k = (0..=a.order()).find(|&k| a.coeff(k) != b.coeff(k)).unwrap_or(0);
        return Err(Error::Mismatch(format!("the two genus 1 forms differ at x^{k}")));
    }
    Ok(a)
}

pub fn z2<C: Coeff>(w: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    dressing(w)?.z2()
}

/// Z^{(g)} for g = 0, 1, 2.
pub fn genus_series<C: Coeff>(w: &TruncatedSeries<C>, genus: u32) -> Result<TruncatedSeries<C>> {
    match genus {
        0 => z0(w),
        1 => z1(w),
        2 => z2(w),
        g => Err(Error::UnsupportedGenus(g)),
    }
}

/// A generating function in whichever coefficient ring its cumulants need.
#[derive(Debug, Clone, PartialEq)]
pub enum GfSeries {
    Numeric(NumericSeries),
    Symbolic(SymbolicSeries),
}

impl GfSeries {
    /// Z^{(genus)} for `spec` through `x^order`.
    pub fn compute(spec: &CumulantSpec, genus: u32, order: usize) -> Result<GfSeries> {
        if order == 0 {
            return Err(Error::Parse {
                position: 0,
                message: "order must be positive".into(),
            });
        }
        if spec.is_numeric() {
            Ok(GfSeries::Numeric(genus_series(&build_w_numeric(spec, order)?, genus)?))
        } else {
            Ok(GfSeries::Symbolic(genus_series(&build_w(spec, order), genus)?))
        }
    }

    pub fn order(&self) -> usize {
        match self {
            GfSeries::Numeric(s) => s.order(),
            GfSeries::Symbolic(s) => s.order(),
        }
    }

    pub fn to_symbolic(&self) -> SymbolicSeries {
        match self {
            GfSeries::Numeric(s) => to_symbolic(s),
            GfSeries::Symbolic(s) => s.clone(),
        }
    }

    pub fn to_json(&self) -> Vec<SeriesTermJson> {
        match self {
            GfSeries::Numeric(s) => s.to_json(),
            GfSeries::Symbolic(s) => s.to_json(),
        }
    }
}

impl fmt::Display for GfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfSeries::Numeric(s) => s.fmt(f),
            GfSeries::Symbolic(s) => s.fmt(f),
        }
    }
}

impl Serialize for GfSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests;
