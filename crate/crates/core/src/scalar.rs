//! Exact scalar and coefficient-ring abstractions.
//!
//! Everything in this crate is exact. [`Scalar`] is satisfied by
//! `Ratio<BigInt>` and by fixed-width rationals such as `Ratio<i64>`; the
//! `Eq + Ord + Hash` bounds keep floating point types out.
//!
//! [`Coeff`] is the coefficient ring of a truncated power series. It is
//! implemented for every [`Scalar`] (numeric mode) and for
//! [`KappaPolynomial`](crate::poly::KappaPolynomial) (symbolic mode). Both are
//! algebras over their scalar, which is all the series engine needs for
//! fractional powers.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// An exact field element.
pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer).expect("integer embeds") / Self::from_i64(denom).expect("integer embeds")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Num
        + Signed
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Coefficient ring of a [`TruncatedSeries`](crate::series::TruncatedSeries).
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    type Scalar: Scalar;

    fn from_scalar(s: Self::Scalar) -> Self;

    fn add_ref(&mut self, rhs: &Self);

    fn sub_ref(&mut self, rhs: &Self);

    fn mul_ref(&self, rhs: &Self) -> Self;

    fn scale(&self, s: &Self::Scalar) -> Self;

    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn inverse(&self) -> Option<Self>;

    /// The value when `self` is a constant of the ring.
    fn as_scalar(&self) -> Option<Self::Scalar>;
}

macro_rules! impl_coeff_for_ratio {
    ($($t:ty),*) => {$(
        impl Coeff for Ratio<$t> {
            type Scalar = Self;

            fn from_scalar(s: Self) -> Self {
                s
            }

            fn add_ref(&mut self, rhs: &Self) {
                *self += rhs;
            }

            fn sub_ref(&mut self, rhs: &Self) {
                *self -= rhs;
            }

            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }

            fn scale(&self, s: &Self) -> Self {
                self * s
            }

            fn inverse(&self) -> Option<Self> {
                if self.is_zero() {
                    None
                } else {
                    Some(self.recip())
                }
            }

            fn as_scalar(&self) -> Option<Self> {
                Some(self.clone())
            }
        }
    )*};
}

impl_coeff_for_ratio!(BigInt, i64, i128);
