use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::scalar::Coeff;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SingletonDirection {
    /// Ẑ ↦ Z, Z(x) = Ẑ(x / (1 − κ₁x)) / (1 − κ₁x).
    Insert,
    /// Z ↦ Ẑ, Ẑ(u) = Z(u / (1 + κ₁u)) / (1 + κ₁u).
    Remove,
}

/// Puts singletons of weight κ₁ into, or takes them out of, a generating
/// function.
pub fn singleton_transform<C: Coeff>(z: &TruncatedSeries<C>, kappa1: &C, direction: SingletonDirection) -> Result<TruncatedSeries<C>> {
    let n = z.order();
    let k = match direction {
        SingletonDirection::Insert => -kappa1.clone(),
        SingletonDirection::Remove => kappa1.clone(),
    };
    // 1 / (1 + k x)
    let factor = (&TruncatedSeries::one(n) + &TruncatedSeries::monomial(k, 1, n)).reciprocal()?;
    let inner = factor.shift_up(1);
    Ok(&z.compose(&inner)? * &factor)
}
