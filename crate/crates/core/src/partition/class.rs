//! The type `[1^{α₁} 2^{α₂} …]` of a partition: the multiset of its part sizes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartitionType {
    /// part size ℓ → multiplicity α_ℓ ≥ 1
    multiplicities: BTreeMap<u32, u32>,
}

impl PartitionType {
    pub fn from_sizes(sizes: impl IntoIterator<Item = u32>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for s in sizes {
            assert!(s > 0, "part sizes are positive");
            *multiplicities.entry(s).or_insert(0) += 1;
        }
        PartitionType { multiplicities }
    }

    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (l, a) in pairs {
            assert!(l > 0, "part sizes are positive");
            if a > 0 {
                *multiplicities.entry(l).or_insert(0) += a;
            }
        }
        PartitionType { multiplicities }
    }

    /// `[ℓ^k]`
    pub fn uniform(l: u32, k: u32) -> Self {
        Self::from_multiplicities([(l, k)])
    }

    /// Σ ℓ·α_ℓ
    pub fn n(&self) -> usize {
        self.multiplicities.iter().map(|(l, a)| (l * a) as usize).sum()
    }

    /// Σ α_ℓ
    pub fn num_parts(&self) -> usize {
        self.multiplicities.values().map(|&a| a as usize).sum()
    }

    pub fn multiplicity(&self, l: u32) -> u32 {
        self.multiplicities.get(&l).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.multiplicities.iter().map(|(&l, &a)| (l, a))
    }

    /// Part sizes, largest first.
    pub fn sizes_desc(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.num_parts());
        for (&l, &a) in self.multiplicities.iter().rev() {
            v.extend(std::iter::repeat_n(l, a as usize));
        }
        v
    }

    pub fn is_singleton_free(&self) -> bool {
        self.multiplicity(1) == 0
    }

    /// The type with all singletons dropped, and how many there were.
    pub fn split_singletons(&self) -> (PartitionType, u32) {
        let mut m = self.multiplicities.clone();
        let r = m.remove(&1).unwrap_or(0);
        (PartitionType { multiplicities: m }, r)
    }

    pub fn with_singletons(&self, r: u32) -> PartitionType {
        let mut t = self.clone();
        if r > 0 {
            *t.multiplicities.entry(1).or_insert(0) += r;
        }
        t
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        if self.n() == n && n > 0 {
            Ok(())
        } else {
            Err(Error::TypeMismatch {
                n,
                ty: self.to_string(),
            })
        }
    }

    /// ⌊(n − Σα)/2⌋
    pub fn genus_max(&self) -> u32 {
        ((self.n() - self.num_parts()) / 2) as u32
    }

    /// κ_{[α]}
    pub fn kappa_monomial(&self) -> Monomial {
        Monomial::kappa_type(self.multiplicities())
    }

    pub fn from_kappa_monomial(m: &Monomial) -> Self {
        Self::from_sizes(m.kappa_parts())
    }

    /// Number of set partitions of this type, `n! / ∏ α_ℓ! (ℓ!)^{α_ℓ}`.
    pub fn set_partition_count(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (l, a) in self.multiplicities() {
            denom *= factorial(a as usize) * factorial(l as usize).pow(a);
        }
        factorial(self.n()) / denom
    }

    /// Number of non-crossing partitions of this type,
    /// `n! / ((n + 1 − Σα)! ∏ α_ℓ!)`.
    pub fn kreweras_count(&self) -> BigUint {
        let n = self.n();
        let mut denom = factorial(n + 1 - self.num_parts());
        for (_, a) in self.multiplicities() {
            denom *= factorial(a as usize);
        }
        factorial(n) / denom
    }

    /// All types of `n` (integer partitions), in decreasing lexicographic
    /// order of their parts: `[n]`, `[n−1, 1]`, …, `[1^n]`.
    pub fn all_of(n: usize) -> Vec<PartitionType> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        integer_partitions(n as u32, n as u32, &mut current, &mut out);
        out
    }
}

fn integer_partitions(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<PartitionType>) {
    if rest == 0 {
        out.push(PartitionType::from_sizes(current.iter().copied()));
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        integer_partitions(rest - part, part, current, out);
        current.pop();
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub(crate) fn to_u128_saturating(x: &BigUint) -> u128 {
    x.to_u128().unwrap_or(u128::MAX)
}

/// `[1^2 3 5]`; the exponent `^1` is omitted.
impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (l, a)) in self.multiplicities().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if a == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{a}")?;
            }
        }
        f.write_str("]")
    }
}

/// Accepts `[1^2 3 5]`, `1^2 3 5`, `2^4` and `2^2,3`.
impl FromStr for PartitionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(trimmed);
        let offset = s.find(inner).unwrap_or(0);
        let mut pairs = Vec::new();
        let mut pos = 0;
        for token in inner.split(|c: char| c.is_whitespace() || c == ',' || c == '·' || c == '.') {
            let at = offset + pos;
            pos += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e),
                None => (token, "1"),
            };
            let parse = |x: &str| {
                x.parse::<u32>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::Parse {
                        position: at,
                        message: format!("expected a positive integer in `{token}`"),
                    })
            };
            pairs.push((parse(base)?, parse(exp)?));
        }
        if pairs.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty type".into(),
            });
        }
        Ok(Self::from_multiplicities(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: PartitionType = "1^2 3 5".parse().unwrap();
        assert_eq!(t.to_string(), "[1^2 3 5]");
        assert_eq!(t.n(), 10);
        assert_eq!(t.num_parts(), 4);
        assert_eq!("[2^4]".parse::<PartitionType>().unwrap(), PartitionType::uniform(2, 4));
        assert_eq!("2^2,3".parse::<PartitionType>().unwrap().to_string(), "[2^2 3]");
        assert!(matches!("2^0".parse::<PartitionType>(), Err(Error::Parse { .. })));
        assert!(matches!("".parse::<PartitionType>(), Err(Error::Parse { .. })));
        assert!(matches!("2 x".parse::<PartitionType>(), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn genus_bound() {
        let t: PartitionType = "1^2 3 5".parse().unwrap();
        assert_eq!(t.genus_max(), 3);
        assert_eq!(PartitionType::uniform(2, 2).genus_max(), 1);
        // Only an upper bound: a single part is planar.
        assert_eq!(PartitionType::uniform(7, 1).genus_max(), 3);
        assert!(t.check_n(9).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(PartitionType::uniform(2, 9).set_partition_count(), BigUint::from(34_459_425u32));
        assert_eq!(PartitionType::uniform(2, 2).kreweras_count(), BigUint::from(2u32));
        let t: PartitionType = "1 2^2".parse().unwrap();
        assert_eq!(t.kreweras_count(), BigUint::from(10u32));
        assert_eq!(PartitionType::uniform(5, 1).kreweras_count(), BigUint::from(1u32));
    }

    #[test]
    fn integer_partitions_of_small_n() {
        let all: Vec<String> = PartitionType::all_of(4).iter().map(|t| t.to_string()).collect();
        assert_eq!(all, ["[4]", "[1 3]", "[2^2]", "[1^2 2]", "[1^4]"]);
        assert_eq!(PartitionType::all_of(12).len(), 77);
        // Σ over types of c_{n,[α]} is the Bell number.
        let bell: BigUint = PartitionType::all_of(10).iter().map(|t| t.set_partition_count()).sum();
        assert_eq!(bell, BigUint::from(115_975u32));
    }
}
