//! Rotations of the circle acting on partitions.

use serde::{Deserialize, Serialize};

use super::Partition;

impl Partition {
    /// Relabels every element `i` as `((i − 1 + k) mod n) + 1`.
    pub fn rotate(&self, k: i64) -> Partition {
        if self.n == 0 {
            return self.clone();
        }
        let n = self.n as i64;
        let shift = k.rem_euclid(n) as u32;
        if shift == 0 {
            return self.clone();
        }
        let n = self.n as u32;
        let parts = self
            .parts
            .iter()
            .map(|part| part.iter().map(|&i| (i - 1 + shift) % n + 1).collect())
            .collect();
        Partition::normalized(self.n, parts)
    }

    /// The smallest rotation of `self`, comparing the normalized part lists
    /// lexicographically.
    pub fn canonical_form(&self) -> Partition {
        (1..self.n as i64)
            .map(|k| self.rotate(k))
            .fold(self.clone(), |best, q| if q < best { q } else { best })
    }

    /// Smallest `k > 0` with `rotate(k) == self`; this is also the orbit length.
    pub fn rotation_period(&self) -> usize {
        if self.n == 0 {
            return 1;
        }
        (1..=self.n)
            .filter(|d| self.n.is_multiple_of(*d))
            .find(|&d| self.rotate(d as i64) == *self)
            .expect("a full turn is the identity")
    }

    /// 𝔰, the order of the stabilizer of `self` in the rotation group ℤ/n.
    pub fn stabilizer_order(&self) -> usize {
        self.n.max(1) / self.rotation_period()
    }

    /// n/𝔰, the number of distinct rotations of `self`.
    pub fn orbit_length(&self) -> usize {
        self.rotation_period()
    }
}

/// One rotation orbit: its canonical representative, 𝔰 and n/𝔰.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub representative: Partition,
    pub stabilizer_order: usize,
    pub orbit_length: usize,
}

impl OrbitRecord {
    pub fn of(p: &Partition) -> Self {
        let representative = p.canonical_form();
        let orbit_length = representative.orbit_length();
        OrbitRecord {
            stabilizer_order: representative.n().max(1) / orbit_length,
            orbit_length,
            representative,
        }
    }
}
