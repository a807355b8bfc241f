//! Set partitions of `[n]` seen as a pair of permutations (σ, τ).

mod class;
mod orbit;
mod permutation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use class::PartitionType;
pub(crate) use class::to_u128_saturating;
pub use orbit::OrbitRecord;
pub use permutation::Permutation;

/// A set partition of `{1, …, n}`.
///
/// Parts are kept increasing and sorted by their smallest element, so two
/// partitions are equal exactly when they have the same blocks. The empty
/// partition (`n = 0`) only arises as the end point of a reduction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Partition {
    n: usize,
    parts: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    parts: Vec<Vec<u32>>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.n, raw.parts)
    }
}

impl Partition {
    /// Validates and normalizes `parts` as a partition of `1..=n`.
    pub fn new(n: usize, parts: Vec<Vec<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("n must be positive".into()));
        }
        let mut seen = vec![false; n];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            for &e in part {
                if e == 0 || e as usize > n {
                    return Err(Error::InvalidPartition(format!("element {e} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[e as usize - 1], true) {
                    return Err(Error::InvalidPartition(format!("duplicate element {e}")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("missing element {}", missing + 1)));
        }
        Ok(Self::normalized(n, parts))
    }

    pub(crate) fn normalized(n: usize, mut parts: Vec<Vec<u32>>) -> Self {
        for part in &mut parts {
            part.sort_unstable();
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Partition { n, parts }
    }

    /// Builds the partition whose part containing `i` is `blocks[i - 1]`.
    /// Block labels are arbitrary.
    pub fn from_block_labels(blocks: &[u32]) -> Self {
        let mut by_label: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for (i, &b) in blocks.iter().enumerate() {
            by_label.entry(b).or_default().push(i as u32 + 1);
        }
        Self::normalized(blocks.len(), by_label.into_values().collect())
    }

    pub fn empty() -> Self {
        Partition { n: 0, parts: Vec::new() }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            parts: (1..=n as u32).map(|i| vec![i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part_type(&self) -> PartitionType {
        PartitionType::from_sizes(self.parts.iter().map(|p| p.len() as u32))
    }

    pub fn is_singleton_free(&self) -> bool {
        self.parts.iter().all(|p| p.len() > 1)
    }

    /// Index (into [`parts`](Self::parts)) of the part holding each element.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (b, part) in self.parts.iter().enumerate() {
            for &e in part {
                idx[e as usize - 1] = b;
            }
        }
        idx
    }

    /// τ, whose cycles are the parts traversed in increasing order.
    pub fn tau(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.parts)
    }

    /// σ∘τ⁻¹ with σ = (1, 2, …, n). Its cycles are the faces.
    pub fn face_permutation(&self) -> Permutation {
        Permutation::long_cycle(self.n).compose(&self.tau().inverse())
    }

    pub fn face_count(&self) -> usize {
        face_count(self.n, &self.tau_images())
    }

    /// τ as a 0-based image array.
    pub(crate) fn tau_images(&self) -> Vec<u32> {
        let mut next = vec![0u32; self.n];
        for part in &self.parts {
            for (i, &e) in part.iter().enumerate() {
                next[e as usize - 1] = part[(i + 1) % part.len()] - 1;
            }
        }
        next
    }

    /// g = (n + 1 − #parts − #faces) / 2.
    pub fn genus(&self) -> Result<u32> {
        if self.n == 0 {
            return Ok(0);
        }
        genus_from_counts(self.n, self.parts.len(), self.face_count())
    }

    pub fn genus_max(&self) -> u32 {
        ((self.n - self.parts.len()) / 2) as u32
    }
}

/// ⌊(n − Σα)/2⌋ for a type of `n`.
pub fn genus_max(n: usize, ty: &PartitionType) -> Result<u32> {
    ty.check_n(n)?;
    Ok(ty.genus_max())
}

pub(crate) fn genus_from_counts(n: usize, parts: usize, faces: usize) -> Result<u32> {
    let twice = n as i64 + 1 - parts as i64 - faces as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::GenusParity(twice));
    }
    Ok((twice / 2) as u32)
}

/// Number of cycles of σ∘τ⁻¹, given τ as 0-based images.
///
/// Walks i ↦ τ(i) − 1 (mod n), the cycles of σ⁻¹∘τ = τ⁻¹(σ∘τ⁻¹)⁻¹τ.
pub(crate) fn face_count(n: usize, next: &[u32]) -> usize {
    let mut seen = vec![false; n];
    let mut faces = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            let j = next[i] as usize;
            i = if j == 0 { n - 1 } else { j - 1 };
        }
    }
    faces
}

/// `1,3,4,6,7|2,5,9|8|10`; the empty partition prints as `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, e) in part.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `1,3,4,6,7|2,5,9|8|10`. Errors carry the byte offset of the
/// offending token.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let err = |position: usize, message: String| Error::Parse { position, message };
    let mut parts = Vec::new();
    let mut first_seen: Vec<usize> = Vec::new();
    let mut offset = 0;
    for chunk in text.split('|') {
        let chunk_start = offset;
        offset += chunk.len() + 1;
        if chunk.trim().is_empty() {
            return Err(err(chunk_start, "empty part".into()));
        }
        let mut part = Vec::new();
        let mut pos = chunk_start;
        for token in chunk.split(',') {
            let at = pos + (token.len() - token.trim_start().len());
            pos += token.len() + 1;
            let t = token.trim();
            if t.is_empty() {
                return Err(err(at, "missing element".into()));
            }
            let value: i64 = t
                .parse()
                .map_err(|_| err(at, format!("`{t}` is not an integer")))?;
            if value <= 0 {
                return Err(err(at, format!("element {value} is not positive")));
            }
            let e = u32::try_from(value).map_err(|_| err(at, format!("element {value} is too large")))?;
            let slot = e as usize;
            if first_seen.len() < slot {
                first_seen.resize(slot, usize::MAX);
            }
            if first_seen[slot - 1] != usize::MAX {
                return Err(err(at, format!("duplicate element {e}")));
            }
            first_seen[slot - 1] = at;
            part.push(e);
        }
        parts.push(part);
    }
    if let Some(missing) = first_seen.iter().position(|&p| p == usize::MAX) {
        return Err(err(text.len(), format!("missing element {}", missing + 1)));
    }
    Ok(Partition::normalized(first_seen.len(), parts))
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}
