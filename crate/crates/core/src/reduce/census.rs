//! Census of genus 2 primitive and semi-primitive diagrams.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::engine::{Pruner, State};
use crate::enumerate::{count_matching, ClassFilter};
use crate::partition::PartitionType;

/// Sound pruning for (semi-)primitive diagrams of a given type and genus.
///
/// No element may join the part of its predecessor, and no part may close a
/// 2-face that the class forbids: when element `d` joins part `B` whose last
/// element is `l < d − 1`, the chord `l → d` bounds a 2-face with part `C`
/// exactly when `C` is complete and spans `l + 1 ..= d − 1`.
///
/// The genus fixes the number of faces, F = n + 1 − #parts − 2g. Faces of a
/// primitive diagram have length at least 3. A semi-primitive one may also
/// have 2-faces, at most one for each pair of parts of size ≥ 3. So the
/// points not yet on a closed face must still be able to carry the missing
/// faces.
pub(crate) struct CensusPruner {
    semiprimitive: bool,
    faces_needed: u32,
    two_faces_allowed: u32,
}

impl CensusPruner {
    pub(crate) fn new(ty: &PartitionType, g: u32, semiprimitive: bool) -> Self {
        let twice = ty.n() as i64 + 1 - ty.num_parts() as i64 - 2 * g as i64;
        let big = ty.multiplicities().filter(|&(l, _)| l > 2).map(|(_, a)| a).sum::<u32>();
        CensusPruner {
            semiprimitive,
            faces_needed: twice.max(0) as u32,
            two_faces_allowed: if semiprimitive { big * big.saturating_sub(1) / 2 } else { 0 },
        }
    }
}

impl Pruner for CensusPruner {
    const TRACK_FACES: bool = true;

    fn allow_state(&self, s: &State) -> bool {
        let f = s.faces();
        if f.closed > self.faces_needed || f.closed_two > self.two_faces_allowed {
            return false;
        }
        let open_points = s.n() as u32 - f.closed_len;
        let spare_two = self.two_faces_allowed - f.closed_two;
        f.closed + (open_points + spare_two) / 3 >= self.faces_needed
    }

    fn allow_join(&self, s: &State, d: usize, b: usize) -> bool {
        if d == 0 {
            return true;
        }
        if s.block_of(d - 1) == b {
            return false;
        }
        let l = s.block_last(b);
        if l + 1 < d {
            let c = s.block_of(l + 1);
            if s.block_first(c) == l + 1 && s.block_complete(c) && s.block_last(c) == d - 1 {
                return self.semiprimitive && s.block_size(b) > 2 && s.block_size(c) > 2;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusColumn {
    TwoVerticesOnly,
    #[serde(rename = "one_3_vertex")]
    One3Vertex,
    #[serde(rename = "two_3_vertices_prim")]
    Two3VerticesPrim,
    #[serde(rename = "two_3_vertices_semiprim")]
    Two3VerticesSemiprim,
    #[serde(rename = "one_4_vertex")]
    One4Vertex,
}

impl CensusColumn {
    pub const ALL: [CensusColumn; 5] = [
        CensusColumn::TwoVerticesOnly,
        CensusColumn::One3Vertex,
        CensusColumn::Two3VerticesPrim,
        CensusColumn::Two3VerticesSemiprim,
        CensusColumn::One4Vertex,
    ];

    pub fn title(self) -> &'static str {
        match self {
            CensusColumn::TwoVerticesOnly => "2-vertices",
            CensusColumn::One3Vertex => "one 3-vertex",
            CensusColumn::Two3VerticesPrim => "two 3-vertices",
            CensusColumn::Two3VerticesSemiprim => "two 3-v. semi-prim.",
            CensusColumn::One4Vertex => "one 4-vertex",
        }
    }

    /// The type counted in this column at `n`, if there is one.
    pub fn partition_type(self, n: usize) -> Option<PartitionType> {
        let (big, rest): (&[(u32, u32)], usize) = match self {
            CensusColumn::TwoVerticesOnly => (&[], 0),
            CensusColumn::One3Vertex => (&[(3, 1)], 3),
            CensusColumn::Two3VerticesPrim | CensusColumn::Two3VerticesSemiprim => (&[(3, 2)], 6),
            CensusColumn::One4Vertex => (&[(4, 1)], 4),
        };
        if n < rest || !(n - rest).is_multiple_of(2) {
            return None;
        }
        let twos = ((n - rest) / 2) as u32;
        Some(PartitionType::from_multiplicities(big.iter().copied().chain([(2, twos)])))
    }

    pub fn class(self) -> ClassFilter {
        match self {
            CensusColumn::Two3VerticesSemiprim => ClassFilter::Semiprimitive,
            _ => ClassFilter::Primitive,
        }
    }
}

/// Labelled counts of genus 2 (semi-)primitive partitions per size and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub genus: u32,
    pub rows: BTreeMap<(usize, CensusColumn), u64>,
}

impl CensusTable {
    pub fn get(&self, n: usize, column: CensusColumn) -> u64 {
        self.rows.get(&(n, column)).copied().unwrap_or(0)
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.rows.keys().map(|(n, _)| *n).collect();
        ns.dedup();
        ns
    }
}

/// Number of partitions of `ty` with genus `g` in the given class, using the
/// census pruning.
pub fn count_class(ty: &PartitionType, g: u32, class: ClassFilter) -> u64 {
    match class {
        ClassFilter::All => count_matching(ty, g, class, &crate::enumerate::engine::NoPruning),
        ClassFilter::Primitive => count_matching(ty, g, class, &CensusPruner::new(ty, g, false)),
        ClassFilter::Semiprimitive => count_matching(ty, g, class, &CensusPruner::new(ty, g, true)),
    }
}

/// Table of genus 2 primitive and semi-primitive diagrams for n = 6 ..= 18,
/// by exhaustive type-restricted enumeration.
pub fn census_genus2() -> CensusTable {
    census(2, 6..=18)
}

pub(crate) fn census(genus: u32, sizes: std::ops::RangeInclusive<usize>) -> CensusTable {
    let cells: Vec<(usize, CensusColumn)> = sizes
        .flat_map(|n| CensusColumn::ALL.into_iter().map(move |c| (n, c)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(n, column)| {
            let count = column
                .partition_type(n)
                .map_or(0, |ty| count_class(&ty, genus, column.class()));
            ((n, column), count)
        })
        .collect();
    CensusTable { genus, rows }
}

#[derive(Serialize, Deserialize)]
struct CensusRowJson {
    n: usize,
    #[serde(flatten)]
    counts: BTreeMap<CensusColumn, u64>,
}

#[derive(Serialize, Deserialize)]
struct CensusJson {
    genus: u32,
    rows: Vec<CensusRowJson>,
}

impl Serialize for CensusTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CensusJson {
            genus: self.genus,
            rows: self
                .sizes()
                .into_iter()
                .map(|n| CensusRowJson {
                    n,
                    counts: CensusColumn::ALL.iter().map(|&c| (c, self.get(n, c))).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CensusTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CensusJson::deserialize(d)?;
        let mut rows = BTreeMap::new();
        for row in raw.rows {
            for (c, v) in row.counts {
                rows.insert((row.n, c), v);
            }
        }
        Ok(CensusTable { genus: raw.genus, rows })
    }
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>3}", "n")?;
        for c in CensusColumn::ALL {
            write!(f, " | {:>19}", c.title())?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(3 + 5 * 22))?;
        for n in self.sizes() {
            write!(f, "{n:>3}")?;
            for c in CensusColumn::ALL {
                write!(f, " | {:>19}", self.get(n, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Enumerator;

    #[test]
    fn column_types() {
        assert_eq!(CensusColumn::TwoVerticesOnly.partition_type(8).unwrap().to_string(), "[2^4]");
        assert_eq!(CensusColumn::One3Vertex.partition_type(7).unwrap().to_string(), "[2^2 3]");
        assert!(CensusColumn::One3Vertex.partition_type(8).is_none());
        assert_eq!(CensusColumn::Two3VerticesPrim.partition_type(6).unwrap().to_string(), "[3^2]");
        assert_eq!(CensusColumn::One4Vertex.partition_type(10).unwrap().to_string(), "[2^3 4]");
    }

    #[test]
    fn pruning_agrees_with_plain_enumeration() {
        let e = Enumerator::new();
        for n in 4..=11 {
            for ty in PartitionType::all_of(n).into_iter().filter(|t| t.is_singleton_free()) {
                for g in 1..=2 {
                    for class in [ClassFilter::Primitive, ClassFilter::Semiprimitive] {
                        assert_eq!(
                            count_class(&ty, g, class),
                            e.count_with_class(&ty, g, class).unwrap(),
                            "n={n} {ty} g={g} {class:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn small_rows() {
        let t = census(2, 6..=10);
        assert_eq!(t.get(6, CensusColumn::Two3VerticesPrim), 1);
        assert_eq!(t.get(7, CensusColumn::One3Vertex), 14);
        assert_eq!(t.get(8, CensusColumn::TwoVerticesOnly), 21);
        assert_eq!(t.get(8, CensusColumn::Two3VerticesPrim), 20);
        assert_eq!(t.get(8, CensusColumn::One4Vertex), 6);
        assert_eq!(t.get(10, CensusColumn::Two3VerticesSemiprim), 15);
        let json = serde_json::to_string(&t).unwrap();
        let back: CensusTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
