//! Exhaustive enumeration of set partitions, stratified by type and genus.

pub(crate) mod engine;
mod moments;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{to_u128_saturating, OrbitRecord, Partition, PartitionType};
use crate::reduce::{classify_arrays, DiagramClass};
use engine::{fold_leaves, NoPruning, Pruner, State};

pub use moments::MomentPolynomial;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Which diagrams an orbit census keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassFilter {
    #[default]
    All,
    Primitive,
    Semiprimitive,
}

impl ClassFilter {
    pub fn accepts(self, class: DiagramClass) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Primitive => class == DiagramClass::Primitive,
            ClassFilter::Semiprimitive => class == DiagramClass::Semiprimitive,
        }
    }
}

/// Exhaustive enumeration under a candidate budget.
///
/// The budget bounds the number of leaves the search would visit, computed
/// up front from the type counts; a search over budget is refused rather
/// than truncated.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    budget: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { budget: DEFAULT_BUDGET }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: u64) -> Self {
        Enumerator { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// The types to search: the filter alone, or every type of `n`.
    pub fn types(&self, n: usize, filter: Option<&PartitionType>, singleton_free: bool) -> Result<Vec<PartitionType>> {
        if n == 0 {
            return Err(Error::InvalidPartition("n must be positive".into()));
        }
        let types = match filter {
            Some(ty) => {
                ty.check_n(n)?;
                vec![ty.clone()]
            }
            None => PartitionType::all_of(n),
        };
        Ok(types
            .into_iter()
            .filter(|t| !singleton_free || t.is_singleton_free())
            .collect())
    }

    pub fn check_budget(&self, types: &[PartitionType]) -> Result<()> {
        let required: BigUint = types.iter().map(|t| t.set_partition_count()).sum();
        if required > BigUint::from(self.budget) {
            return Err(Error::BudgetExceeded {
                required: to_u128_saturating(&required),
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Every qualifying partition exactly once, type by type in the order of
    /// [`PartitionType::all_of`], and within a type in search order.
    pub fn enumerate(&self, n: usize, filter: Option<&PartitionType>, singleton_free: bool) -> Result<Partitions> {
        let types = self.types(n, filter, singleton_free)?;
        self.check_budget(&types)?;
        Ok(Partitions {
            types: types.into_iter(),
            current: None,
        })
    }

    pub fn count_by_genus(&self, n: usize, filter: Option<&PartitionType>) -> Result<GenusCountTable> {
        let types = self.types(n, filter, false)?;
        self.count_types_by_genus(n, &types)
    }

    pub fn count_types_by_genus(&self, n: usize, types: &[PartitionType]) -> Result<GenusCountTable> {
        self.check_budget(types)?;
        let mut table = GenusCountTable::new(n);
        for ty in types {
            ty.check_n(n)?;
            let per_genus = genus_histogram(ty);
            for (g, &count) in per_genus.iter().enumerate() {
                if count > 0 {
                    table.entries.insert((ty.clone(), g as u32), count);
                }
            }
        }
        Ok(table)
    }

    /// Number of partitions of `ty` with genus `g` and class accepted by
    /// `class`.
    pub fn count_with_class(&self, ty: &PartitionType, g: u32, class: ClassFilter) -> Result<u64> {
        self.check_budget(std::slice::from_ref(ty))?;
        Ok(count_matching(ty, g, class, &NoPruning))
    }

    /// One record per rotation orbit of the partitions of type `ty`, genus
    /// `g` and the requested class, sorted by representative.
    pub fn orbit_census(&self, n: usize, ty: &PartitionType, g: u32, class: ClassFilter) -> Result<Vec<OrbitRecord>> {
        ty.check_n(n)?;
        self.check_budget(std::slice::from_ref(ty))?;
        let reps = fold_leaves(
            ty,
            &NoPruning,
            BTreeSet::new,
            |set: &mut BTreeSet<Partition>, s| {
                if leaf_matches(s, g, class) {
                    set.insert(s.to_partition().canonical_form());
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        Ok(reps.iter().map(OrbitRecord::of).collect())
    }

    /// m_n(ε) = Σ_{[α] ⊢ n} Σ_g C^{(g)}_{n,[α]} ε^g κ_{[α]}.
    pub fn moment_polynomial(&self, n: usize) -> Result<MomentPolynomial> {
        Ok(MomentPolynomial::from_table(&self.count_by_genus(n, None)?))
    }

    /// Compares C^{(g)}_{n,[α′ 1^r]} with binomial(n, r) · C^{(g)}_{n−r,[α′]}.
    pub fn singleton_insertion_check(&self, n: usize, r: usize, t_prime: &PartitionType, g: u32) -> Result<SingletonCheck> {
        if !t_prime.is_singleton_free() {
            return Err(Error::InvalidPartition(format!("{t_prime} has singletons")));
        }
        if t_prime.n() + r != n {
            return Err(Error::TypeMismatch { n: n - r.min(n), ty: t_prime.to_string() });
        }
        let full = t_prime.with_singletons(r as u32);
        let direct = self.count_with_class(&full, g, ClassFilter::All)?;
        let reduced = if t_prime.n() == 0 {
            u64::from(g == 0)
        } else {
            self.count_with_class(t_prime, g, ClassFilter::All)?
        };
        let binomial = binomial(n as u64, r as u64);
        Ok(SingletonCheck {
            direct,
            reduced,
            binomial,
            holds: direct as u128 == binomial as u128 * reduced as u128,
        })
    }
}

/// C(n, r) for the small arguments used here.
pub(crate) fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonCheck {
    /// C^{(g)}_{n,[α′ 1^r]}
    pub direct: u64,
    /// C^{(g)}_{n−r,[α′]}
    pub reduced: u64,
    pub binomial: u64,
    pub holds: bool,
}

fn leaf_matches(s: &State, g: u32, class: ClassFilter) -> bool {
    s.genus() == g && (class == ClassFilter::All || class.accepts(classify_arrays(s.tau_next(), s.block_labels(), |b| s.block_size(b))))
}

pub(crate) fn count_matching(ty: &PartitionType, g: u32, class: ClassFilter, pruner: &impl Pruner) -> u64 {
    fold_leaves(
        ty,
        pruner,
        || 0u64,
        |c, s| {
            if leaf_matches(s, g, class) {
                *c += 1;
            }
        },
        |a, b| a + b,
    )
}

fn genus_histogram(ty: &PartitionType) -> Vec<u64> {
    let slots = ty.genus_max() as usize + 1;
    fold_leaves(
        ty,
        &NoPruning,
        || vec![0u64; slots],
        |h, s| h[s.genus() as usize] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

/// Kreweras' count of non-crossing partitions of a type:
/// `n! / ((n + 1 − Σα)! ∏ α_ℓ!)`.
pub fn kreweras_count(n: usize, ty: &PartitionType) -> Result<BigUint> {
    ty.check_n(n)?;
    Ok(ty.kreweras_count())
}

/// Iterator returned by [`Enumerator::enumerate`].
pub struct Partitions {
    types: std::vec::IntoIter<PartitionType>,
    current: Option<State>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(s) = &mut self.current {
                if s.next_leaf(&NoPruning) {
                    return Some(s.to_partition());
                }
            }
            self.current = Some(State::new(&self.types.next()?));
        }
    }
}

/// Exact counts C^{(g)}_{n,[α]}; only non-zero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusCountTable {
    pub n: usize,
    pub entries: BTreeMap<(PartitionType, u32), u64>,
}

impl GenusCountTable {
    pub fn new(n: usize) -> Self {
        GenusCountTable { n, entries: BTreeMap::new() }
    }

    pub fn get(&self, ty: &PartitionType, g: u32) -> u64 {
        self.entries.get(&(ty.clone(), g)).copied().unwrap_or(0)
    }

    /// Σ over types of the genus `g` counts.
    pub fn total_for_genus(&self, g: u32) -> u64 {
        self.entries.iter().filter(|((_, h), _)| *h == g).map(|(_, &c)| c).sum()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Rows in the order of [`PartitionType::all_of`], then by genus.
    pub fn rows(&self) -> Vec<GenusCount> {
        let mut rows: Vec<GenusCount> = self
            .entries
            .iter()
            .map(|((ty, g), &count)| GenusCount {
                ty: ty.clone(),
                genus: *g,
                count,
            })
            .collect();
        rows.sort_by(|a, b| b.ty.sizes_desc().cmp(&a.ty.sizes_desc()).then(a.genus.cmp(&b.genus)));
        rows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCount {
    #[serde(rename = "type", with = "type_string")]
    pub ty: PartitionType,
    pub genus: u32,
    pub count: u64,
}

mod type_string {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::partition::PartitionType;

    pub fn serialize<S: Serializer>(ty: &PartitionType, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(ty)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PartitionType, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    counts: Vec<GenusCount>,
}

impl Serialize for GenusCountTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            n: self.n,
            counts: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenusCountTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableJson::deserialize(d)?;
        let mut table = GenusCountTable::new(raw.n);
        for row in raw.counts {
            table.entries.insert((row.ty, row.genus), row.count);
        }
        Ok(table)
    }
}

impl fmt::Display for GenusCountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let width = rows.iter().map(|r| r.ty.to_string().len()).max().unwrap_or(4).max(4);
        writeln!(f, "{:<width$}  {:>5}  {:>12}", "type", "genus", "count")?;
        for r in rows {
            writeln!(f, "{:<width$}  {:>5}  {:>12}", r.ty.to_string(), r.genus, r.count)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> PartitionType {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        let e = Enumerator::new();
        assert_eq!(e.enumerate(3, None, false).unwrap().count(), 5);
        let pairs: BTreeSet<String> = e
            .enumerate(4, Some(&ty("2^2")), false)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        let expected: BTreeSet<String> = ["1,2|3,4", "1,4|2,3", "1,3|2,4"].iter().map(|s| s.to_string()).collect();
        assert_eq!(pairs, expected);
        assert!(e.enumerate(5, Some(&ty("2^2")), false).is_err());
        assert_eq!(e.enumerate(5, None, true).unwrap().count(), 11);
    }

    #[test]
    fn counts_by_genus() {
        let e = Enumerator::new();
        let t4 = e.count_by_genus(4, None).unwrap();
        assert_eq!(t4.get(&ty("2^2"), 0), 2);
        assert_eq!(t4.get(&ty("2^2"), 1), 1);
        assert_eq!(t4.total(), 15);
        let t5 = e.count_by_genus(5, None).unwrap();
        assert_eq!(t5.get(&ty("2 3"), 0), 5);
        assert_eq!(t5.get(&ty("2 3"), 1), 5);
        assert_eq!(t5.get(&ty("1 2^2"), 0), 10);
        assert_eq!(t5.get(&ty("1 2^2"), 1), 5);
        let t6 = e.count_by_genus(6, Some(&ty("3^2"))).unwrap();
        assert_eq!(t6.get(&ty("3^2"), 2), 1);
    }

    #[test]
    fn table_json() {
        let t = Enumerator::new().count_by_genus(4, Some(&ty("2^2"))).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"counts":[{"type":"[2^2]","genus":0,"count":2},{"type":"[2^2]","genus":1,"count":1}]}"#
        );
        let back: GenusCountTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn budget_is_enforced() {
        let e = Enumerator::with_budget(100);
        match e.count_by_genus(6, None) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, 203);
                assert_eq!(budget, 100);
            }
            other => panic!("{other:?}"),
        }
        assert!(e.count_by_genus(5, None).is_ok());
    }

    #[test]
    fn kreweras() {
        assert_eq!(kreweras_count(4, &ty("2^2")).unwrap(), BigUint::from(2u32));
        assert_eq!(kreweras_count(5, &ty("1 2^2")).unwrap(), BigUint::from(10u32));
        assert_eq!(kreweras_count(6, &ty("6")).unwrap(), BigUint::from(1u32));
        assert!(kreweras_count(6, &ty("5")).is_err());
    }

    #[test]
    fn orbits() {
        let e = Enumerator::new();
        let prim = e.orbit_census(7, &ty("2^2 3"), 2, ClassFilter::Primitive).unwrap();
        assert_eq!(prim.len(), 2);
        assert_eq!(prim.iter().map(|o| o.orbit_length).sum::<usize>(), 14);
        let w: usize = e
            .orbit_census(8, &ty("2 3^2"), 2, ClassFilter::Primitive)
            .unwrap()
            .iter()
            .map(|o| o.orbit_length)
            .sum();
        assert_eq!(w, 20);
        let semi = e.orbit_census(10, &ty("2^2 3^2"), 2, ClassFilter::Semiprimitive).unwrap();
        assert_eq!(semi.len(), 3);
        assert_eq!(semi.iter().map(|o| o.orbit_length).sum::<usize>(), 15);
        let six = e.orbit_census(6, &ty("3^2"), 2, ClassFilter::All).unwrap();
        assert_eq!(six.len(), 1);
        assert_eq!(six[0].stabilizer_order, 6);
        assert_eq!(six[0].orbit_length, 1);
        let eight = e.orbit_census(8, &ty("2^4"), 2, ClassFilter::Primitive).unwrap();
        let mut stabs: Vec<usize> = eight.iter().map(|o| o.stabilizer_order).collect();
        stabs.sort();
        assert_eq!(stabs, vec![1, 1, 2, 8]);
    }

    #[test]
    fn singleton_insertion() {
        let e = Enumerator::new();
        let c = e.singleton_insertion_check(5, 1, &ty("2^2"), 1).unwrap();
        assert_eq!((c.direct, c.reduced * c.binomial), (5, 5));
        assert!(c.holds);
        let c = e.singleton_insertion_check(5, 3, &ty("2"), 0).unwrap();
        assert_eq!(c.direct, 10);
        assert!(c.holds);
        let c = e.singleton_insertion_check(4, 0, &ty("2^2"), 1).unwrap();
        assert!(c.holds);
    }
}
