//! Genus-preserving reduction of partitions to (semi-)primitive diagrams.
//!
//! Four moves never change the genus: deleting a singleton, deleting a part
//! made of cyclically consecutive points (a centipede), collapsing a run of
//! consecutive points of one part to a single point (adjacent edges), and
//! deleting a 2-element part that bounds a 2-face together with another part
//! (parallel lines). Survivors are renumbered in increasing order, so the
//! smallest surviving label becomes 1.
//!
//! When a run of adjacent points collapses, the point kept is 1 if the run
//! contains it and otherwise the first point of the run met clockwise from 1,
//! i.e. the smallest label of the run. When both parts of a parallel pair have
//! two elements, the part kept is the one holding the smallest of the four
//! endpoints.

mod census;
mod classify;
mod confluence;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

pub use census::{census_genus2, count_class, CensusColumn, CensusTable};
pub(crate) use classify::classify_arrays;
pub use classify::{classify, is_primitive, is_semiprimitive, DiagramClass};
pub use confluence::{confluence_check, reduce_with_rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    RemoveSingleton,
    RemoveCentipede,
    RemoveAdjacentEdge,
    RemoveParallelLine,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::RemoveSingleton => "remove singleton",
            MoveKind::RemoveCentipede => "remove centipede",
            MoveKind::RemoveAdjacentEdge => "remove adjacent edges",
            MoveKind::RemoveParallelLine => "remove parallel line",
        })
    }
}

/// One applicable move: which points it deletes, in the current labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub removed: Vec<u32>,
}

impl Move {
    pub fn apply(&self, p: &Partition) -> Partition {
        delete_points(p, &self.removed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: MoveKind,
    /// Points deleted, labelled as in the partition before the step.
    pub removed: Vec<u32>,
    pub before_n: usize,
    pub after_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub input: Partition,
    pub steps: Vec<ReductionStep>,
    pub result: Partition,
    pub classification: DiagramClass,
}

impl ReductionTrace {
    /// Re-applies the steps to the input; returns the intermediate partitions
    /// including input and result.
    pub fn replay(&self) -> Vec<Partition> {
        let mut stages = vec![self.input.clone()];
        for step in &self.steps {
            let last = stages.last().expect("non-empty");
            stages.push(delete_points(last, &step.removed));
        }
        stages
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {} (n = {})", self.input, self.input.n())?;
        let stages = self.replay();
        for (i, step) in self.steps.iter().enumerate() {
            let removed: Vec<String> = step.removed.iter().map(|e| e.to_string()).collect();
            writeln!(
                f,
                "{:>3}. {} [{}]: n {} -> {}, now {}",
                i + 1,
                step.kind,
                removed.join(","),
                step.before_n,
                step.after_n,
                stages[i + 1]
            )?;
        }
        write!(f, "result: {} ({})", self.result, self.classification)
    }
}

/// Deletes `removed` (current labels) and renumbers survivors 1, 2, … in
/// increasing order; parts left empty disappear.
pub fn delete_points(p: &Partition, removed: &[u32]) -> Partition {
    let n = p.n();
    let mut gone = vec![false; n + 1];
    for &e in removed {
        gone[e as usize] = true;
    }
    let mut relabel = vec![0u32; n + 1];
    let mut next = 0;
    for i in 1..=n {
        if !gone[i] {
            next += 1;
            relabel[i] = next;
        }
    }
    let parts: Vec<Vec<u32>> = p
        .parts()
        .iter()
        .map(|part| part.iter().filter(|&&e| !gone[e as usize]).map(|&e| relabel[e as usize]).collect::<Vec<u32>>())
        .filter(|part| !part.is_empty())
        .collect();
    if next == 0 {
        Partition::empty()
    } else {
        Partition::normalized(next as usize, parts)
    }
}

fn is_centipede(part: &[u32], n: usize) -> bool {
    let k = part.len();
    if k < 2 {
        return false;
    }
    if k == n {
        return true;
    }
    // A cyclic interval has exactly one gap between consecutive members.
    let gaps = (0..k).filter(|&i| {
        let a = part[i];
        let b = part[(i + 1) % k];
        b != a % n as u32 + 1
    });
    gaps.count() == 1
}

/// Maximal runs of cyclically consecutive points lying in one part, as the
/// points to delete (every point of the run but the one kept).
fn adjacent_runs(p: &Partition) -> Vec<Vec<u32>> {
    let n = p.n();
    if n < 2 {
        return Vec::new();
    }
    let block = p.block_index();
    let same = |i: usize| block[i - 1] == block[i % n]; // i and i+1 (cyclically)
    if (1..=n).all(same) {
        return vec![(2..=n as u32).collect()];
    }
    let mut runs = Vec::new();
    // Start scanning right after a point whose successor is in another part,
    // so no run is cut by the wrap n -> 1.
    let start = (1..=n).find(|&i| !same(i)).expect("not all equal") % n + 1;
    let mut run = vec![start as u32];
    for step in 1..=n {
        let prev = (start + step - 2) % n + 1;
        let cur = (start + step - 1) % n + 1;
        if step < n && same(prev) {
            run.push(cur as u32);
        } else {
            if run.len() > 1 {
                let keep = *run.iter().min().expect("non-empty");
                runs.push(run.iter().copied().filter(|&e| e != keep).collect());
            }
            run = vec![cur as u32];
        }
    }
    runs
}

/// Parallel pairs: 2-cycles of σ∘τ⁻¹ with a 2-element incident part, as the
/// part to delete.
fn parallel_deletions(p: &Partition) -> Vec<Vec<u32>> {
    let n = p.n();
    let face = p.face_permutation();
    let block = p.block_index();
    let mut out = Vec::new();
    for a in 1..=n as u32 {
        let b = face.apply(a);
        if b <= a || face.apply(b) != a {
            continue;
        }
        // a−1 and b lie in one part P, b−1 and a in another part Q.
        let pa = &p.parts()[block[b as usize - 1]];
        let qa = &p.parts()[block[a as usize - 1]];
        let victim = match (pa.len() == 2, qa.len() == 2) {
            (false, false) => continue,
            (true, false) => pa,
            (false, true) => qa,
            (true, true) => {
                let smallest = pa.iter().chain(qa.iter()).min().expect("non-empty");
                if pa.contains(smallest) {
                    qa
                } else {
                    pa
                }
            }
        };
        if !out.contains(victim) {
            out.push(victim.clone());
        }
    }
    out
}

/// Every move applicable to `p`, grouped in priority order.
pub fn applicable_moves(p: &Partition) -> Vec<Move> {
    let n = p.n();
    let mut moves: Vec<Move> = p
        .parts()
        .iter()
        .filter(|part| part.len() == 1)
        .map(|part| Move {
            kind: MoveKind::RemoveSingleton,
            removed: part.clone(),
        })
        .collect();
    moves.extend(p.parts().iter().filter(|part| is_centipede(part, n)).map(|part| Move {
        kind: MoveKind::RemoveCentipede,
        removed: part.clone(),
    }));
    moves.extend(adjacent_runs(p).into_iter().map(|removed| Move {
        kind: MoveKind::RemoveAdjacentEdge,
        removed,
    }));
    moves.extend(parallel_deletions(p).into_iter().map(|removed| Move {
        kind: MoveKind::RemoveParallelLine,
        removed,
    }));
    moves
}

fn first_move(p: &Partition, kind: MoveKind) -> Option<Move> {
    applicable_moves(p).into_iter().find(|m| m.kind == kind)
}

fn apply_all(p: &Partition, kind: MoveKind) -> Partition {
    let mut cur = p.clone();
    while let Some(m) = first_move(&cur, kind) {
        cur = m.apply(&cur);
    }
    cur
}

pub fn remove_singletons(p: &Partition) -> Partition {
    apply_all(p, MoveKind::RemoveSingleton)
}

pub fn remove_centipedes(p: &Partition) -> Partition {
    apply_all(p, MoveKind::RemoveCentipede)
}

pub fn remove_adjacent_edges(p: &Partition) -> Partition {
    apply_all(p, MoveKind::RemoveAdjacentEdge)
}

pub fn remove_parallel_lines(p: &Partition) -> Partition {
    apply_all(p, MoveKind::RemoveParallelLine)
}

/// Applies moves to a fixed point, always taking the first applicable move
/// in the order singletons, centipedes, adjacent edges, parallel lines.
pub fn reduce(p: &Partition) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut cur = p.clone();
    while let Some(m) = applicable_moves(&cur).into_iter().next() {
        let next = m.apply(&cur);
        debug_assert_eq!(next.genus().ok(), cur.genus().ok(), "{:?} changed the genus of {cur}", m.kind);
        steps.push(ReductionStep {
            kind: m.kind,
            removed: m.removed,
            before_n: cur.n(),
            after_n: next.n(),
        });
        cur = next;
    }
    ReductionTrace {
        input: p.clone(),
        steps,
        classification: classify(&cur),
        result: cur,
    }
}
