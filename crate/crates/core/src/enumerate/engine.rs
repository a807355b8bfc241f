//! Backtracking over the set partitions of a fixed type.
//!
//! Elements are placed in increasing order. Element `e` either joins an open
//! block or opens a new block whose final size is declared on the spot, drawn
//! from the sizes the type still has available. Blocks therefore appear in
//! order of their smallest element, every leaf is a distinct partition of the
//! requested type, and there are no dead ends: the search tree has exactly
//! `c_{n,[α]}` leaves.
//!
//! τ is maintained along the way (`next`), so genus is available at a leaf in
//! one pass over the faces. On request the search also follows the faces as
//! they form: every link of τ fixes one arrow i ↦ τ(i) − 1 of σ⁻¹∘τ (conjugate
//! to σ∘τ⁻¹), and arrows are glued into paths until a path closes into a face.

use rayon::prelude::*;

use crate::partition::{face_count, genus_from_counts, Partition, PartitionType};

/// Search-time pruning. Must only reject branches that contain no wanted leaf.
pub(crate) trait Pruner: Sync {
    /// Whether the search should keep [`FaceTracker`] up to date.
    const TRACK_FACES: bool = false;

    /// May element `d` (0-based) join block `b`?
    fn allow_join(&self, _state: &State, _d: usize, _b: usize) -> bool {
        true
    }

    /// Checked after every placement.
    fn allow_state(&self, _state: &State) -> bool {
        true
    }
}

/// Faces closed so far, for the paths-and-cycles view of σ⁻¹∘τ.
#[derive(Clone, Debug, Default)]
pub(crate) struct FaceTracker {
    head_of_tail: Vec<u32>,
    tail_of_head: Vec<u32>,
    path_len: Vec<u32>,
    undo: Vec<Glue>,
    pub(crate) closed: u32,
    pub(crate) closed_len: u32,
    pub(crate) closed_two: u32,
}

#[derive(Clone, Copy, Debug)]
enum Glue {
    Closed(u32),
    Merged { x: u32, y: u32, h: u32, t: u32, old_len: u32 },
}

impl FaceTracker {
    fn new(n: usize) -> Self {
        FaceTracker {
            head_of_tail: (0..n as u32).collect(),
            tail_of_head: (0..n as u32).collect(),
            path_len: vec![1; n],
            ..Default::default()
        }
    }

    /// Adds the arrow x ↦ y, where x ends a path and y starts one.
    fn link(&mut self, x: u32, y: u32) {
        let h = self.head_of_tail[x as usize];
        if h == y {
            let len = self.path_len[h as usize];
            self.closed += 1;
            self.closed_len += len;
            if len == 2 {
                self.closed_two += 1;
            }
            self.undo.push(Glue::Closed(len));
        } else {
            let t = self.tail_of_head[y as usize];
            let old_len = self.path_len[h as usize];
            self.head_of_tail[t as usize] = h;
            self.tail_of_head[h as usize] = t;
            self.path_len[h as usize] += self.path_len[y as usize];
            self.undo.push(Glue::Merged { x, y, h, t, old_len });
        }
    }

    fn unlink(&mut self) {
        match self.undo.pop().expect("unbalanced unlink") {
            Glue::Closed(len) => {
                self.closed -= 1;
                self.closed_len -= len;
                if len == 2 {
                    self.closed_two -= 1;
                }
            }
            Glue::Merged { x, y, h, t, old_len } => {
                self.head_of_tail[t as usize] = y;
                self.tail_of_head[h as usize] = x;
                self.path_len[h as usize] = old_len;
            }
        }
    }
}

pub(crate) struct NoPruning;

impl Pruner for NoPruning {}

#[derive(Clone, Debug)]
pub(crate) struct State {
    n: usize,
    depth: usize,
    floor: usize,
    started: bool,
    block_of: Vec<u32>,
    choice: Vec<u32>,
    saved_last: Vec<u32>,
    next: Vec<u32>,
    first: Vec<u32>,
    last: Vec<u32>,
    cap: Vec<u32>,
    size: Vec<u32>,
    nblocks: usize,
    /// (size, how many blocks of that size are still unopened)
    avail: Vec<(u32, u32)>,
    faces: Option<FaceTracker>,
    links: Vec<u8>,
}

impl State {
    pub(crate) fn new(ty: &PartitionType) -> Self {
        Self::with_tracking(ty, false)
    }

    pub(crate) fn with_tracking(ty: &PartitionType, track_faces: bool) -> Self {
        let n = ty.n();
        let blocks = ty.num_parts();
        State {
            n,
            depth: 0,
            floor: 0,
            started: false,
            block_of: vec![0; n],
            choice: vec![0; n],
            saved_last: vec![0; n],
            next: vec![0; n],
            first: vec![0; blocks],
            last: vec![0; blocks],
            cap: vec![0; blocks],
            size: vec![0; blocks],
            nblocks: 0,
            avail: ty.multiplicities().collect(),
            faces: track_faces.then(|| FaceTracker::new(n)),
            links: vec![0; n],
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn faces(&self) -> &FaceTracker {
        self.faces.as_ref().expect("face tracking is on")
    }

    /// Records τ(a) = b.
    fn set_next(&mut self, d: usize, a: u32, b: u32) {
        self.next[a as usize] = b;
        if let Some(f) = &mut self.faces {
            let y = if b == 0 { self.n as u32 - 1 } else { b - 1 };
            f.link(a, y);
            self.links[d] += 1;
        }
    }

    /// Block of element `d` (0-based), valid for `d < depth`.
    pub(crate) fn block_of(&self, d: usize) -> usize {
        self.block_of[d] as usize
    }

    pub(crate) fn block_first(&self, b: usize) -> usize {
        self.first[b] as usize
    }

    pub(crate) fn block_last(&self, b: usize) -> usize {
        self.last[b] as usize
    }

    pub(crate) fn block_size(&self, b: usize) -> usize {
        self.size[b] as usize
    }

    pub(crate) fn block_complete(&self, b: usize) -> bool {
        self.cap[b] == 0
    }

    /// τ as 0-based images; complete only at a leaf.
    pub(crate) fn tau_next(&self) -> &[u32] {
        &self.next
    }

    pub(crate) fn block_labels(&self) -> &[u32] {
        &self.block_of
    }

    pub(crate) fn face_count(&self) -> usize {
        face_count(self.n, &self.next)
    }

    pub(crate) fn genus(&self) -> u32 {
        genus_from_counts(self.n, self.nblocks, self.face_count()).expect("Euler parity holds for a valid τ")
    }

    pub(crate) fn to_partition(&self) -> Partition {
        Partition::from_block_labels(&self.block_of)
    }

    fn find_option(&self, d: usize, from: u32, pruner: &impl Pruner) -> Option<u32> {
        let nb = self.nblocks as u32;
        let total = nb + self.avail.len() as u32;
        (from..total).find(|&o| {
            if o < nb {
                self.cap[o as usize] > 0 && pruner.allow_join(self, d, o as usize)
            } else {
                self.avail[(o - nb) as usize].1 > 0
            }
        })
    }

    fn apply(&mut self, d: usize, o: u32) {
        let du = d as u32;
        self.choice[d] = o;
        if (o as usize) < self.nblocks {
            let b = o as usize;
            self.block_of[d] = o;
            self.saved_last[d] = self.last[b];
            self.set_next(d, self.last[b], du);
            self.last[b] = du;
            self.cap[b] -= 1;
            if self.cap[b] == 0 {
                self.set_next(d, du, self.first[b]);
            }
        } else {
            let j = o as usize - self.nblocks;
            let b = self.nblocks;
            self.nblocks += 1;
            let s = self.avail[j].0;
            self.avail[j].1 -= 1;
            self.block_of[d] = b as u32;
            self.first[b] = du;
            self.last[b] = du;
            self.size[b] = s;
            self.cap[b] = s - 1;
            if s == 1 {
                self.set_next(d, du, du);
            }
        }
    }

    fn undo(&mut self, d: usize) -> u32 {
        if let Some(f) = &mut self.faces {
            for _ in 0..self.links[d] {
                f.unlink();
            }
            self.links[d] = 0;
        }
        let o = self.choice[d];
        let b = self.block_of[d] as usize;
        if self.first[b] as usize == d {
            self.nblocks -= 1;
            self.avail[o as usize - self.nblocks].1 += 1;
        } else {
            self.cap[b] += 1;
            self.last[b] = self.saved_last[d];
        }
        o
    }

    /// Advances to the next state at depth `target`; false when exhausted.
    fn advance_to(&mut self, target: usize, pruner: &impl Pruner) -> bool {
        let mut from;
        if !self.started {
            self.started = true;
            if self.depth == target {
                return true;
            }
            from = 0;
        } else {
            if self.depth == self.floor {
                return false;
            }
            self.depth -= 1;
            from = self.undo(self.depth) + 1;
        }
        loop {
            match self.find_option(self.depth, from, pruner) {
                Some(o) => {
                    self.apply(self.depth, o);
                    if !pruner.allow_state(self) {
                        from = self.undo(self.depth) + 1;
                        continue;
                    }
                    self.depth += 1;
                    if self.depth == target {
                        return true;
                    }
                    from = 0;
                }
                None => {
                    if self.depth == self.floor {
                        return false;
                    }
                    self.depth -= 1;
                    from = self.undo(self.depth) + 1;
                }
            }
        }
    }

    /// Advances to the next leaf.
    pub(crate) fn next_leaf(&mut self, pruner: &impl Pruner) -> bool {
        self.advance_to(self.n, pruner)
    }

    /// Splits the search below this (fresh) state into independent shards
    /// fixing the blocks of the first few elements.
    fn shards(&self, wanted: usize, pruner: &impl Pruner) -> Vec<State> {
        let mut depth = 0;
        let mut frontier = vec![self.clone()];
        while frontier.len() < wanted && depth < self.n {
            depth += 1;
            let mut deeper = Vec::new();
            for mut s in frontier {
                s.floor = s.depth;
                s.started = false;
                while s.advance_to(depth, pruner) {
                    let mut shard = s.clone();
                    shard.floor = depth;
                    shard.started = false;
                    deeper.push(shard);
                }
            }
            frontier = deeper;
        }
        frontier
    }
}

/// Below this many candidates a type is searched on the calling thread.
const PARALLEL_THRESHOLD: u128 = 50_000;

/// Folds `visit` over every leaf of the search for `ty`, in parallel over
/// prefix shards. Accumulators are combined with `merge`, which must be
/// associative and commutative for the result to be deterministic.
pub(crate) fn fold_leaves<A, P, I, V, M>(ty: &PartitionType, pruner: &P, init: I, visit: V, merge: M) -> A
where
    A: Send,
    P: Pruner,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &State) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let root = State::with_tracking(ty, P::TRACK_FACES);
    let candidates = crate::partition::to_u128_saturating(&ty.set_partition_count());
    let run = |mut s: State| {
        let mut acc = init();
        while s.next_leaf(pruner) {
            visit(&mut acc, &s);
        }
        acc
    };
    if candidates < PARALLEL_THRESHOLD {
        return run(root);
    }
    let wanted = 64 * rayon::current_num_threads().max(1);
    root.shards(wanted, pruner)
        .into_par_iter()
        .map(run)
        .reduce(&init, &merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn leaves(ty: &PartitionType) -> Vec<Partition> {
        let mut s = State::new(ty);
        let mut out = Vec::new();
        while s.next_leaf(&NoPruning) {
            out.push(s.to_partition());
        }
        out
    }

    #[test]
    fn leaves_are_distinct_partitions_of_the_type() {
        for n in 1..=8 {
            for ty in PartitionType::all_of(n) {
                let ps = leaves(&ty);
                let distinct: BTreeSet<_> = ps.iter().cloned().collect();
                assert_eq!(distinct.len(), ps.len());
                assert_eq!(ps.len() as u128, to_u128(&ty));
                assert!(ps.iter().all(|p| p.part_type() == ty));
            }
        }
    }

    fn to_u128(ty: &PartitionType) -> u128 {
        crate::partition::to_u128_saturating(&ty.set_partition_count())
    }

    #[test]
    fn leaf_genus_matches_partition_genus() {
        let ty: PartitionType = "1^2 3 5".parse().unwrap();
        let mut s = State::new(&ty);
        while s.next_leaf(&NoPruning) {
            let p = s.to_partition();
            assert_eq!(s.genus(), p.genus().unwrap(), "{p}");
        }
    }

    #[test]
    fn tracked_faces_match_at_leaves() {
        let ty: PartitionType = "2^2 3^2".parse().unwrap();
        let mut s = State::with_tracking(&ty, true);
        while s.next_leaf(&NoPruning) {
            let f = s.faces();
            assert_eq!(f.closed as usize, s.face_count());
            assert_eq!(f.closed_len as usize, s.n());
        }
    }

    #[test]
    fn sharded_fold_counts_everything() {
        let ty = PartitionType::uniform(2, 6);
        let total = fold_leaves(&ty, &NoPruning, || 0u64, |c, _| *c += 1, |a, b| a + b);
        assert_eq!(total, 10395);
        let root = State::new(&ty);
        let shards = root.shards(100, &NoPruning);
        assert!(shards.len() >= 100);
        let mut sum = 0;
        for mut s in shards {
            while s.next_leaf(&NoPruning) {
                sum += 1;
            }
        }
        assert_eq!(sum, 10395);
    }
}
