use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{applicable_moves, reduce};
use crate::partition::Partition;

/// Reduces `p` taking a uniformly random applicable move at every step.
pub fn reduce_with_rng<R: Rng + ?Sized>(p: &Partition, rng: &mut R) -> Partition {
    let mut cur = p.clone();
    loop {
        let moves = applicable_moves(&cur);
        match moves.choose(rng) {
            Some(m) => cur = m.apply(&cur),
            None => return cur,
        }
    }
}

/// Runs `trials` random reduction orders and checks they all end at the
/// deterministic result of [`reduce`].
pub fn confluence_check(p: &Partition, trials: usize, seed: u64) -> bool {
    let expected = reduce(p).result;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).all(|_| reduce_with_rng(p, &mut rng) == expected)
}
