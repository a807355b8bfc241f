use std::fmt;

/// A bijection of `{1, …, n}`, stored as its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// σ = (1, 2, …, n).
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).map(|i| i % n as u32 + 1).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles covering `1..=n`.
    ///
    /// Panics if the cycles are not a partition of `1..=n`.
    pub fn from_cycles<C: AsRef<[u32]>>(n: usize, cycles: &[C]) -> Self {
        let mut images = vec![0u32; n];
        for cycle in cycles {
            let c = cycle.as_ref();
            for (i, &a) in c.iter().enumerate() {
                let slot = &mut images[a as usize - 1];
                assert_eq!(*slot, 0, "element {a} appears twice");
                *slot = c[(i + 1) % c.len()];
            }
        }
        assert!(images.iter().all(|&v| v != 0), "cycles do not cover 1..={n}");
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// π(i) for 1-based `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.len(), rhs.len());
        Permutation {
            images: rhs.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i as usize - 1] {
                seen[i as usize - 1] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize - 1;
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, a) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(10, &[vec![1, 3, 4, 6, 7], vec![2, 5, 9], vec![8], vec![10]]);
        assert_eq!(p.to_string(), "(1,3,4,6,7)(2,5,9)(8)(10)");
        assert_eq!(p.cycle_count(), 4);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(10));
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let sigma = Permutation::long_cycle(3);
        let swap = Permutation::from_cycles(3, &[vec![1, 2], vec![3]]);
        // σ∘swap: 1 → 2 → 3
        assert_eq!(sigma.compose(&swap).apply(1), 3);
        assert_eq!(swap.compose(&sigma).apply(1), 1);
    }
}
