use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Where a partition stands with respect to the reduction moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramClass {
    /// The empty diagram, end point of every genus 0 reduction.
    Empty,
    Primitive,
    Semiprimitive,
    /// Some move still applies.
    Reducible,
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramClass::Empty => "empty",
            DiagramClass::Primitive => "primitive",
            DiagramClass::Semiprimitive => "semiprimitive",
            DiagramClass::Reducible => "reducible",
        })
    }
}

impl DiagramClass {
    pub fn is_fixed_point(self) -> bool {
        self != DiagramClass::Reducible
    }
}

/// Classifies from τ (0-based images), the block of each element and the
/// block sizes.
///
/// Faces are read off σ⁻¹∘τ, which is conjugate to σ∘τ⁻¹ by τ; a cycle
/// `(i j)` of σ⁻¹∘τ is a parallel pair between the blocks of `i` and `j`.
pub(crate) fn classify_arrays(next: &[u32], block_of: &[u32], block_size: impl Fn(usize) -> usize) -> DiagramClass {
    let n = next.len();
    if n == 0 {
        return DiagramClass::Empty;
    }
    if (0..n).any(|i| next[i] as usize == i) {
        return DiagramClass::Reducible;
    }
    let step = |i: usize| {
        let j = next[i] as usize;
        if j == 0 {
            n - 1
        } else {
            j - 1
        }
    };
    let mut seen = vec![false; n];
    let mut parallel = false;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = step(i);
        }
        match len {
            1 => return DiagramClass::Reducible,
            2 => {
                let a = block_size(block_of[start] as usize);
                let b = block_size(block_of[step(start)] as usize);
                if a == 2 || b == 2 {
                    return DiagramClass::Reducible;
                }
                parallel = true;
            }
            _ => {}
        }
    }
    if parallel {
        DiagramClass::Semiprimitive
    } else {
        DiagramClass::Primitive
    }
}

pub fn classify(p: &Partition) -> DiagramClass {
    if p.is_empty() {
        return DiagramClass::Empty;
    }
    let labels: Vec<u32> = p.block_index().into_iter().map(|b| b as u32).collect();
    classify_arrays(&p.tau_images(), &labels, |b| p.parts()[b].len())
}

/// τ has no fixed point and σ∘τ⁻¹ has neither 1-cycles nor 2-cycles.
pub fn is_primitive(p: &Partition) -> bool {
    classify(p) == DiagramClass::Primitive
}

/// Not primitive, no singletons, no 1-cycles of σ∘τ⁻¹, and every 2-cycle of
/// σ∘τ⁻¹ joins two parts of size at least 3.
pub fn is_semiprimitive(p: &Partition) -> bool {
    classify(p) == DiagramClass::Semiprimitive
}
