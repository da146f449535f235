use alloc::{vec, vec::Vec};

use crate::partitions::{Parity, Partition};

/// A permutation of {0, …, n−1} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// The adjacent transposition swapping j and j+1 (0-based).
    pub fn adjacent(n: usize, j: usize) -> Perm {
        let mut p = Self::identity(n);
        p.0.swap(j, j + 1);
        p
    }

    pub fn from_images(images: Vec<u8>) -> Option<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if (i as usize) >= images.len() || core::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// self ∘ other (other acts first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Cycles (including fixed points), each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i as u8);
                i = self.0[i] as usize;
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// A word j_1 … j_k (1-based generator indices) with
    /// s_{j_1} ∘ ⋯ ∘ s_{j_k} = self, read off a left-to-right bubble sort.
    pub fn bubble_word(&self) -> Vec<u8> {
        let mut a = self.0.clone();
        let mut swaps = Vec::new();
        let n = a.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    swaps.push(i as u8 + 1);
                }
            }
        }
        // self ∘ s_{i_1} ∘ ⋯ ∘ s_{i_k} = id
        swaps.reverse();
        swaps
    }

    /// Some p with p ∘ self ∘ p⁻¹ = target, if the cycle types agree.
    pub fn conjugator_to(&self, target: &Perm) -> Option<Perm> {
        let mut mine = self.cycles();
        let mut theirs = target.cycles();
        mine.sort_by_key(|c| core::cmp::Reverse(c.len()));
        theirs.sort_by_key(|c| core::cmp::Reverse(c.len()));
        if mine.len() != theirs.len() {
            return None;
        }
        let mut p = vec![0u8; self.0.len()];
        for (a, b) in mine.iter().zip(theirs.iter()) {
            if a.len() != b.len() {
                return None;
            }
            for (&x, &y) in a.iter().zip(b.iter()) {
                p[x as usize] = y;
            }
        }
        Some(Perm(p))
    }
}
