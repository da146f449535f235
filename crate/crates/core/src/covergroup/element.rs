use alloc::{string::String, vec::Vec};
use core::fmt;

use super::perm::Perm;
use crate::partitions::Parity;

/// A word in the generators t_1 … t_{n−1} of S̃_n, optionally times z.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub n: u8,
    pub gens: Vec<u8>,
    pub z: bool,
}

impl Word {
    pub fn new(n: u8, gens: Vec<u8>, z: bool) -> Word {
        debug_assert!(gens.iter().all(|&j| j >= 1 && j < n));
        Word { n, gens, z }
    }

    pub fn identity(n: u8) -> Word {
        Word { n, gens: Vec::new(), z: false }
    }

    pub fn times_z(mut self) -> Word {
        self.z = !self.z;
        self
    }

    pub fn pow(&self, i: u32) -> Word {
        let mut gens = Vec::with_capacity(self.gens.len() * i as usize);
        for _ in 0..i {
            gens.extend_from_slice(&self.gens);
        }
        Word { n: self.n, gens, z: self.z && i % 2 == 1 }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Word { n: self.n, gens, z: self.z ^ other.z }
    }

    pub fn evaluate(&self) -> CoverElement {
        let g = CoverElement::identity(self.n).mul_word(&self.gens);
        if self.z {
            g.neg()
        } else {
            g
        }
    }
}

/// An element of S̃_n realized in the real Clifford algebra on e_1 … e_n
/// (e_i² = −1, e_i e_j = −e_j e_i), with t_j = (e_j − e_{j+1})/√2 and z = −1.
///
/// Coefficients are m / √2^exp with integer m and a common exponent; the
/// representation is normalized (no common factor 2 while exp ≥ 2) so that
/// equal elements compare equal structurally. Bit i−1 of a mask stands for e_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverElement {
    n: u8,
    perm: Perm,
    exp: u32,
    terms: Vec<(u32, i64)>,
}

// Sign of e_S · e_T = ± e_{S △ T}: one factor −1 per inversion, one per shared index.
#[inline]
fn monomial_sign(s: u32, t: u32) -> bool {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (s >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    (inversions + (s & t).count_ones()) % 2 == 1
}

impl CoverElement {
    pub fn identity(n: u8) -> Self {
        CoverElement { n, perm: Perm::identity(n as usize), exp: 0, terms: alloc::vec![(0, 1)] }
    }

    /// The central element z, realized as −1.
    pub fn z(n: u8) -> Self {
        Self::identity(n).neg()
    }

    /// t_j, 1 ≤ j < n.
    pub fn generator(n: u8, j: u8) -> Self {
        Self::identity(n).mul_generator(j)
    }

    pub fn from_word(n: u8, gens: &[u8]) -> Self {
        Self::identity(n).mul_word(gens)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// The permutation π(g) through which g permutes the lines through e_i.
    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn terms(&self) -> &[(u32, i64)] {
        &self.terms
    }

    pub fn parity(&self) -> Parity {
        self.perm.parity()
    }

    pub fn is_identity(&self) -> bool {
        self.terms == [(0, 1)] && self.exp == 0
    }

    pub fn is_minus_identity(&self) -> bool {
        self.terms == [(0, -1)] && self.exp == 0
    }

    /// The coefficient of the empty monomial, as (m, exp) meaning m/√2^exp.
    pub fn scalar_part(&self) -> (i64, u32) {
        match self.terms.first() {
            Some(&(0, c)) => (c, self.exp),
            _ => (0, self.exp),
        }
    }

    pub fn neg(&self) -> Self {
        let mut g = self.clone();
        for t in &mut g.terms {
            t.1 = -t.1;
        }
        g
    }

    /// +1 if self = other, −1 if self = z·other, None otherwise.
    pub fn sign_relative_to(&self, other: &Self) -> Option<i8> {
        if self.exp != other.exp || self.terms.len() != other.terms.len() {
            return None;
        }
        if self.terms == other.terms {
            return Some(1);
        }
        let negated = self.terms.iter().zip(&other.terms).all(|(a, b)| a.0 == b.0 && a.1 == -b.1);
        negated.then_some(-1)
    }

    fn finish(n: u8, perm: Perm, mut exp: u32, mut raw: Vec<(u32, i64)>) -> Self {
        raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(u32, i64)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        while exp >= 2 && terms.iter().all(|t| t.1 % 2 == 0) {
            for t in &mut terms {
                t.1 /= 2;
            }
            exp -= 2;
        }
        CoverElement { n, perm, exp, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "elements of different covers");
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(s, a) in &self.terms {
            for &(t, b) in &other.terms {
                let c = a.checked_mul(b).expect("Clifford coefficient overflow");
                raw.push((s ^ t, if monomial_sign(s, t) { -c } else { c }));
            }
        }
        Self::finish(self.n, self.perm.compose(&other.perm), self.exp + other.exp, raw)
    }

    /// self · t_j.
    pub fn mul_generator(&self, j: u8) -> Self {
        assert!(j >= 1 && j < self.n, "generator t_{j} outside S̃_{}", self.n);
        let (a, b) = (1u32 << (j - 1), 1u32 << j);
        let mut raw = Vec::with_capacity(2 * self.terms.len());
        for &(s, c) in &self.terms {
            raw.push((s ^ a, if monomial_sign(s, a) { -c } else { c }));
            raw.push((s ^ b, if monomial_sign(s, b) { c } else { -c }));
        }
        let perm = self.perm.compose(&Perm::adjacent(self.n as usize, j as usize - 1));
        Self::finish(self.n, perm, self.exp + 1, raw)
    }

    pub fn mul_word(&self, gens: &[u8]) -> Self {
        gens.iter().fold(self.clone(), |g, &j| g.mul_generator(j))
    }

    /// t_j · self · t_j⁻¹. Each e_i goes to −e_{s_j(i)}, so this is a signed
    /// relabelling of monomials.
    pub fn conjugate_by_generator(&self, j: u8) -> Self {
        let (a, b) = (1u32 << (j - 1), 1u32 << j);
        let raw = self
            .terms
            .iter()
            .map(|&(s, c)| {
                let both = s & a != 0 && s & b != 0;
                let neg = (s.count_ones() % 2 == 1) ^ both;
                let swapped = if (s & a != 0) != (s & b != 0) { s ^ a ^ b } else { s };
                (swapped, if neg { -c } else { c })
            })
            .collect();
        let sj = Perm::adjacent(self.n as usize, j as usize - 1);
        Self::finish(self.n, sj.compose(&self.perm).compose(&sj), self.exp, raw)
    }

    /// h · self · h⁻¹ for h the element of the given generator word.
    pub fn conjugate_by_word(&self, gens: &[u8]) -> Self {
        gens.iter().rev().fold(self.clone(), |g, &j| g.conjugate_by_generator(j))
    }

    /// g⁻¹ = (−1)^{parity} · reverse(g) for products of unit vectors.
    pub fn inverse(&self) -> Self {
        let odd = self.parity() == Parity::Odd;
        let terms = self
            .terms
            .iter()
            .map(|&(s, c)| {
                let k = s.count_ones();
                let flip = odd ^ ((k * k.saturating_sub(1) / 2) % 2 == 1);
                (s, if flip { -c } else { c })
            })
            .collect();
        CoverElement { n: self.n, perm: self.perm.inverse(), exp: self.exp, terms }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for CoverElement {
    /// Signed sum of e-monomials over the common √2 power, e.g. `(e1 - e2)/√2^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for (k, &(s, c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                body.push(' ');
            }
            body.push_str(sign);
            if k > 0 {
                body.push(' ');
            }
            let mono: Vec<String> = (0..32).filter(|i| s & (1 << i) != 0).map(|i| alloc::format!("e{}", i + 1)).collect();
            let mag = c.unsigned_abs();
            match (mag, mono.is_empty()) {
                (m, true) => body.push_str(&alloc::format!("{m}")),
                (1, false) => body.push_str(&mono.join("")),
                (m, false) => body.push_str(&alloc::format!("{m}{}", mono.join(""))),
            }
        }
        if self.exp == 0 {
            f.write_str(&body)
        } else {
            write!(f, "({body})/√2^{}", self.exp)
        }
    }
}
