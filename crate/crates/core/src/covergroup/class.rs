use alloc::{string::String, vec, vec::Vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use super::element::{CoverElement, Word};
use crate::error::{Error, Result};
use crate::partitions::{partitions, Parity, Partition, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    /// The double cover S̃_n.
    S,
    /// Its index-two subgroup Ã_n, the preimage of A_n.
    A,
}

impl Group {
    pub fn letter(self) -> char {
        match self {
            Group::S => 'S',
            Group::A => 'A',
        }
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "s" => Ok(Group::S),
            "A" | "a" => Ok(Group::A),
            other => Err(Error::Parse(alloc::format!("unknown group {other:?} (expected S or A)"))),
        }
    }
}

/// Which of the two Ã_n classes an S̃_n class of type λ ∈ DP^+ splits into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AltTag {
    A,
    B,
}

impl AltTag {
    pub fn flip(self) -> AltTag {
        match self {
            AltTag::A => AltTag::B,
            AltTag::B => AltTag::A,
        }
    }

    fn from_bit(b: bool) -> AltTag {
        if b {
            AltTag::B
        } else {
            AltTag::A
        }
    }

    pub fn symbol(self) -> char {
        match self {
            AltTag::A => 'a',
            AltTag::B => 'b',
        }
    }
}

/// A conjugacy class of S̃_n or Ã_n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub group: Group,
    pub cycle_type: Partition,
    pub z_sign: Option<Sign>,
    pub alt: Option<AltTag>,
}

/// Does the S̃_n class of this type split into C^+ and C^− = zC^+?
pub fn splits_in_s(mu: &Partition) -> bool {
    mu.splits_in_double_cover()
}

/// Does the (even) type split into two classes of Ã_n?
pub fn splits_in_a(mu: &Partition) -> bool {
    mu.n() >= 2 && mu.is_strict() && mu.even_part_count() % 2 == 0
}

impl ClassLabel {
    pub fn new(group: Group, cycle_type: Partition, z_sign: Option<Sign>, alt: Option<AltTag>) -> Result<Self> {
        let label = ClassLabel { group, cycle_type, z_sign, alt };
        label.validate()?;
        Ok(label)
    }

    pub fn n(&self) -> u32 {
        self.cycle_type.n()
    }

    fn validate(&self) -> Result<()> {
        let mu = &self.cycle_type;
        let bad = |why: &str| Err(Error::InvalidLabel(alloc::format!("{self}: {why}")));
        if mu.is_empty() {
            return bad("empty cycle type");
        }
        let split = match self.group {
            Group::S => splits_in_s(mu),
            Group::A => {
                if mu.perm_parity() == Parity::Odd {
                    return bad("odd permutations are not in the alternating cover");
                }
                // the z-split even classes of S̃_n are exactly those with all parts odd
                mu.is_all_odd()
            }
        };
        if split != self.z_sign.is_some() {
            return bad(if split { "this class needs a sign" } else { "this class does not split under z" });
        }
        let alt_split = self.group == Group::A && splits_in_a(mu);
        if alt_split != self.alt.is_some() {
            return bad(if alt_split { "this class needs an a/b tag" } else { "no a/b split for this class" });
        }
        Ok(())
    }

    /// The same class with z applied: flips the sign of a split class, or
    /// swaps the a/b halves of a non-z-split Ã class.
    pub fn times_z(&self) -> ClassLabel {
        let mut l = self.clone();
        match (l.z_sign, l.alt) {
            (Some(s), _) => l.z_sign = Some(s.flip()),
            (None, Some(a)) => l.alt = Some(a.flip()),
            (None, None) => {}
        }
        l
    }

    /// The S̃_n class containing this Ã_n class.
    pub fn to_s(&self) -> ClassLabel {
        ClassLabel { group: Group::S, cycle_type: self.cycle_type.clone(), z_sign: self.z_sign, alt: None }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_type)?;
        if let Some(s) = self.z_sign {
            write!(f, "{}", s.symbol())?;
        }
        if let Some(a) = self.alt {
            write!(f, "{}", a.symbol())?;
        }
        Ok(())
    }
}

/// All classes of the group, cycle types in reverse lexicographic order,
/// then + before −, then a before b.
pub fn classes(group: Group, n: u32) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for mu in partitions(n) {
        if group == Group::A && mu.perm_parity() == Parity::Odd {
            continue;
        }
        let signs: Vec<Option<Sign>> = match group {
            Group::S if splits_in_s(&mu) => vec![Some(Sign::Plus), Some(Sign::Minus)],
            Group::A if mu.is_all_odd() => vec![Some(Sign::Plus), Some(Sign::Minus)],
            _ => vec![None],
        };
        let alts: Vec<Option<AltTag>> = if group == Group::A && splits_in_a(&mu) {
            vec![Some(AltTag::A), Some(AltTag::B)]
        } else {
            vec![None]
        };
        for &z in &signs {
            for &a in &alts {
                out.push(ClassLabel { group, cycle_type: mu.clone(), z_sign: z, alt: a });
            }
        }
    }
    out
}

/// The generator word of σ_α^+: one run t_{s+1} ⋯ t_{s+α_j−1} per part.
pub fn canonical_word(alpha: &Partition) -> Word {
    let mut gens = Vec::new();
    let mut s = 0u32;
    for &p in alpha.parts() {
        gens.extend((s + 1..s + p).map(|j| j as u8));
        s += p;
    }
    Word::new(alpha.n() as u8, gens, false)
}

/// The word of the fixed representative of a class: σ_α^±, and for the
/// b-half of a split Ã class, its conjugate by t_1.
pub fn label_word(label: &ClassLabel) -> Word {
    let base = canonical_word(&label.cycle_type);
    let base = if label.alt == Some(AltTag::B) {
        // t_1 σ t_1⁻¹ = t_1 σ t_1 z
        let n = base.n;
        Word::new(n, vec![1], false).concat(&base).concat(&Word::new(n, vec![1], true))
    } else {
        base
    };
    if label.z_sign == Some(Sign::Minus) {
        base.times_z()
    } else {
        base
    }
}

/// σ_α^±, or σ_α when the type does not split.
pub fn canonical_rep(alpha: &Partition, sign: Option<Sign>) -> Result<CoverElement> {
    if alpha.is_empty() {
        return Err(Error::InvalidLabel(String::from("empty cycle type")));
    }
    if sign.is_some() != splits_in_s(alpha) {
        return Err(Error::InvalidLabel(alloc::format!(
            "sign {} given for type {alpha}",
            sign.map_or(String::from("none"), |s| String::from(s.symbol()))
        )));
    }
    let w = canonical_word(alpha);
    Ok(if sign == Some(Sign::Minus) { w.times_z() } else { w }.evaluate())
}

pub fn label_rep(label: &ClassLabel) -> CoverElement {
    label_word(label).evaluate()
}

/// The class of g in S̃_n or Ã_n.
///
/// The cycle type comes from π(g). For split types a permutation p with
/// p π(g) p⁻¹ = π(σ_μ^+) is lifted along its bubble-sort word to h, and
/// h g h⁻¹ is compared with ±σ_μ^+. For the a/b split in Ã_n the parity of
/// p enters as well (combined with the z-sign when the type is not all odd).
pub fn class_of(g: &CoverElement, group: Group) -> Result<ClassLabel> {
    let mu = g.perm().cycle_type();
    if group == Group::A && mu.perm_parity() == Parity::Odd {
        return Err(Error::Precondition(alloc::format!("element of type {mu} is not in the alternating cover")));
    }
    let z_split = match group {
        Group::S => splits_in_s(&mu),
        Group::A => mu.is_all_odd(),
    };
    let alt_split = group == Group::A && splits_in_a(&mu);
    if !z_split && !alt_split {
        return Ok(ClassLabel { group, cycle_type: mu, z_sign: None, alt: None });
    }
    let target = canonical_word(&mu).evaluate();
    let p = g
        .perm()
        .conjugator_to(target.perm())
        .ok_or_else(|| Error::Internal(String::from("cycle types disagree")))?;
    let conj = g.conjugate_by_word(&p.bubble_word());
    let s_odd = match conj.sign_relative_to(&target) {
        Some(1) => false,
        Some(_) => true,
        None => {
            return Err(Error::Internal(alloc::format!(
                "conjugate of an element of type {mu} is not ±σ_μ^+"
            )))
        }
    };
    let p_odd = p.parity() == Parity::Odd;
    let z_sign = z_split.then(|| Sign::from_bit(s_odd));
    let alt = alt_split.then(|| AltTag::from_bit(if mu.is_all_odd() { p_odd } else { p_odd ^ s_odd }));
    Ok(ClassLabel { group, cycle_type: mu, z_sign, alt })
}

/// The class of g^i for g the representative of the label.
pub fn power_class(label: &ClassLabel, i: u32) -> Result<ClassLabel> {
    class_of(&label_word(label).pow(i).evaluate(), label.group)
}

/// ε(μ): + if (σ_μ^+)^{lcm μ} = 1, − if it equals z.
pub fn epsilon(mu: &Partition) -> Sign {
    let k = mu.lcm() as u32;
    let g = canonical_word(mu).pow(k).evaluate();
    if g.is_identity() {
        Sign::Plus
    } else {
        debug_assert!(g.is_minus_identity());
        Sign::Minus
    }
}

/// ε of the class representative itself (σ^− = zσ^+ picks up (−1)^k).
pub fn class_epsilon(label: &ClassLabel) -> Sign {
    let e = epsilon(&label.cycle_type);
    let k = label.cycle_type.lcm();
    if label.z_sign == Some(Sign::Minus) && k % 2 == 1 {
        e.flip()
    } else {
        e
    }
}

/// Element order: lcm(μ) or 2·lcm(μ).
pub fn order(label: &ClassLabel) -> u64 {
    let k = label.cycle_type.lcm();
    match class_epsilon(label) {
        Sign::Plus => k,
        Sign::Minus => 2 * k,
    }
}

pub fn class_size(label: &ClassLabel) -> BigUint {
    let n = label.n();
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    let z = label.cycle_type.z();
    let mut size = if splits_in_s(&label.cycle_type) { fact / z } else { fact * 2u32 / z };
    if label.alt.is_some() {
        size /= 2u32;
    }
    size
}

/// Group order: 2·n! for S̃_n; n! for Ã_n (n ≥ 2).
pub fn group_order(group: Group, n: u32) -> BigUint {
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    match group {
        Group::S => fact * 2u32,
        Group::A if n >= 2 => fact,
        Group::A => fact * 2u32,
    }
}

/// The classes of g^0, g^1, …, g^{d−1} for the representative g of a label
/// of order d.
pub fn power_map(label: &ClassLabel) -> Result<Vec<ClassLabel>> {
    let d = order(label);
    let w = label_word(label);
    let mut g = CoverElement::identity(w.n);
    let mut out = Vec::with_capacity(d as usize);
    for _ in 0..d {
        out.push(class_of(&g, label.group)?);
        g = g.mul_word(&w.gens);
        if w.z {
            g = g.neg();
        }
    }
    debug_assert!(g.is_identity());
    Ok(out)
}
