use alloc::{collections::BTreeMap, format, vec, vec::Vec};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{build_table_a, build_table_s, RowLabel, SpinCharacterTable};
use crate::covergroup::{class_of, label_word, ClassLabel, Group, Word};
use crate::error::{Error, Result};
use crate::exactnum::{CycNum, Rational};
use crate::partitions::Parity;

/// The S̃_m and Ã_m tables of one block of a parabolic subgroup.
#[derive(Clone, Debug)]
pub struct BlockTables {
    pub s: SpinCharacterTable,
    pub a: SpinCharacterTable,
}

impl BlockTables {
    pub fn build(m: u32) -> Result<Self> {
        let s = build_table_s(m)?;
        let a = build_table_a(&s)?;
        Ok(BlockTables { s, a })
    }

    pub fn from_tables(s: SpinCharacterTable, a: SpinCharacterTable) -> Result<Self> {
        if s.group() != Group::S || a.group() != Group::A || s.n() != a.n() {
            return Err(Error::Precondition(format!("mismatched block tables")));
        }
        Ok(BlockTables { s, a })
    }

    pub fn m(&self) -> u32 {
        self.s.n()
    }
}

/// What the reduced Clifford product needs to know about one factor at one
/// element: φ_i(π_i), and Δ_i(π_i) for self-associate factors at even π_i.
#[derive(Clone, Debug)]
pub struct FactorValue {
    pub self_associate: bool,
    pub odd: bool,
    pub phi: CycNum,
    pub delta: Option<CycNum>,
}

/// Character of a reduced Clifford product at π_1 ⋯ π_l.
///
/// With s the number of non-self-associate factors: if every π_j is even the
/// value is 2^{⌊s/2⌋} Π φ_j(π_j); if s is odd, the self-associate π_j are even
/// and the others odd, it is (2i)^{⌊s/2⌋} Π Δ_j(π_j) Π φ_j(π_j) (global sign
/// fixed to +); otherwise 0.
pub fn reduced_product_char(factors: &[FactorValue]) -> CycNum {
    let s = factors.iter().filter(|f| !f.self_associate).count() as u32;
    if factors.iter().all(|f| !f.odd) {
        let two = CycNum::from_i64(1 << (s / 2));
        return factors.iter().fold(two, |acc, f| &acc * &f.phi);
    }
    let pattern = factors.iter().all(|f| f.odd != f.self_associate);
    if s % 2 == 1 && pattern {
        let two_i = (&CycNum::from_i64(2) * &CycNum::i()).pow(s / 2);
        return factors.iter().fold(two_i, |acc, f| {
            if f.self_associate {
                &acc * f.delta.as_ref().expect("Δ of an even self-associate factor")
            } else {
                &acc * &f.phi
            }
        });
    }
    CycNum::zero()
}

/// Classes of S̃_m refined so that both φ and Δ are constant on them: the
/// Ã_m classes for even elements and the S̃_m classes for odd ones.
pub fn fine_classes(block: &BlockTables) -> Vec<(ClassLabel, BigUint)> {
    let even = block.a.classes().iter().cloned().zip(block.a.sizes().iter().cloned());
    let odd = block
        .s
        .classes()
        .iter()
        .cloned()
        .zip(block.s.sizes().iter().cloned())
        .filter(|(c, _)| c.cycle_type.perm_parity() == Parity::Odd);
    even.chain(odd).collect()
}

/// φ_{λ_1} ×_c ⋯ ×_c φ_{λ_l} on the parabolic subgroup S̃_β, β = (|λ_1|, …).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicCharacter {
    pub factors: Vec<RowLabel>,
}

impl ParabolicCharacter {
    pub fn new(factors: Vec<RowLabel>) -> Self {
        ParabolicCharacter { factors }
    }

    pub fn composition(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.lambda.n()).collect()
    }

    pub fn n(&self) -> u32 {
        self.composition().iter().sum()
    }

    pub fn factor_value(block: &BlockTables, row: &RowLabel, fine: &ClassLabel) -> Result<FactorValue> {
        let self_associate = !row.lambda.is_odd();
        let s_label = fine.to_s();
        let phi = block.s.value(row, &s_label)?.clone();
        let odd = fine.cycle_type.perm_parity() == Parity::Odd;
        let delta = if self_associate && !odd { Some(block.a.delta(&row.lambda, fine)?) } else { None };
        Ok(FactorValue { self_associate, odd, phi, delta })
    }

    pub fn value(&self, blocks: &[&BlockTables], fine: &[ClassLabel]) -> Result<CycNum> {
        if blocks.len() != self.factors.len() || fine.len() != self.factors.len() {
            return Err(Error::Precondition(format!("one block table and one class per factor")));
        }
        let vals = self
            .factors
            .iter()
            .zip(blocks)
            .zip(fine)
            .map(|((row, b), c)| Self::factor_value(b, row, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(reduced_product_char(&vals))
    }

    /// The element π_1 ⋯ π_l of S̃_n built from the blocks' representatives.
    pub fn element_word(&self, fine: &[ClassLabel]) -> Word {
        let n = self.n() as u8;
        let mut gens = Vec::new();
        let mut z = false;
        let mut offset = 0u8;
        for (c, m) in fine.iter().zip(self.composition()) {
            let w = label_word(c);
            gens.extend(w.gens.iter().map(|j| j + offset));
            z ^= w.z;
            offset += m as u8;
        }
        Word::new(n, gens, z)
    }
}

/// Multiplicities of the irreducible spin characters of S̃_n in the
/// character induced from a reduced Clifford product, by Frobenius
/// reciprocity over the fine classes of the blocks.
pub fn induce_and_decompose(
    pc: &ParabolicCharacter,
    blocks: &[&BlockTables],
    table: &SpinCharacterTable,
) -> Result<BTreeMap<RowLabel, Rational>> {
    if table.group() != Group::S || table.n() != pc.n() {
        return Err(Error::Precondition(format!("the induced character needs the S̃_{} table", pc.n())));
    }
    if blocks.iter().zip(pc.composition()).any(|(b, m)| b.m() != m) {
        return Err(Error::Precondition(format!("block tables do not match the composition")));
    }
    let lists: Vec<Vec<(ClassLabel, BigUint)>> = blocks.iter().map(|b| fine_classes(b)).collect();
    let mut sums = vec![CycNum::zero(); table.rows().len()];
    let mut idx = vec![0usize; lists.len()];
    'outer: loop {
        let fine: Vec<ClassLabel> = idx.iter().zip(&lists).map(|(&i, l)| l[i].0.clone()).collect();
        let f = pc.value(blocks, &fine)?;
        if !f.is_zero() {
            let weight: BigUint = idx.iter().zip(&lists).map(|(&i, l)| l[i].1.clone()).product();
            let g = pc.element_word(&fine).evaluate();
            let c = table
                .class_index(&class_of(&g, Group::S)?)
                .ok_or_else(|| Error::Internal(format!("product class missing from the table")))?;
            let fw = f.scale(&Rational::from_integer(weight.into()));
            for (acc, row) in sums.iter_mut().zip(table.rows()) {
                if !row.values[c].is_zero() {
                    *acc = &*acc + &(&fw * &row.values[c].conjugate());
                }
            }
        }
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    // |H| = 2 Π m_k!, and S̃_{m_1} × ⋯ × S̃_{m_l} covers H 2^{l−1} times
    let h: BigUint = pc.composition().iter().map(|&m| (1..=m).map(BigUint::from).product::<BigUint>()).product();
    let denom = h << pc.factors.len();
    let mut out = BTreeMap::new();
    for (acc, row) in sums.into_iter().zip(table.rows()) {
        let m = acc
            .scale(&Rational::new(One::one(), denom.clone().into()))
            .to_rational()
            .filter(|q| q.is_integer() && *q >= Rational::zero())
            .ok_or_else(|| Error::Internal(format!("multiplicity of {} is not a natural number", row.label)))?;
        if !m.is_zero() {
            out.insert(row.label.clone(), m);
        }
    }
    Ok(out)
}
