//! Spin character tables of S̃_n and Ã_n, reduced Clifford products of
//! parabolic factors, and induction back to S̃_n.

mod build;
mod product;

pub use build::{basic_spin_sign, build_table, build_table_a, build_table_s};
pub use product::{fine_classes, induce_and_decompose, reduced_product_char, BlockTables, FactorValue, ParabolicCharacter};

use alloc::{format, string::String, vec::Vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::covergroup::{group_order, ClassLabel, Group};
use crate::error::{Error, Result};
use crate::exactnum::{CycNum, Rational};
use crate::partitions::{Parity, Sign, StrictPartition};

/// Which member of an associate pair a row is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Assoc {
    Plain,
    Plus,
    Minus,
}

impl Assoc {
    pub fn symbol(self) -> &'static str {
        match self {
            Assoc::Plain => "plain",
            Assoc::Plus => "+",
            Assoc::Minus => "-",
        }
    }

    pub fn swap(self) -> Assoc {
        match self {
            Assoc::Plain => Assoc::Plain,
            Assoc::Plus => Assoc::Minus,
            Assoc::Minus => Assoc::Plus,
        }
    }
}

impl FromStr for Assoc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "" | "plain" | "0" => Ok(Assoc::Plain),
            "+" | "plus" => Ok(Assoc::Plus),
            "-" | "minus" => Ok(Assoc::Minus),
            other => Err(Error::Parse(format!("unknown associate {other:?} (expected plain, + or -)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowLabel {
    pub lambda: StrictPartition,
    pub assoc: Assoc,
}

impl RowLabel {
    pub fn new(lambda: StrictPartition, assoc: Assoc) -> Self {
        RowLabel { lambda, assoc }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.assoc {
            Assoc::Plain => write!(f, "{}", self.lambda),
            a => write!(f, "{}{}", self.lambda, a.symbol()),
        }
    }
}

/// Rows present for λ in the given group: one for self-associate labels,
/// an associate pair otherwise. (In Ã_n the roles of DP^+ and DP^− swap.)
pub fn row_assocs(group: Group, n: u32, lambda: &StrictPartition) -> &'static [Assoc] {
    let paired = match group {
        Group::S => lambda.is_odd(),
        Group::A => !lambda.is_odd() && n >= 2,
    };
    if paired {
        &[Assoc::Plus, Assoc::Minus]
    } else {
        &[Assoc::Plain]
    }
}

/// c_λ = √2 for λ ∈ DP^−, 1 otherwise.
pub fn c_lambda(lambda: &StrictPartition) -> CycNum {
    if lambda.is_odd() {
        CycNum::sqrt2()
    } else {
        CycNum::one()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub label: RowLabel,
    pub values: Vec<CycNum>,
}

/// A complete table of irreducible spin characters, columns in the order of
/// [`crate::covergroup::classes`].
#[derive(Clone, Debug, PartialEq)]
pub struct SpinCharacterTable {
    group: Group,
    n: u32,
    classes: Vec<ClassLabel>,
    sizes: Vec<BigUint>,
    rows: Vec<Row>,
}

impl SpinCharacterTable {
    /// Assemble a table from stored parts; the result is checked with
    /// [`SpinCharacterTable::verify`].
    pub fn from_parts(group: Group, n: u32, classes: Vec<ClassLabel>, sizes: Vec<BigUint>, rows: Vec<Row>) -> Result<Self> {
        let t = Self::unchecked(group, n, classes, sizes, rows)?;
        t.verify()?;
        Ok(t)
    }

    pub(crate) fn unchecked(group: Group, n: u32, classes: Vec<ClassLabel>, sizes: Vec<BigUint>, rows: Vec<Row>) -> Result<Self> {
        if classes.len() != sizes.len() || rows.iter().any(|r| r.values.len() != classes.len()) {
            return Err(Error::Precondition(String::from("table dimensions disagree")));
        }
        if classes != crate::covergroup::classes(group, n) {
            return Err(Error::Precondition(format!("class list does not match {}_{n}", group.letter())));
        }
        Ok(SpinCharacterTable { group, n, classes, sizes, rows })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn sizes(&self) -> &[BigUint] {
        &self.sizes
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn order(&self) -> BigUint {
        group_order(self.group, self.n)
    }

    pub fn class_index(&self, label: &ClassLabel) -> Option<usize> {
        self.classes.binary_search_by(|c| class_order(c, label)).ok().or_else(|| self.classes.iter().position(|c| c == label))
    }

    pub fn row_index(&self, label: &RowLabel) -> Option<usize> {
        self.rows.iter().position(|r| &r.label == label)
    }

    pub fn row(&self, label: &RowLabel) -> Result<&Row> {
        self.row_index(label).map(|i| &self.rows[i]).ok_or_else(|| {
            Error::InvalidRow(format!("{label} is not a row of the {}_{} table", self.group.letter(), self.n))
        })
    }

    pub fn value(&self, row: &RowLabel, class: &ClassLabel) -> Result<&CycNum> {
        let r = self.row(row)?;
        let c = self
            .class_index(class)
            .ok_or_else(|| Error::InvalidLabel(format!("{class} is not a class of {}_{}", self.group.letter(), self.n)))?;
        Ok(&r.values[c])
    }

    pub fn degree(&self, row: &RowLabel) -> Result<u64> {
        let id = self.identity_index();
        let v = &self.row(row)?.values[id];
        v.to_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| num_traits::ToPrimitive::to_u64(q.numer()))
            .ok_or_else(|| Error::Internal(format!("degree of {row} is not a natural number")))
    }

    pub fn identity_index(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.cycle_type.parts().iter().all(|&p| p == 1) && c.z_sign != Some(Sign::Minus))
            .expect("identity class")
    }

    /// Δ_λ = φ_λ^+ − φ_λ^− on an Ã_n table; for n = 1, where the restriction
    /// does not split, Δ is the character itself.
    pub fn delta(&self, lambda: &StrictPartition, class: &ClassLabel) -> Result<CycNum> {
        if self.group != Group::A {
            return Err(Error::Precondition(String::from("Δ lives on the alternating table")));
        }
        if lambda.is_odd() {
            return Err(Error::InvalidRow(format!("{lambda} is not self-associate")));
        }
        if self.n == 1 {
            return Ok(self.value(&RowLabel::new(lambda.clone(), Assoc::Plain), class)?.clone());
        }
        let plus = self.value(&RowLabel::new(lambda.clone(), Assoc::Plus), class)?;
        let minus = self.value(&RowLabel::new(lambda.clone(), Assoc::Minus), class)?;
        Ok(plus - minus)
    }

    /// ⟨χ, ψ⟩ = |G|⁻¹ Σ |C| χ(C) ψ(C)‾.
    pub fn inner_product(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero();
        for ((x, y), size) in a.iter().zip(b).zip(&self.sizes) {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc = acc + (x * &y.conjugate()).scale(&Rational::from_integer(size.clone().into()));
        }
        acc.scale(&Rational::new(One::one(), self.order().into()))
    }

    /// All exact self-checks: orthonormality of rows, the spin column
    /// relations, support, z-antisymmetry, associate symmetry and degrees.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Internal(format!("{}_{}: {what}", self.group.letter(), self.n)));
        let expected_rows: usize = crate::partitions::strict_partitions(self.n)
            .iter()
            .map(|l| row_assocs(self.group, self.n, l).len())
            .sum();
        if self.rows.len() != expected_rows {
            return fail(format!("{} rows, expected {expected_rows}", self.rows.len()));
        }
        for (i, a) in self.rows.iter().enumerate() {
            for b in &self.rows[i..] {
                let ip = self.inner_product(&a.values, &b.values);
                let want = if a.label == b.label { CycNum::one() } else { CycNum::zero() };
                if ip != want {
                    return fail(format!("⟨{}, {}⟩ = {ip}", a.label, b.label));
                }
            }
            self.degree(&a.label)?;
        }
        let order = self.order();
        for (c, cl) in self.classes.iter().enumerate() {
            let zc = cl.times_z();
            let zi = self.class_index(&zc).expect("z-image of a class");
            for row in &self.rows {
                if row.values[zi] != -&row.values[c] {
                    return fail(format!("{} is not odd under z at {cl}", row.label));
                }
            }
            if self.group == Group::S {
                let mu = &cl.cycle_type;
                let supported = mu.is_all_odd() || (mu.is_strict() && mu.even_part_count() % 2 == 1);
                if !supported && self.rows.iter().any(|r| !r.values[c].is_zero()) {
                    return fail(format!("non-zero value off OP ∪ DP^− at {cl}"));
                }
            }
            let centralizer = &order / &self.sizes[c];
            for (d, dl) in self.classes.iter().enumerate().skip(c) {
                let mut sum = CycNum::zero();
                for row in &self.rows {
                    sum = sum + &row.values[c] * &row.values[d].conjugate();
                }
                let mut want = Rational::zero();
                if c == d && zi != c {
                    want += Rational::new(centralizer.clone().into(), 2.into());
                }
                if d == zi && zi != c {
                    want -= Rational::new(centralizer.clone().into(), 2.into());
                }
                if sum != CycNum::from_rational(want) {
                    return fail(format!("column relation at ({cl}, {dl}) gives {sum}"));
                }
            }
        }
        if self.group == Group::S {
            for row in self.rows.iter().filter(|r| r.label.assoc == Assoc::Plus) {
                let other = self.row(&RowLabel::new(row.label.lambda.clone(), Assoc::Minus))?;
                for (c, cl) in self.classes.iter().enumerate() {
                    let want = match cl.cycle_type.perm_parity() {
                        Parity::Even => row.values[c].clone(),
                        Parity::Odd => -&row.values[c],
                    };
                    if other.values[c] != want {
                        return fail(format!("associates of {} disagree at {cl}", row.label.lambda));
                    }
                }
            }
        }
        Ok(())
    }
}

fn class_order(a: &ClassLabel, b: &ClassLabel) -> core::cmp::Ordering {
    // the enumeration order: cycle types reverse-lexicographic, then sign, then tag
    b.cycle_type
        .parts()
        .cmp(a.cycle_type.parts())
        .then_with(|| a.z_sign.cmp(&b.z_sign))
        .then_with(|| a.alt.cmp(&b.alt))
}
