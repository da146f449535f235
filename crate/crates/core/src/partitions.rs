//! Partitions, strict partitions, and the shifted-diagram constructions used
//! by the tensor-product positivity arguments.

use alloc::{collections::BTreeMap, string::String, vec, vec::Vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qtableaux::{self, Letter, MarkedTableau, ShiftedSkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_bit(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// The classification of a cycle type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionClass {
    pub in_op: bool,
    pub in_dp: bool,
    pub dp_sign: Option<Sign>,
    pub perm_parity: Parity,
    pub lcm: u64,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// (1^n), the cycle type of the identity.
    pub fn ones(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn lcm(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    pub fn is_all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn even_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Parity of any permutation of this cycle type.
    pub fn perm_parity(&self) -> Parity {
        if (self.n() as usize - self.len()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn classify(&self) -> PartitionClass {
        let in_dp = self.is_strict();
        PartitionClass {
            in_op: self.is_all_odd(),
            in_dp,
            dp_sign: in_dp.then(|| Sign::from_bit(self.even_part_count() % 2 == 1)),
            perm_parity: self.perm_parity(),
            lcm: self.lcm(),
        }
    }

    /// OP_n ∪ DP_n^−: the cycle types whose S̃_n class splits.
    pub fn splits_in_double_cover(&self) -> bool {
        let c = self.classify();
        c.in_op || c.dp_sign == Some(Sign::Minus)
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// z_α = Π i^{m_i} m_i!, the centralizer order of a permutation of type α.
    pub fn z(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                acc *= BigUint::from(part) * BigUint::from(k);
            }
        }
        acc
    }

    /// The multiset union (concatenation) of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Exponent notation: `(5,3,1^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `7,5,4`, `(3,1^2)`, `[3,1,1]` and the empty forms `()`/`0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split([',', ' ']).filter(|x| !x.is_empty()) {
            let (base, rep) = match tok.split_once('^') {
                Some((b, r)) => (b, r),
                None => (tok, "1"),
            };
            let bad = || Error::InvalidPartition(String::from(s));
            let base: u32 = base.trim().parse().map_err(|_| bad())?;
            let rep: usize = rep.trim().parse().map_err(|_| bad())?;
            if base == 0 {
                return Err(bad());
            }
            parts.extend(core::iter::repeat(base).take(rep));
        }
        Ok(Partition::new(parts))
    }
}

/// A partition with distinct parts, the labels of spin representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Self::try_from(Partition::new(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn n(&self) -> u32 {
        self.0.n()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part i (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.parts.get(i).copied().unwrap_or(0)
    }

    /// + iff the number of even parts is even (DP^+).
    pub fn dp_sign(&self) -> Sign {
        Sign::from_bit(self.0.even_part_count() % 2 == 1)
    }

    /// "Odd" labels (DP^−) carry a pair of associate representations of S̃_n.
    pub fn is_odd(&self) -> bool {
        self.dp_sign() == Sign::Minus
    }

    /// Containment of shifted diagrams, which for strict partitions is
    /// part-wise comparison.
    pub fn contains(&self, inner: &StrictPartition) -> bool {
        inner.len() <= self.len() && inner.parts().iter().zip(self.parts()).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::InvalidPartition(alloc::format!("{p} has repeated parts")))
        }
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::try_from(s.parse::<Partition>()?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// DP_n in reverse lexicographic order.
pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    partitions(n).into_iter().filter(Partition::is_strict).map(StrictPartition).collect()
}

/// OP_n in reverse lexicographic order.
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    partitions(n).into_iter().filter(Partition::is_all_odd).collect()
}

/// The strict partition formed by the first m cells of λ's shifted diagram,
/// read row by row.
pub fn dominant_partition(lambda: &StrictPartition, m: u32) -> Result<StrictPartition> {
    if m > lambda.n() {
        return Err(Error::Precondition(alloc::format!("m = {m} exceeds |{lambda}|")));
    }
    let mut left = m;
    let mut parts = Vec::new();
    for &p in lambda.parts() {
        if left == 0 {
            break;
        }
        let take = p.min(left);
        parts.push(take);
        left -= take;
    }
    StrictPartition::new(parts)
}

/// Which step of the repair produced each modification, for debug output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepairStep {
    /// Mark the leftmost i, pull the leftmost i+1 up to i.
    Case1 { i: u32 },
    /// The ν_{i−1} = ν_i + 1 branch, including its cascade.
    Case2 { i: u32 },
    /// Column filling did not yield a repairable tableau; searched all strict ν.
    Fallback,
}

#[derive(Clone, Debug)]
pub struct Complement {
    pub nu: StrictPartition,
    pub steps: Vec<RepairStep>,
    /// The witnessing tableau when the constructive path succeeded.
    pub tableau: Option<MarkedTableau>,
}

/// A strict ν of |λ| − |α| with f^λ_{αν} > 0 (constructive repair with
/// exhaustive fallback).
pub fn dominant_complement(lambda: &StrictPartition, alpha: &StrictPartition) -> Result<StrictPartition> {
    dominant_complement_traced(lambda, alpha, true).map(|c| c.nu)
}

/// As [`dominant_complement`], reporting the repair path. With
/// `allow_fallback = false` a failed construction is an error.
pub fn dominant_complement_traced(
    lambda: &StrictPartition,
    alpha: &StrictPartition,
    allow_fallback: bool,
) -> Result<Complement> {
    let m = alpha.n();
    let dominant = dominant_partition(lambda, m.min(lambda.n()))?;
    let hook_like = alpha.len() == 2 && alpha.part(1) == 1 && alpha.part(0) <= lambda.part(0) && lambda.n() > 6;
    if m > lambda.n() || !(dominant == *alpha || hook_like) {
        return Err(Error::Precondition(alloc::format!(
            "{alpha} is neither the dominant partition of {m} in {lambda} nor a (g,1) hook"
        )));
    }
    if !lambda.contains(alpha) {
        return Err(Error::Precondition(alloc::format!("{alpha} is not contained in {lambda}")));
    }
    let shape = ShiftedSkewShape::new(lambda.clone(), alpha.clone())?;
    if let Some((t, steps)) = column_fill_and_repair(&shape) {
        let content = t.content();
        if let Ok(nu) = StrictPartition::new(content) {
            if t.is_valid() && t.is_lattice() {
                return Ok(Complement { nu, steps, tableau: Some(t) });
            }
        }
    }
    if !allow_fallback {
        return Err(Error::Internal(alloc::format!("repair failed for {lambda}/{alpha}")));
    }
    strict_partitions(lambda.n() - m)
        .into_iter()
        .find(|nu| qtableaux::shifted_lr(lambda, alpha, nu) > 0)
        .map(|nu| Complement { nu, steps: vec![RepairStep::Fallback], tableau: None })
        .ok_or_else(|| Error::Internal(alloc::format!("no strict ν with f^{lambda}_{{{alpha},ν}} > 0")))
}

// Column filling followed by the marking repairs. Returns None as soon as
// the procedure leaves the situations it is designed for.
fn column_fill_and_repair(shape: &ShiftedSkewShape) -> Option<(MarkedTableau, Vec<RepairStep>)> {
    let mut t = MarkedTableau::fill_with(shape.clone(), |_, _| Letter::new(1, false));
    for col in shape.columns() {
        for (k, &(r, c)) in col.iter().enumerate() {
            t.set(r, c, Letter::new(k as u32 + 1, false));
        }
    }
    let mut steps = Vec::new();
    let limit = 4 * shape.size() + 8;
    for _ in 0..limit {
        let nu = content_of(&t);
        if nu.contains(&0) {
            return None;
        }
        // first i (1-based) with ν_i ≤ ν_{i+1}
        let Some(i0) = (0..nu.len().saturating_sub(1)).find(|&k| nu[k] <= nu[k + 1]) else {
            return Some((t, steps));
        };
        let i = i0 as u32 + 1;
        if nu[i0] != nu[i0 + 1] {
            return None;
        }
        if i == 1 || nu[i0 - 1] > nu[i0] + 1 {
            steps.push(RepairStep::Case1 { i });
            mark(&mut t, i, false)?;
            relabel(&mut t, i + 1, i, 1)?;
        } else if nu[i0 - 1] == nu[i0] + 1 {
            steps.push(RepairStep::Case2 { i });
            mark(&mut t, i - 1, true)?;
            relabel(&mut t, i, i - 1, 1)?;
            let mut j = i;
            loop {
                mark(&mut t, j, false)?;
                relabel(&mut t, j + 1, j, 2)?;
                let nu = content_of(&t);
                let at = |k: u32| nu.get(k as usize - 1).copied().unwrap_or(0);
                if at(j + 1) > 0 && at(j + 1) <= at(j + 2) {
                    j += 1;
                } else {
                    break;
                }
            }
        } else {
            return None;
        }
        if !t.is_valid() {
            return None;
        }
    }
    None
}

fn content_of(t: &MarkedTableau) -> Vec<u32> {
    let mut c = t.content();
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

// Unmarked cells holding v, ordered leftmost first (ties: topmost).
fn unmarked_cells(t: &MarkedTableau, v: u32) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> =
        t.cells().filter(|&(_, _, l)| l == Letter::new(v, false)).map(|(r, c, _)| (r, c)).collect();
    cells.sort_by_key(|&(r, c)| (c, r));
    cells
}

fn mark(t: &mut MarkedTableau, v: u32, topmost_row: bool) -> Option<()> {
    let cells = unmarked_cells(t, v);
    let &(r, c) = if topmost_row { cells.iter().min_by_key(|&&(r, c)| (r, c))? } else { cells.first()? };
    t.set(r, c, Letter::new(v, true));
    Some(())
}

// Relabel up to `count` leftmost unmarked `from` cells as unmarked `to`.
fn relabel(t: &mut MarkedTableau, from: u32, to: u32, count: usize) -> Option<()> {
    let cells = unmarked_cells(t, from);
    if cells.is_empty() {
        return None;
    }
    for &(r, c) in cells.iter().take(count) {
        t.set(r, c, Letter::new(to, false));
    }
    Some(())
}
