use alloc::{string::String, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::partitions::StrictPartition;

/// A letter of the marked alphabet 1' < 1 < 2' < 2 < …
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(value: u32, marked: bool) -> Letter {
        debug_assert!(value >= 1);
        Letter(2 * value - marked as u32)
    }

    pub fn value(self) -> u32 {
        (self.0 + 1) / 2
    }

    pub fn is_marked(self) -> bool {
        self.0 % 2 == 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value(), if self.is_marked() { "'" } else { "" })
    }
}

/// λ/μ in shifted coordinates: row r (0-based) spans columns r … r+λ_r−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl ShiftedSkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(alloc::format!("{inner} is not contained in {outer}")));
        }
        Ok(ShiftedSkewShape { outer, inner })
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns [start, end) of the skew cells in row r.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (r + self.inner.part(r) as usize, r + self.outer.part(r) as usize)
    }

    pub fn size(&self) -> usize {
        (self.outer.n() - self.inner.n()) as usize
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        if r >= self.rows() {
            return false;
        }
        let (a, b) = self.row_span(r);
        a <= c && c < b
    }

    /// Skew cells grouped by column, each column listed top to bottom.
    pub fn columns(&self) -> Vec<Vec<(usize, usize)>> {
        let width = self.outer.part(0) as usize;
        (0..width)
            .map(|c| (0..self.rows()).filter(|&r| self.contains_cell(r, c)).map(|r| (r, c)).collect())
            .filter(|col: &Vec<_>| !col.is_empty())
            .collect()
    }
}

/// A filling of a shifted skew shape by marked letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTableau {
    shape: ShiftedSkewShape,
    rows: Vec<Vec<Letter>>,
}

impl MarkedTableau {
    pub fn fill_with(shape: ShiftedSkewShape, mut f: impl FnMut(usize, usize) -> Letter) -> Self {
        let rows = (0..shape.rows())
            .map(|r| {
                let (a, b) = shape.row_span(r);
                (a..b).map(|c| f(r, c)).collect()
            })
            .collect();
        MarkedTableau { shape, rows }
    }

    pub fn shape(&self) -> &ShiftedSkewShape {
        &self.shape
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        Some(self.rows[r][c - self.shape.row_span(r).0])
    }

    pub fn set(&mut self, r: usize, c: usize, l: Letter) {
        let start = self.shape.row_span(r).0;
        self.rows[r][c - start] = l;
    }

    /// (row, column, letter) in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let start = self.shape.row_span(r).0;
            row.iter().enumerate().map(move |(k, &l)| (r, start + k, l))
        })
    }

    /// content[i−1] = number of cells holding i or i'.
    pub fn content(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for (_, _, l) in self.cells() {
            let v = l.value() as usize;
            if out.len() < v {
                out.resize(v, 0);
            }
            out[v - 1] += 1;
        }
        out
    }

    /// Rows and columns weakly increase; an unmarked letter at most once
    /// per column, a marked letter at most once per row.
    pub fn is_valid(&self) -> bool {
        self.cells().all(|(r, c, l)| {
            let left_ok = match c.checked_sub(1).and_then(|cl| self.get(r, cl)) {
                Some(x) => x < l || (x == l && !l.is_marked()),
                None => true,
            };
            let up_ok = match r.checked_sub(1).and_then(|ru| self.get(ru, c)) {
                Some(x) => x < l || (x == l && l.is_marked()),
                None => true,
            };
            left_ok && up_ok
        })
    }

    /// Row reading word: rows left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flat_map(|row| row.iter().copied()).collect()
    }

    /// The lattice property plus the leftmost-unmarked condition.
    pub fn is_lattice(&self) -> bool {
        let w = self.reading_word();
        lattice_property(&w) && leftmost_unmarked(&w)
    }
}

impl fmt::Display for MarkedTableau {
    /// Grid notation: one line per row, shifted, `.` for cells of the inner shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.shape.rows() {
            let mut line = String::new();
            for _ in 0..r {
                line.push_str("   ");
            }
            let (start, _) = self.shape.row_span(r);
            for _ in r..start {
                line.push_str(" . ");
            }
            for l in &self.rows[r] {
                let s = alloc::format!("{l}");
                line.push_str(&alloc::format!("{s:>2} "));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Stembridge's lattice property of a word over the marked alphabet.
///
/// m_i(j) counts unmarked i among the last j letters (0 ≤ j ≤ n), then
/// continues with m_i(n) plus the marked i' among the first j−n letters.
/// Whenever m_i(j) = m_{i−1}(j), the next letter scanned may not be i or i'
/// in the first (right-to-left) pass, nor i−1 or i' in the second pass.
pub fn lattice_property(w: &[Letter]) -> bool {
    let top = w.iter().map(|l| l.value()).max().unwrap_or(0);
    for i in 2..=top {
        let (ui, mi) = (Letter::new(i, false), Letter::new(i, true));
        let (uprev, mprev) = (Letter::new(i - 1, false), Letter::new(i - 1, true));
        let (mut a, mut b) = (0u32, 0u32); // m_{i−1}, m_i
        for &l in w.iter().rev() {
            if a == b && (l == ui || l == mi) {
                return false;
            }
            if l == ui {
                b += 1;
            } else if l == uprev {
                a += 1;
            }
        }
        for &l in w {
            if a == b && (l == uprev || l == mi) {
                return false;
            }
            if l == mi {
                b += 1;
            } else if l == mprev {
                a += 1;
            }
        }
    }
    true
}

/// The leftmost occurrence of each value in the word is unmarked.
pub fn leftmost_unmarked(w: &[Letter]) -> bool {
    let mut seen: Vec<bool> = vec![false; w.iter().map(|l| l.value() as usize).max().unwrap_or(0) + 1];
    for &l in w {
        let v = l.value() as usize;
        if !seen[v] {
            if l.is_marked() {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

/// Every tableau counted by f^λ_{μν}.
pub fn lr_tableaux(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Vec<MarkedTableau> {
    let mut out = Vec::new();
    if mu.n() + nu.n() != lambda.n() || !lambda.contains(mu) {
        return out;
    }
    let Ok(shape) = ShiftedSkewShape::new(lambda.clone(), mu.clone()) else {
        return out;
    };
    let order: Vec<(usize, usize)> = shape.columns().into_iter().flatten().collect();
    let mut t = MarkedTableau::fill_with(shape, |_, _| Letter::new(1, false));
    let mut remaining: Vec<u32> = nu.parts().to_vec();
    fill(&mut t, &order, 0, &mut remaining, &mut |t| {
        if t.is_lattice() {
            out.push(t.clone());
        }
    });
    out
}

/// The shifted Littlewood–Richardson coefficient f^λ_{μν}.
pub fn shifted_lr(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> u64 {
    lr_tableaux(lambda, mu, nu).len() as u64
}

// Column-major backtracking: left and upper neighbours are always filled
// before a cell, so the local tableau conditions can be checked eagerly.
fn fill(
    t: &mut MarkedTableau,
    order: &[(usize, usize)],
    k: usize,
    remaining: &mut [u32],
    emit: &mut dyn FnMut(&MarkedTableau),
) {
    let Some(&(r, c)) = order.get(k) else {
        emit(t);
        return;
    };
    let left = c.checked_sub(1).and_then(|cl| t.get(r, cl));
    let up = r.checked_sub(1).and_then(|ru| t.get(ru, c));
    let floor = left.max(up);
    for v in 1..=remaining.len() as u32 {
        if remaining[v as usize - 1] == 0 {
            continue;
        }
        for marked in [true, false] {
            let l = Letter::new(v, marked);
            if floor.is_some_and(|x| x > l) {
                continue;
            }
            if left == Some(l) && marked {
                continue;
            }
            if up == Some(l) && !marked {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            t.set(r, c, l);
            fill(t, order, k + 1, remaining, emit);
            remaining[v as usize - 1] += 1;
        }
    }
}
