//! The embedded exception tables and their expansion into concrete
//! (row, class, root set) cells.
//!
//! One entry per line of `data/exceptions.txt`:
//!
//! ```text
//! G n | lambda [pm|+|-] | mu [pm|+|-] | expression | binding | flag | note
//! ```
//!
//! `G` is `S` or `A`. An omitted sign means the row or class is not split
//! (or, for a row, that the entry applies to both associates alike). The
//! binding says which sign the expression's `pm`/`mp` follow: `assoc` (the
//! row's), `class` (the class's z-sign) or `none`. Candidates separated by
//! `?` (e.g. `assoc?class`) mark an ambiguous binding to be settled by
//! computation, preferred candidate first. `flag` is empty or `typo`. Lines
//! starting with `#` are comments. Expressions use the grammar of
//! [`parse_expr`](super::parse_expr).
//!
//! For Ã_n classes that split into halves a and b, an entry without a half
//! describes half a for the row as given and half b for its associate,
//! since conjugating by an odd permutation swaps both.

use alloc::{format, string::String, vec, vec::Vec};
use core::fmt;
use core::str::FromStr;

use super::{Expr, RootSet};
use crate::covergroup::{order, splits_in_a, AltTag, ClassLabel, Group};
use crate::error::{Error, Result};
use crate::partitions::{Partition, Sign, StrictPartition};
use crate::spinchars::{row_assocs, Assoc, RowLabel};

const DATA: &str = include_str!("../../data/exceptions.txt");

/// The sign decoration on a row or class in the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignSpec {
    Unsigned,
    Plus,
    Minus,
    Both,
}

impl SignSpec {
    fn parse(s: Option<&str>) -> Result<Self> {
        match s {
            None => Ok(SignSpec::Unsigned),
            Some("+") => Ok(SignSpec::Plus),
            Some("-") => Ok(SignSpec::Minus),
            Some("pm") | Some("±") => Ok(SignSpec::Both),
            Some(o) => Err(Error::MalformedEntry(format!("unknown sign {o:?}"))),
        }
    }

    fn signs(self) -> Vec<Option<Sign>> {
        match self {
            SignSpec::Unsigned => vec![None],
            SignSpec::Plus => vec![Some(Sign::Plus)],
            SignSpec::Minus => vec![Some(Sign::Minus)],
            SignSpec::Both => vec![Some(Sign::Plus), Some(Sign::Minus)],
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            SignSpec::Unsigned => "",
            SignSpec::Plus => "+",
            SignSpec::Minus => "-",
            SignSpec::Both => "±",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Binding {
    Assoc,
    Class,
    Unbound,
}

impl Binding {
    pub fn name(self) -> &'static str {
        match self {
            Binding::Assoc => "assoc",
            Binding::Class => "class",
            Binding::Unbound => "none",
        }
    }
}

impl FromStr for Binding {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "assoc" => Ok(Binding::Assoc),
            "class" => Ok(Binding::Class),
            "" | "none" => Ok(Binding::Unbound),
            o => Err(Error::MalformedEntry(format!("unknown binding {o:?}"))),
        }
    }
}

/// One transcribed table cell.
#[derive(Clone, Debug)]
pub struct ExceptionEntry {
    pub line: usize,
    pub group: Group,
    pub n: u32,
    pub lambda: StrictPartition,
    pub assoc: SignSpec,
    pub mu: Partition,
    pub class_sign: SignSpec,
    pub source: String,
    pub expr: Expr,
    /// Candidate bindings, preferred first.
    pub bindings: Vec<Binding>,
    pub typo: bool,
    pub note: String,
}

impl fmt::Display for ExceptionEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} λ={}{} μ={}{}: {}",
            self.group.letter(),
            self.n,
            self.lambda,
            self.assoc.suffix(),
            self.mu,
            self.class_sign.suffix(),
            self.source
        )
    }
}

/// A concrete (row, class) cell produced by an entry under one binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedEntry {
    pub row: RowLabel,
    pub class: ClassLabel,
    /// The eigenvalue set, or why the expression has none.
    pub support: core::result::Result<RootSet, String>,
}

fn split_sign(s: &str) -> (&str, Option<&str>) {
    let s = s.trim();
    match s.rsplit_once(')') {
        Some((head, tail)) if !tail.trim().is_empty() => (&s[..head.len() + 1], Some(tail.trim())),
        _ => (s, None),
    }
}

impl ExceptionEntry {
    pub fn parse_line(line_no: usize, line: &str) -> Result<Self> {
        let bad = |why: &str| Error::MalformedEntry(format!("line {line_no}: {why}: {line:?}"));
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() < 4 || fields.len() > 7 {
            return Err(bad("expected 4 to 7 fields"));
        }
        let mut head = fields[0].split_whitespace();
        let group: Group = head.next().ok_or_else(|| bad("missing group"))?.parse()?;
        let n: u32 = head.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("missing n"))?;
        let (lam, asg) = split_sign(fields[1]);
        let lambda: StrictPartition = lam.parse()?;
        let (mu_s, csg) = split_sign(fields[2]);
        let mu: Partition = mu_s.parse()?;
        if lambda.n() != n || mu.n() != n {
            return Err(bad("partition of the wrong size"));
        }
        let expr = super::parse_expr(fields[3])?;
        let bindings = match fields.get(4) {
            Some(b) => b.split('?').map(str::parse).collect::<Result<Vec<Binding>>>()?,
            None => vec![Binding::Unbound],
        };
        if !expr.has_pm() && bindings.iter().any(|&b| b != Binding::Unbound) {
            return Err(bad("binding given for an expression without ±"));
        }
        if expr.has_pm() && bindings.contains(&Binding::Unbound) {
            return Err(bad("expression with ± needs a binding"));
        }
        let typo = match fields.get(5).copied() {
            None | Some("") => false,
            Some("typo") => true,
            Some(o) => return Err(bad(&format!("unknown flag {o:?}"))),
        };
        Ok(ExceptionEntry {
            line: line_no,
            group,
            n,
            lambda,
            assoc: SignSpec::parse(asg)?,
            mu,
            class_sign: SignSpec::parse(csg)?,
            source: String::from(fields[3]),
            expr,
            bindings,
            typo,
            note: String::from(fields.get(6).copied().unwrap_or("")),
        })
    }

    /// The concrete cells under one binding, or an error when the entry names
    /// a row or class that does not exist in the group.
    pub fn expand(&self, binding: Binding) -> Result<Vec<ResolvedEntry>> {
        let pairs = row_assocs(self.group, self.n, &self.lambda);
        let row_of = |a: Option<Sign>| -> Result<Assoc> {
            let want = match a {
                None => Assoc::Plain,
                Some(Sign::Plus) => Assoc::Plus,
                Some(Sign::Minus) => Assoc::Minus,
            };
            if pairs.contains(&want) {
                Ok(want)
            } else if self.group == Group::A && pairs == [Assoc::Plain] {
                // the two associates of S̃_n restrict to one representation of Ã_n
                Ok(Assoc::Plain)
            } else if want == Assoc::Plain {
                Err(Error::InvalidRow(format!("{}{} needs an associate sign", self.group.letter(), self.n)))
            } else {
                Err(Error::InvalidRow(format!("{} has no associates in {}{}", self.lambda, self.group.letter(), self.n)))
            }
        };
        let halves = self.group == Group::A && splits_in_a(&self.mu);
        let mut out = Vec::new();
        let row_signs = if self.assoc == SignSpec::Unsigned && pairs.len() == 2 {
            SignSpec::Both.signs()
        } else {
            self.assoc.signs()
        };
        for a in row_signs.iter().copied() {
            let assoc = row_of(a)?;
            for c in self.class_sign.signs() {
                let s = match binding {
                    Binding::Assoc => a.unwrap_or(Sign::Plus),
                    Binding::Class => c.unwrap_or(Sign::Plus),
                    Binding::Unbound => Sign::Plus,
                };
                let alts: Vec<(Option<AltTag>, Assoc)> = if halves {
                    vec![(Some(AltTag::A), assoc), (Some(AltTag::B), assoc.swap())]
                } else {
                    vec![(None, assoc)]
                };
                for (alt, row_assoc) in alts {
                    let class = ClassLabel::new(self.group, self.mu.clone(), c, alt)?;
                    let support = self
                        .expr
                        .eval(s)
                        .map_err(|e| format!("{e}"))
                        .and_then(|p| {
                            RootSet::of_polynomial(&p, order(&class))
                                .ok_or_else(|| format!("{p} is not a product of distinct roots of x^{} - 1", order(&class)))
                        });
                    let cell = ResolvedEntry { row: RowLabel::new(self.lambda.clone(), row_assoc), class, support };
                    if !out.contains(&cell) {
                        out.push(cell);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// All transcribed entries.
#[derive(Clone, Debug)]
pub struct ExceptionTable {
    pub entries: Vec<ExceptionEntry>,
}

impl ExceptionTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            entries.push(ExceptionEntry::parse_line(i + 1, t)?);
        }
        Ok(ExceptionTable { entries })
    }

    /// The tables shipped with the crate.
    pub fn embedded() -> &'static ExceptionTable {
        static TABLE: spin::Once<ExceptionTable> = spin::Once::new();
        TABLE.call_once(|| ExceptionTable::parse(DATA).expect("embedded exception table is well formed"))
    }

    pub fn for_group(&self, group: Group, n: u32) -> impl Iterator<Item = &ExceptionEntry> {
        self.entries.iter().filter(move |e| e.group == group && e.n == n)
    }

    /// The largest n the tables cover for a group.
    pub fn ceiling(group: Group) -> u32 {
        match group {
            Group::S => 8,
            Group::A => 10,
        }
    }
}
