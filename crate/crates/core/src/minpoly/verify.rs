use alloc::{collections::BTreeMap, format, string::String, vec::Vec};

use super::{
    classify, minimal_polynomial, spectrum_from_values, Binding, EigenSpectrum, ExceptionEntry, ExceptionTable,
    FormTag, MinPolyForm, ResolvedEntry, RootSet,
};
use crate::covergroup::{power_map, ClassLabel, Group};
use crate::error::{Error, Result};
use crate::exactnum::CycNum;
use crate::partitions::StrictPartition;
use crate::spinchars::{Assoc, RowLabel, SpinCharacterTable};

/// For every class of a table, the class indices of g^0, g^1, …, g^{d−1}.
#[derive(Clone, Debug)]
pub struct PowerMaps {
    maps: Vec<Vec<usize>>,
}

impl PowerMaps {
    pub fn new(table: &SpinCharacterTable) -> Result<Self> {
        let maps = table
            .classes()
            .iter()
            .map(|c| {
                power_map(c)?
                    .iter()
                    .map(|p| {
                        table.class_index(p).ok_or_else(|| Error::Internal(format!("power class {p} of {c} missing")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(PowerMaps { maps })
    }

    pub fn of(&self, class: usize) -> &[usize] {
        &self.maps[class]
    }
}

/// The computed minimal polynomial of one (row, class) pair.
#[derive(Clone, Debug)]
pub struct CellResult {
    pub row: RowLabel,
    pub class: ClassLabel,
    pub spectrum: EigenSpectrum,
    pub computed: MinPolyForm,
}

impl CellResult {
    pub fn is_exception(&self) -> bool {
        self.computed.tag != FormTag::Full
    }
}

/// Every cell of one table.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub group: Group,
    pub n: u32,
    pub cells: Vec<CellResult>,
}

impl Sweep {
    /// Computes cell `(r, c)` for each pair in `pairs`; the std crate uses
    /// this to split the work across threads.
    pub fn cells_for(
        table: &SpinCharacterTable,
        powers: &PowerMaps,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Vec<CellResult>> {
        pairs
            .into_iter()
            .map(|(r, c)| {
                let row = &table.rows()[r];
                let class = &table.classes()[c];
                let values: Vec<CycNum> = powers.of(c).iter().map(|&i| row.values[i].clone()).collect();
                let spectrum = spectrum_from_values(&values, class.cycle_type.lcm())?;
                let computed = minimal_polynomial(&spectrum);
                Ok(CellResult { row: row.label.clone(), class: class.clone(), spectrum, computed })
            })
            .collect()
    }

    pub fn all_pairs(table: &SpinCharacterTable) -> Vec<(usize, usize)> {
        let nc = table.classes().len();
        (0..table.rows().len()).flat_map(|r| (0..nc).map(move |c| (r, c))).collect()
    }

    pub fn run(table: &SpinCharacterTable) -> Result<Self> {
        let powers = PowerMaps::new(table)?;
        let cells = Self::cells_for(table, &powers, Self::all_pairs(table))?;
        Ok(Sweep { group: table.group(), n: table.n(), cells })
    }

    pub fn exceptions(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| c.is_exception())
    }

    pub fn support_map(&self) -> BTreeMap<(RowLabel, ClassLabel), RootSet> {
        self.cells.iter().map(|c| ((c.row.clone(), c.class.clone()), c.computed.support.clone())).collect()
    }
}


fn swap_row(row: &RowLabel, swapped: &BTreeMap<StrictPartition, bool>) -> RowLabel {
    if swapped.get(&row.lambda).copied().unwrap_or(false) {
        RowLabel::new(row.lambda.clone(), row.assoc.swap())
    } else {
        row.clone()
    }
}

fn paired_lambdas(table_rows: impl Iterator<Item = RowLabel>) -> Vec<StrictPartition> {
    let mut v: Vec<StrictPartition> = table_rows.filter(|r| r.assoc == Assoc::Plus).map(|r| r.lambda).collect();
    v.dedup();
    v
}

/// How a table entry fared against the computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryStatus {
    /// Every cell agrees under `binding`; `rejected` lists the other
    /// candidate bindings, which do not.
    Matched { binding: Binding, rejected: Vec<Binding> },
    Mismatched { details: Vec<String> },
    /// The entry names a row or class that does not exist.
    Invalid(String),
}

#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub entry: ExceptionEntry,
    pub status: EntryStatus,
}

impl EntryOutcome {
    pub fn matched(&self) -> bool {
        matches!(self.status, EntryStatus::Matched { .. })
    }

    /// Matched, or a flagged typo that (as expected) does not match.
    pub fn as_expected(&self) -> bool {
        self.matched() != self.entry.typo
    }
}

/// Computed exceptions of one table against the transcribed entries.
#[derive(Clone, Debug)]
pub struct ExceptionComparison {
    pub group: Group,
    pub n: u32,
    /// Per λ with an associate pair: whether the table's + row is our − row.
    pub swaps: BTreeMap<StrictPartition, bool>,
    pub outcomes: Vec<EntryOutcome>,
    /// Computed exceptions the table does not list (in table labelling).
    pub unlisted: Vec<(RowLabel, ClassLabel, RootSet)>,
    /// Listed cells where the computation finds k distinct roots.
    pub spurious: Vec<(RowLabel, ClassLabel)>,
}

impl ExceptionComparison {
    pub fn passes(&self) -> bool {
        self.outcomes.iter().all(EntryOutcome::as_expected) && self.unlisted.is_empty() && self.spurious.is_empty()
    }
}

fn check_cells(
    cells: &[ResolvedEntry],
    computed: &BTreeMap<(RowLabel, ClassLabel), RootSet>,
    swaps: &BTreeMap<StrictPartition, bool>,
) -> Vec<String> {
    let mut bad = Vec::new();
    for c in cells {
        let key = (swap_row(&c.row, swaps), c.class.clone());
        match (&c.support, computed.get(&key)) {
            (Ok(s), Some(t)) if s == t => {}
            (Ok(s), Some(t)) => bad.push(format!("{} at {}: table {s}, computed {t}", c.row, c.class)),
            (Err(e), _) => bad.push(format!("{} at {}: {e}", c.row, c.class)),
            (_, None) => bad.push(format!("{} at {}: no such cell", c.row, c.class)),
        }
    }
    bad
}

/// Compares a sweep with the embedded entries for its group and n, choosing
/// one associate relabelling per λ to maximize agreement.
pub fn compare_exceptions(sweep: &Sweep, entries: &ExceptionTable) -> ExceptionComparison {
    let computed = sweep.support_map();
    let exceptional: BTreeMap<(RowLabel, ClassLabel), RootSet> = sweep
        .exceptions()
        .map(|c| ((c.row.clone(), c.class.clone()), c.computed.support.clone()))
        .collect();
    let mine: Vec<&ExceptionEntry> = entries.for_group(sweep.group, sweep.n).collect();
    let expanded: Vec<(usize, Binding, Result<Vec<ResolvedEntry>>)> = mine
        .iter()
        .enumerate()
        .flat_map(|(i, e)| e.bindings.iter().map(move |&b| (i, b, e.expand(b))))
        .collect();

    let mut swaps = BTreeMap::new();
    let pairs = paired_lambdas(sweep.cells.iter().map(|c| c.row.clone()));
    for lam in pairs.into_iter().filter(|l| mine.iter().any(|e| e.lambda == *l)) {
        let score = |sw: bool| -> usize {
            let mut trial = swaps.clone();
            trial.insert(lam.clone(), sw);
            expanded
                .iter()
                .filter(|(i, _, _)| mine[*i].lambda == lam)
                .filter_map(|(_, _, r)| r.as_ref().ok())
                .flatten()
                .filter(|c| check_cells(core::slice::from_ref(*c), &computed, &trial).is_empty())
                .count()
        };
        let sw = score(true) > score(false);
        swaps.insert(lam, sw);
    }

    let mut outcomes = Vec::new();
    let mut listed = BTreeMap::new();
    for (i, e) in mine.iter().enumerate() {
        let mut matched = None;
        let mut rejected = Vec::new();
        let mut details = Vec::new();
        let mut invalid = None;
        for (_, b, r) in expanded.iter().filter(|(j, _, _)| *j == i) {
            match r {
                Err(err) => invalid = Some(format!("{err}")),
                Ok(cells) => {
                    for c in cells {
                        listed.insert((swap_row(&c.row, &swaps), c.class.clone()), ());
                    }
                    let bad = check_cells(cells, &computed, &swaps);
                    if bad.is_empty() && matched.is_none() {
                        matched = Some(*b);
                    } else {
                        if !bad.is_empty() {
                            rejected.push(*b);
                        }
                        details.extend(bad.into_iter().map(|d| format!("[{}] {d}", b.name())));
                    }
                }
            }
        }
        let status = match (invalid, matched) {
            (Some(why), _) => EntryStatus::Invalid(why),
            (None, Some(binding)) => EntryStatus::Matched { binding, rejected },
            (None, None) => EntryStatus::Mismatched { details },
        };
        outcomes.push(EntryOutcome { entry: (*e).clone(), status });
    }

    let unswap = |r: &RowLabel| swap_row(r, &swaps);
    let unlisted = exceptional
        .iter()
        .filter(|(k, _)| !listed.contains_key(*k))
        .map(|((r, c), s)| (unswap(r), c.clone(), s.clone()))
        .collect();
    let spurious = listed
        .keys()
        .filter(|k| computed.contains_key(*k) && !exceptional.contains_key(*k))
        .map(|(r, c)| (unswap(r), c.clone()))
        .collect();
    ExceptionComparison { group: sweep.group, n: sweep.n, swaps, outcomes, unlisted, spurious }
}

/// One cell of a classifier-versus-computation run.
#[derive(Clone, Debug)]
pub struct VerifyRecord {
    pub row: RowLabel,
    pub class: ClassLabel,
    pub computed: MinPolyForm,
    pub predicted: MinPolyForm,
    pub matched: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub group: Group,
    pub n: u32,
    pub swaps: BTreeMap<StrictPartition, bool>,
    pub records: Vec<VerifyRecord>,
}

impl VerificationReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyRecord> {
        self.records.iter().filter(|r| !r.matched)
    }

    pub fn exception_count(&self) -> usize {
        self.records.iter().filter(|r| r.computed.tag != FormTag::Full).count()
    }

    pub fn passes(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

/// Classifier against computation for every cell of a sweep, up to one
/// associate relabelling per λ.
pub fn verify_n(sweep: &Sweep) -> Result<VerificationReport> {
    let computed: BTreeMap<(RowLabel, ClassLabel), &CellResult> =
        sweep.cells.iter().map(|c| ((c.row.clone(), c.class.clone()), c)).collect();
    let mut predicted = BTreeMap::new();
    for c in &sweep.cells {
        let p = classify(sweep.group, sweep.n, &c.row.lambda, c.row.assoc, &c.class)?;
        predicted.insert((c.row.clone(), c.class.clone()), p);
    }
    let mut swaps = BTreeMap::new();
    for lam in paired_lambdas(sweep.cells.iter().map(|c| c.row.clone())) {
        let score = |sw: bool| -> usize {
            let mut trial = BTreeMap::new();
            trial.insert(lam.clone(), sw);
            predicted
                .iter()
                .filter(|((r, _), _)| r.lambda == lam)
                .filter(|((r, c), p)| computed[&(swap_row(r, &trial), c.clone())].computed.support == p.support)
                .count()
        };
        let sw = score(true) > score(false);
        swaps.insert(lam, sw);
    }
    let records = predicted
        .into_iter()
        .map(|((row, class), p)| {
            let comp = &computed[&(swap_row(&row, &swaps), class.clone())].computed;
            VerifyRecord { matched: comp.support == p.support, computed: comp.clone(), predicted: p, row, class }
        })
        .collect();
    Ok(VerificationReport { group: sweep.group, n: sweep.n, swaps, records })
}
