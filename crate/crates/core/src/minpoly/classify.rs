use alloc::format;

use super::{class_k_eps, ExceptionTable, FormTag, MinPolyForm, RootSet};
use crate::covergroup::{ClassLabel, Group};
use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};
use crate::spinchars::{row_assocs, Assoc, RowLabel};

/// The general exception family of (λ, μ) beyond the sporadic range, if any.
pub fn family_of(n: u32, lambda: &StrictPartition, mu: &Partition) -> Option<FormTag> {
    let unique = |p: u32| mu.parts().contains(&p) && mu.parts().iter().filter(|&&q| q % p == 0).count() == 1;
    let (only3, only5) = (unique(3), unique(5));
    if lambda.parts() == [n] {
        match (only3, only5) {
            (true, true) => Some(FormTag::Family15),
            (true, false) => Some(FormTag::Family3),
            (false, true) => Some(FormTag::Family5),
            (false, false) => None,
        }
    } else if n >= 2 && lambda.parts() == [n - 1, 1] && only3 && only5 {
        Some(FormTag::BasicStd15)
    } else {
        None
    }
}

/// The root set a table entry assigns to (row, class), read in the
/// table's own associate labelling. Entries flagged as typos are skipped.
pub fn table_support(row: &RowLabel, class: &ClassLabel) -> Option<RootSet> {
    let table = ExceptionTable::embedded();
    for e in table.for_group(class.group, class.n()) {
        if e.typo || e.lambda != row.lambda || e.mu != class.cycle_type {
            continue;
        }
        let Ok(cells) = e.expand(e.bindings[0]) else { continue };
        for c in cells {
            if c.row == *row && c.class == *class {
                if let Ok(s) = c.support {
                    return Some(s);
                }
            }
        }
    }
    None
}

fn with_factors(tag: FormTag, support: RootSet, k: u64, eps: crate::partitions::Sign) -> MinPolyForm {
    for t in [FormTag::Full, FormTag::Family15, FormTag::Family3, FormTag::Family5, FormTag::BasicStd15] {
        if let Some(f) = MinPolyForm::closed(t, k, eps) {
            if f.support == support {
                return MinPolyForm { tag, ..f };
            }
        }
    }
    MinPolyForm::from_support(tag, support)
}

/// The predicted minimal polynomial of ρ_{λ,assoc}(g) for g in `label`.
pub fn classify(group: Group, n: u32, lambda: &StrictPartition, assoc: Assoc, label: &ClassLabel) -> Result<MinPolyForm> {
    if n == 0 {
        return Err(Error::Precondition(format!("n must be at least 1")));
    }
    if label.group != group || label.n() != n {
        return Err(Error::InvalidLabel(format!("{label} is not a class of {}{n}", group.letter())));
    }
    if lambda.n() != n || !row_assocs(group, n, lambda).contains(&assoc) {
        return Err(Error::InvalidRow(format!("{}{} is not a spin row of {}{n}", lambda, assoc.symbol(), group.letter())));
    }
    let (k, eps) = class_k_eps(label);
    if n <= ExceptionTable::ceiling(group) {
        let row = RowLabel::new(lambda.clone(), assoc);
        return Ok(match table_support(&row, label) {
            Some(s) => with_factors(FormTag::TableException, s, k, eps),
            None => MinPolyForm::closed(FormTag::Full, k, eps).expect("full form always exists"),
        });
    }
    let tag = family_of(n, lambda, &label.cycle_type).unwrap_or(FormTag::Full);
    Ok(MinPolyForm::closed(tag, k, eps).expect("family forms need k divisible by 3 or 5"))
}
