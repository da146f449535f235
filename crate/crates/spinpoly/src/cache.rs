//! Character tables on disk, one JSON file per (group, n, schema).
//!
//! A file whose schema, key or contents do not check out is ignored and
//! rebuilt from scratch; nothing is ever read from it piecemeal.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use spinpoly_core::covergroup::{classes, Group};
use spinpoly_core::exactnum::{CycNum, Rational};
use spinpoly_core::spinchars::{build_table, Assoc, Row, RowLabel, SpinCharacterTable};

use crate::error::{CliError, CliResult};

pub const SCHEMA: u32 = 1;

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct CacheFile {
    schema: u32,
    group: String,
    n: u32,
    classes: Vec<String>,
    sizes: Vec<String>,
    rows: Vec<CachedRow>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct CachedRow {
    lambda: String,
    assoc: String,
    values: Vec<CachedValue>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct CachedValue {
    conductor: u32,
    coeffs: Vec<String>,
}

/// Where the table for (group, n) lives under `dir`.
pub fn path_for(dir: &Path, group: Group, n: u32) -> PathBuf {
    dir.join(format!("{}{n}.v{SCHEMA}.json", group.letter()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Hit,
    Built,
}

/// Load the table from the cache, or compute and store it.
pub fn load_or_build(dir: &Path, group: Group, n: u32) -> CliResult<(SpinCharacterTable, Source)> {
    let path = path_for(dir, group, n);
    if let Some(t) = read(&path, group, n) {
        return Ok((t, Source::Hit));
    }
    let table = build_table(group, n)?;
    write(&path, &table)?;
    Ok((table, Source::Built))
}

pub fn table(dir: &Path, group: Group, n: u32) -> CliResult<SpinCharacterTable> {
    load_or_build(dir, group, n).map(|(t, _)| t)
}

fn encode(table: &SpinCharacterTable) -> CacheFile {
    CacheFile {
        schema: SCHEMA,
        group: table.group().letter().to_string(),
        n: table.n(),
        classes: table.classes().iter().map(|c| c.to_string()).collect(),
        sizes: table.sizes().iter().map(|s| s.to_string()).collect(),
        rows: table
            .rows()
            .iter()
            .map(|r| CachedRow {
                lambda: r.label.lambda.to_string(),
                assoc: r.label.assoc.symbol().to_string(),
                values: r
                    .values
                    .iter()
                    .map(|v| CachedValue {
                        conductor: v.conductor(),
                        coeffs: v.coeffs().iter().map(|q| q.to_string()).collect(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

fn decode(file: CacheFile, group: Group, n: u32) -> Option<SpinCharacterTable> {
    if file.schema != SCHEMA || file.group != group.letter().to_string() || file.n != n {
        return None;
    }
    let labels = classes(group, n);
    let names: Vec<String> = labels.iter().map(|c| c.to_string()).collect();
    if names != file.classes {
        return None;
    }
    let sizes = file.sizes.iter().map(|s| s.parse::<BigUint>().ok()).collect::<Option<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(file.rows.len());
    for r in file.rows {
        let label = RowLabel::new(r.lambda.parse().ok()?, r.assoc.parse::<Assoc>().ok()?);
        let values = r
            .values
            .into_iter()
            .map(|v| {
                let coeffs = v.coeffs.iter().map(|q| q.parse::<Rational>().ok()).collect::<Option<Vec<_>>>()?;
                CycNum::new(v.conductor, coeffs).ok()
            })
            .collect::<Option<Vec<_>>>()?;
        rows.push(Row { label, values });
    }
    SpinCharacterTable::from_parts(group, n, labels, sizes, rows).ok()
}

fn read(path: &Path, group: Group, n: u32) -> Option<SpinCharacterTable> {
    let text = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    decode(file, group, n)
}

fn write(path: &Path, table: &SpinCharacterTable) -> CliResult<()> {
    let fail = |e: std::io::Error| CliError::Cache(format!("cannot write {}: {e}", path.display()));
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(fail)?;
    }
    let mut text = serde_json::to_string(&encode(table))?;
    text.push('\n');
    // write-then-rename, so readers never see a half-written file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text).map_err(fail)?;
    fs::rename(&tmp, path).map_err(fail)
}
