//! The five subcommands. Each writes its report to `out` and returns an
//! [`Outcome`]; usage and runtime errors come back as `Err`.

use std::collections::BTreeMap;
use std::io::Write;

use serde_json::json;
use spinpoly_core::covergroup::{canonical_word, label_rep, CoverElement, Group};
use spinpoly_core::minpoly::{
    compare_exceptions, minimal_polynomial, spectrum, verify_n, EntryStatus, ExceptionComparison, ExceptionTable,
    PowerMaps, Sweep, VerifyRecord,
};
use spinpoly_core::partitions::{strict_partitions, Partition};
use spinpoly_core::qtableaux::shifted_lr;
use spinpoly_core::spinchars::{build_table, RowLabel};

use crate::cache;
use crate::config::{Config, OutputFormat};
use crate::error::{CliError, CliResult};
use crate::labels::{parse_class, parse_row};
use crate::report::{poly_string, pm_string, spectrum_string, write_csv, write_pairs, write_table};
use crate::sweep::{parallel_verify, pool};

/// Exit status plus an optional machine-readable failure record for stderr.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub failure: Option<serde_json::Value>,
}

impl Outcome {
    fn ok() -> Self {
        Outcome { code: 0, failure: None }
    }

    fn failed(record: serde_json::Value) -> Self {
        Outcome { code: 1, failure: Some(record) }
    }
}

fn s(x: impl ToString) -> String {
    x.to_string()
}

pub fn chartable(cfg: &Config, group: Group, n: u32, out: &mut dyn Write) -> CliResult<Outcome> {
    cfg.check_n(n)?;
    let t = cache::table(&cfg.cache_dir, group, n)?;
    let classes: Vec<String> = t.classes().iter().map(s).collect();
    let sizes: Vec<String> = t.sizes().iter().map(s).collect();
    match cfg.output_format {
        OutputFormat::Json => {
            let rows: Vec<_> = t
                .rows()
                .iter()
                .map(|r| {
                    json!({
                        "lambda": s(&r.label.lambda),
                        "assoc": r.label.assoc.symbol(),
                        "values": r.values.iter().map(s).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({ "group": s(group.letter()), "n": n, "classes": classes, "sizes": sizes, "rows": rows });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        fmt => {
            let mut header = vec![s("row")];
            header.extend(classes);
            let mut rows = vec![std::iter::once(s("size")).chain(sizes).collect::<Vec<_>>()];
            for r in t.rows() {
                rows.push(std::iter::once(s(&r.label)).chain(r.values.iter().map(s)).collect());
            }
            if fmt == OutputFormat::Csv {
                write_csv(out, &header, &rows)?;
            } else {
                writeln!(out, "spin characters of {}~{n}: {} rows, {} classes", group.letter(), t.rows().len(), t.classes().len())?;
                write_table(out, &header, &rows)?;
            }
        }
    }
    Ok(Outcome::ok())
}

pub struct MinpolyQuery<'a> {
    pub group: Group,
    pub n: u32,
    pub lambda: &'a str,
    pub assoc: Option<&'a str>,
    pub mu: &'a str,
    pub sign: Option<&'a str>,
}

pub fn minpoly(cfg: &Config, q: &MinpolyQuery<'_>, out: &mut dyn Write) -> CliResult<Outcome> {
    cfg.check_n(q.n)?;
    let row = parse_row(q.group, q.n, q.lambda, q.assoc)?;
    let class = parse_class(q.group, q.n, q.mu, q.sign)?;
    let t = cache::table(&cfg.cache_dir, q.group, q.n)?;
    let sp = spectrum(&t, &row, &class)?;
    let computed = minimal_polynomial(&sp);

    // the classifier is only defined up to one associate relabelling per λ,
    // so verify every cell of λ and read off this one
    let powers = PowerMaps::new(&t)?;
    let pairs = Sweep::all_pairs(&t).into_iter().filter(|&(r, _)| t.rows()[r].label.lambda == row.lambda);
    let sweep = Sweep { group: q.group, n: q.n, cells: Sweep::cells_for(&t, &powers, pairs)? };
    let report = verify_n(&sweep)?;
    let swapped = report.swaps.get(&row.lambda).copied().unwrap_or(false);
    let table_row = if swapped { RowLabel::new(row.lambda.clone(), row.assoc.swap()) } else { row.clone() };
    let rec = report
        .records
        .iter()
        .find(|r| r.row == table_row && r.class == class)
        .ok_or_else(|| CliError::Core(spinpoly_core::Error::Internal(format!("no record for {row} at {class}"))))?;
    let verdict = if rec.matched { "match" } else { "mismatch" };

    let mut pairs = vec![
        ("group", s(q.group.letter())),
        ("n", s(q.n)),
        ("row", s(&row)),
        ("class", s(&class)),
        ("order", s(sp.order)),
        ("epsilon", s(sp.epsilon().as_i64())),
        ("spectrum", spectrum_string(&sp)),
        ("computed", poly_string(&computed)),
        ("expanded", s(computed.expanded())),
        ("form", s(computed.tag.name())),
        ("predicted", poly_string(&rec.predicted)),
        ("classifier row", s(&table_row)),
        ("verdict", s(verdict)),
    ];
    if cfg.paper_notation {
        let other = class.times_z();
        let paired = if other != class {
            pm_string(&computed, &minimal_polynomial(&spectrum(&t, &row, &other)?))
        } else {
            poly_string(&computed)
        };
        pairs.push(("paper", paired));
    }
    match cfg.output_format {
        OutputFormat::Table => write_pairs(out, &pairs)?,
        OutputFormat::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                pairs.iter().map(|(k, v)| (k.replace(' ', "_"), json!(v))).collect();
            writeln!(out, "{}", serde_json::Value::Object(map))?;
        }
        OutputFormat::Csv => {
            let header: Vec<String> = pairs.iter().map(|(k, _)| k.replace(' ', "_")).collect();
            let row: Vec<String> = pairs.into_iter().map(|(_, v)| v).collect();
            write_csv(out, &header, &[row])?;
        }
    }
    Ok(Outcome::ok())
}

fn record_fields(n: u32, r: &VerifyRecord) -> Vec<String> {
    vec![
        s(n),
        s(&r.row.lambda),
        s(r.row.assoc.symbol()),
        s(&r.class),
        poly_string(&r.computed),
        poly_string(&r.predicted),
        s(r.matched),
    ]
}

const RECORD_KEYS: [&str; 7] = ["n", "lambda", "assoc", "class", "computed", "predicted", "match"];

/// Classifier against computation for every n in `ns`.
pub fn verify(cfg: &Config, group: Group, ns: std::ops::RangeInclusive<u32>, out: &mut dyn Write) -> CliResult<Outcome> {
    for n in [*ns.start(), *ns.end()] {
        cfg.check_n(n)?;
    }
    let pool = pool(cfg.worker_count)?;
    let mut bad = Vec::new();
    let mut csv_rows = Vec::new();
    let mut summary = Vec::new();
    let mut details = Vec::new();
    for n in ns.clone() {
        let t = cache::table(&cfg.cache_dir, group, n)?;
        let report = parallel_verify(&t, &pool)?;
        let mism: Vec<&VerifyRecord> = report.mismatches().collect();
        for r in &mism {
            bad.push(json!({ "n": n, "row": s(&r.row), "class": s(&r.class) }));
        }
        match cfg.output_format {
            OutputFormat::Json => {
                for r in &report.records {
                    let f = record_fields(n, r);
                    let mut m = serde_json::Map::new();
                    for (k, v) in RECORD_KEYS.iter().zip(f) {
                        let v = match *k {
                            "n" => json!(n),
                            "match" => json!(r.matched),
                            _ => json!(v),
                        };
                        m.insert(k.to_string(), v);
                    }
                    writeln!(out, "{}", serde_json::Value::Object(m))?;
                }
            }
            OutputFormat::Csv => csv_rows.extend(report.records.iter().map(|r| record_fields(n, r))),
            OutputFormat::Table => {
                let swaps: Vec<String> = report.swaps.iter().filter(|(_, &v)| v).map(|(l, _)| s(l)).collect();
                summary.push(vec![
                    s(n),
                    s(report.records.len()),
                    s(report.exception_count()),
                    s(mism.len()),
                    if swaps.is_empty() { s("-") } else { swaps.join(" ") },
                ]);
                details.extend(mism.iter().map(|r| {
                    format!(
                        "n = {n}: {} at {}: computed {}, predicted {}",
                        r.row,
                        r.class,
                        poly_string(&r.computed),
                        poly_string(&r.predicted)
                    )
                }));
            }
        }
    }
    match cfg.output_format {
        OutputFormat::Csv => write_csv(out, &RECORD_KEYS.map(s), &csv_rows)?,
        OutputFormat::Table => {
            let header = ["n", "cells", "exceptions", "mismatches", "relabelled"].map(s);
            write_table(out, &header, &summary)?;
            for d in &details {
                writeln!(out, "mismatch {d}")?;
            }
            writeln!(out, "{} mismatches for {}~n, n in {}..={}", bad.len(), group.letter(), ns.start(), ns.end())?;
        }
        OutputFormat::Json => {}
    }
    if bad.is_empty() {
        Ok(Outcome::ok())
    } else {
        Ok(Outcome::failed(json!({ "error": "mismatch", "group": s(group.letter()), "count": bad.len(), "cells": bad })))
    }
}

fn status_string(st: &EntryStatus) -> String {
    match st {
        EntryStatus::Matched { binding, .. } => format!("matched ({})", binding.name()),
        EntryStatus::Mismatched { details } => format!("mismatched: {}", details.join("; ")),
        EntryStatus::Invalid(why) => format!("invalid: {why}"),
    }
}

/// Computed exceptions of one table next to the embedded transcription.
pub fn exceptions(cfg: &Config, group: Group, n: u32, out: &mut dyn Write) -> CliResult<Outcome> {
    cfg.check_n(n)?;
    let t = cache::table(&cfg.cache_dir, group, n)?;
    let sweep = Sweep::run(&t)?;
    let cmp = compare_exceptions(&sweep, ExceptionTable::embedded());
    let computed: Vec<Vec<String>> = if cfg.paper_notation {
        paper_exceptions(&sweep)
    } else {
        sweep.exceptions().map(|c| vec![s(&c.row), s(&c.class), poly_string(&c.computed)]).collect()
    };
    let entries: Vec<Vec<String>> = cmp
        .outcomes
        .iter()
        .map(|o| {
            let e = &o.entry;
            vec![
                format!("{}{}", e.lambda, e.assoc.suffix()),
                format!("{}{}", e.mu, e.class_sign.suffix()),
                e.source.clone(),
                if e.typo { s("flagged typo") } else { String::new() },
                status_string(&o.status),
            ]
        })
        .collect();
    match cfg.output_format {
        OutputFormat::Table => {
            writeln!(out, "computed exceptions for {}~{n}: {}", group.letter(), computed.len())?;
            write_table(out, &["row", "class", "minimal polynomial"].map(s), &computed)?;
            writeln!(out)?;
            writeln!(out, "embedded table entries: {}", entries.len())?;
            if !entries.is_empty() {
                write_table(out, &["row", "class", "entry", "flag", "status"].map(s), &entries)?;
            }
            writeln!(out)?;
            write_comparison_summary(out, &cmp)?;
        }
        OutputFormat::Json => {
            let doc = json!({
                "group": s(group.letter()),
                "n": n,
                "computed": computed.iter().map(|r| json!({"row": r[0], "class": r[1], "polynomial": r[2]})).collect::<Vec<_>>(),
                "entries": entries.iter().map(|r| json!({"row": r[0], "class": r[1], "entry": r[2], "typo": !r[3].is_empty(), "status": r[4]})).collect::<Vec<_>>(),
                "relabelled": cmp.swaps.iter().filter(|(_, &v)| v).map(|(l, _)| s(l)).collect::<Vec<_>>(),
                "unlisted": cmp.unlisted.iter().map(|(r, c, _)| format!("{r} at {c}")).collect::<Vec<_>>(),
                "spurious": cmp.spurious.iter().map(|(r, c)| format!("{r} at {c}")).collect::<Vec<_>>(),
                "passes": cmp.passes(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> =
                computed.into_iter().map(|r| vec![s("computed"), r[0].clone(), r[1].clone(), r[2].clone(), String::new()]).collect();
            rows.extend(entries.into_iter().map(|r| {
                let status = if r[3].is_empty() { r[4].clone() } else { format!("{}; {}", r[3], r[4]) };
                vec![s("entry"), r[0].clone(), r[1].clone(), r[2].clone(), status]
            }));
            write_csv(out, &["kind", "row", "class", "polynomial", "status"].map(s), &rows)?;
        }
    }
    Ok(Outcome::ok())
}

fn write_comparison_summary(out: &mut dyn Write, cmp: &ExceptionComparison) -> CliResult<()> {
    let swaps: Vec<String> = cmp.swaps.iter().filter(|(_, &v)| v).map(|(l, _)| s(l)).collect();
    writeln!(out, "associate relabelling: {}", if swaps.is_empty() { s("none") } else { swaps.join(" ") })?;
    let unlisted: Vec<String> = cmp.unlisted.iter().map(|(r, c, sp)| format!("{r} at {c} [{sp}]")).collect();
    writeln!(out, "computed but not listed: {}", if unlisted.is_empty() { s("none") } else { unlisted.join(", ") })?;
    let spurious: Vec<String> = cmp.spurious.iter().map(|(r, c)| format!("{r} at {c}")).collect();
    writeln!(out, "listed but not exceptional: {}", if spurious.is_empty() { s("none") } else { spurious.join(", ") })?;
    writeln!(out, "agreement: {}", if cmp.passes() { "yes" } else { "no" })?;
    Ok(())
}

/// Computed exceptions with the z-translate classes folded into ± forms.
fn paper_exceptions(sweep: &Sweep) -> Vec<Vec<String>> {
    let forms: BTreeMap<_, _> = sweep.cells.iter().map(|c| ((c.row.clone(), c.class.clone()), &c.computed)).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for c in sweep.exceptions() {
        let other = c.class.times_z();
        if other == c.class || c.class.z_sign.is_none() {
            out.push(vec![s(&c.row), s(&c.class), poly_string(&c.computed)]);
            continue;
        }
        let key = (c.row.clone(), c.class.cycle_type.clone(), c.class.alt);
        if !seen.insert(key) {
            continue;
        }
        let (plus, minus) = if c.class.z_sign == Some(spinpoly_core::partitions::Sign::Plus) {
            (c.class.clone(), other)
        } else {
            (other, c.class.clone())
        };
        let fp = forms[&(c.row.clone(), plus.clone())];
        let fm = forms[&(c.row.clone(), minus)];
        let mut name = s(&plus.cycle_type) + "±";
        if let Some(a) = plus.alt {
            name.push(a.symbol());
        }
        out.push(vec![s(&c.row), name, pm_string(fp, fm)]);
    }
    out
}

/// Invariant suites, each small enough to run in seconds.
pub fn selftest(cfg: &Config, out: &mut dyn Write) -> CliResult<Outcome> {
    let mut results: Vec<(&str, Result<String, String>)> = Vec::new();
    results.push(("presentation", presentation(10)));
    results.push(("mod-8", mod_eight(16)));
    results.push(("orthogonality", orthogonality(8)));
    results.push(("lr-commutativity", lr_commutativity(8)));
    let failed: Vec<_> = results.iter().filter(|(_, r)| r.is_err()).collect();
    match cfg.output_format {
        OutputFormat::Json => {
            for (name, r) in &results {
                let (passed, detail) = match r {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                writeln!(out, "{}", json!({ "check": name, "passed": passed, "detail": detail }))?;
            }
        }
        fmt => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|(name, r)| match r {
                    Ok(d) => vec![s(name), s("ok"), d.clone()],
                    Err(d) => vec![s(name), s("FAILED"), d.clone()],
                })
                .collect();
            let header = ["check", "status", "detail"].map(s);
            if fmt == OutputFormat::Csv {
                write_csv(out, &header, &rows)?;
            } else {
                write_table(out, &header, &rows)?;
            }
        }
    }
    if failed.is_empty() {
        Ok(Outcome::ok())
    } else {
        let names: Vec<_> = failed.iter().map(|(n, r)| json!({ "check": n, "detail": r.clone().unwrap_err() })).collect();
        Ok(Outcome::failed(json!({ "error": "selftest", "failed": names })))
    }
}

fn presentation(max_n: u8) -> Result<String, String> {
    let mut count = 0;
    for n in 2..=max_n {
        let t = |j| CoverElement::generator(n, j);
        let z = CoverElement::z(n);
        for j in 1..n {
            let mut ok = t(j).mul(&t(j)) == z;
            if j + 1 < n {
                ok &= t(j).mul(&t(j + 1)).pow(3) == z;
            }
            for k in j + 2..n {
                ok &= t(j).mul(&t(k)).pow(2) == z;
            }
            if !ok {
                return Err(format!("relation at t_{j} fails in n = {n}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} generator relations, n <= {max_n}"))
}

fn mod_eight(max_k: u32) -> Result<String, String> {
    for k in 2..=max_k {
        let pi = canonical_word(&Partition::new(vec![k])).pow(k).evaluate();
        let trivial = pi.is_identity();
        if !(trivial || pi.is_minus_identity()) || trivial != matches!(k % 8, 0 | 1 | 6 | 7) {
            return Err(format!("k-th power of the k-cycle lift, k = {k}"));
        }
    }
    Ok(format!("k-cycle lifts, k <= {max_k}"))
}

fn orthogonality(max_n: u32) -> Result<String, String> {
    for group in [Group::S, Group::A] {
        for n in 1..=max_n {
            let t = build_table(group, n).map_err(|e| format!("{}~{n}: {e}", group.letter()))?;
            t.verify().map_err(|e| format!("{}~{n}: {e}", group.letter()))?;
            // every class representative lies in its class
            for c in t.classes() {
                let g = label_rep(c);
                if spinpoly_core::covergroup::class_of(&g, group).map_err(|e| e.to_string())? != *c {
                    return Err(format!("representative of {c} in {}~{n}", group.letter()));
                }
            }
        }
    }
    Ok(format!("S~n and A~n tables, n <= {max_n}"))
}

fn lr_commutativity(max_n: u32) -> Result<String, String> {
    let mut count = 0;
    for n in 1..=max_n {
        for lambda in strict_partitions(n) {
            for a in 0..=n {
                for mu in strict_partitions(a) {
                    for nu in strict_partitions(n - a) {
                        if shifted_lr(&lambda, &mu, &nu) != shifted_lr(&lambda, &nu, &mu) {
                            return Err(format!("f^{lambda}_{{{mu},{nu}}}"));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} coefficient pairs, |lambda| <= {max_n}"))
}
