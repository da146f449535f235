//! Acceptance criteria A1-A10, one PASS/FAIL line each.
//!
//! Red criteria are reported, not asserted, so that `cargo test` stays
//! usable; set SPINPOLY_STRICT_ACCEPTANCE=1 to turn any FAIL into a
//! non-zero exit.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spinpoly::sweep::{parallel_verify, pool};
use spinpoly_core::covergroup::{
    canonical_word, class_epsilon, class_of, classes, label_rep, ClassLabel, CoverElement, Group, Word,
};
use spinpoly_core::exactnum::{CycNum, Rational};
use spinpoly_core::minpoly::{
    compare_exceptions, compose_spectra, spectrum, spectrum_from_values, EntryStatus, ExceptionComparison,
    ExceptionTable, PowerMaps, RootSet, Sweep,
};
use spinpoly_core::partitions::{dominant_complement_traced, dominant_partition, strict_partitions, Parity, Partition, RepairStep, Sign, StrictPartition};
use spinpoly_core::qtableaux::shifted_lr;
use spinpoly_core::spinchars::{
    build_table, c_lambda, induce_and_decompose, row_assocs, Assoc, BlockTables, ParabolicCharacter, RowLabel,
    SpinCharacterTable,
};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn within(t: Duration, limit_s: u64) -> bool {
    t.as_secs() < limit_s
}

fn summarize(items: &[String], max: usize) -> String {
    let mut s = items.iter().take(max).cloned().collect::<Vec<_>>().join("; ");
    if items.len() > max {
        s.push_str(&format!("; ... {} more", items.len() - max));
    }
    s
}

/// What went wrong in one table comparison, one string per problem.
fn problems(cmp: &ExceptionComparison) -> Vec<String> {
    let mut out = Vec::new();
    for o in &cmp.outcomes {
        if o.as_expected() {
            continue;
        }
        let why = match &o.status {
            EntryStatus::Matched { .. } => "flagged typo matched".to_string(),
            EntryStatus::Mismatched { .. } => "mismatched".to_string(),
            EntryStatus::Invalid(_) => "no such class".to_string(),
        };
        out.push(format!("{}{} {}{} at n={}: {why}", o.entry.lambda, o.entry.assoc.suffix(), o.entry.mu, o.entry.class_sign.suffix(), cmp.n));
    }
    for (r, c, _) in &cmp.unlisted {
        out.push(format!("{r} at {c} (n={}) unlisted", cmp.n));
    }
    for (r, c) in &cmp.spurious {
        out.push(format!("{r} at {c} (n={}) not exceptional", cmp.n));
    }
    out
}

fn table_reproduction(group: Group, max_n: u32, limit_s: u64) -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut typos = 0;
    let mut entries = 0;
    for n in 1..=max_n {
        let t = build_table(group, n).expect("table");
        let sweep = Sweep::run(&t).expect("sweep");
        let cmp = compare_exceptions(&sweep, ExceptionTable::embedded());
        entries += cmp.outcomes.len();
        typos += cmp.outcomes.iter().filter(|o| o.entry.typo && !o.matched()).count();
        bad.extend(problems(&cmp));
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && within(t, limit_s);
    let detail = if bad.is_empty() {
        format!("{entries} entries, {typos} flagged typos unmatched, {:.1}s", t.as_secs_f64())
    } else {
        format!("{} discrepancies beyond flagged typos: {} ({:.1}s)", bad.len(), summarize(&bad, 4), t.as_secs_f64())
    };
    verdict(pass, detail)
}

fn a1() -> Verdict {
    table_reproduction(Group::S, 8, 60)
}

fn a2() -> Verdict {
    table_reproduction(Group::A, 10, 600)
}

fn a3() -> Verdict {
    let start = Instant::now();
    let p = pool(4).expect("pool");
    let mut cells = 0;
    let mut bad = Vec::new();
    for n in 9..=11 {
        let t = build_table(Group::S, n).expect("table");
        let report = parallel_verify(&t, &p).expect("verify");
        cells += report.records.len();
        bad.extend(report.mismatches().map(|r| format!("n={n} {} at {}", r.row, r.class)));
    }
    let t = start.elapsed();
    verdict(
        bad.is_empty() && within(t, 600),
        if bad.is_empty() {
            format!("{cells} cells, 0 mismatches, {:.1}s with 4 workers", t.as_secs_f64())
        } else {
            format!("{} mismatches: {}", bad.len(), summarize(&bad, 4))
        },
    )
}

/// Items 1-6 of the n-cycle theorem in the exception-data line format. For
/// item 2 the ± is read with the class sign fixed, as in the worked example
/// "φ_(4)^± at (4)^+ gives x² ∓ √2x + 1".
const N_CYCLE_ITEMS: &str = "\
S 3 | (3) | (3) pm | x^2 mp x + 1 | class
S 4 | (4) pm | (4) + | x^2 mp sqrt(2)*x + 1 | assoc
S 4 | (4) pm | (4) - | x^2 pm sqrt(2)*x + 1 | assoc
S 5 | (5) | (5) pm | (x^5 pm 1)/(x pm 1) | class
S 6 | (6) pm | (6) + | (x^6-1)/((x-(1 pm sqrt(-3))/2)*(x-(-1 pm sqrt(-3))/2)) | assoc
S 6 | (6) pm | (6) - | (x^6-1)/((x-(1 mp sqrt(-3))/2)*(x-(-1 mp sqrt(-3))/2)) | assoc
S 8 | (8) pm | (8) + | (x^8-1)/(x pm 1) | assoc
S 8 | (8) pm | (8) - | (x^8-1)/(x mp 1) | assoc
S 3 | (2,1) pm | (3) pm | x pm 1 | class
";

fn a4() -> Verdict {
    let items = ExceptionTable::parse(N_CYCLE_ITEMS).expect("item encoding");
    let mut bad = Vec::new();
    let mut matched = 0;
    for n in 1..=8 {
        let t = build_table(Group::S, n).expect("table");
        let powers = PowerMaps::new(&t).expect("power maps");
        let cycle = Partition::new(vec![n]);
        let pairs: Vec<(usize, usize)> =
            Sweep::all_pairs(&t).into_iter().filter(|&(_, c)| t.classes()[c].cycle_type == cycle).collect();
        let sweep = Sweep { group: Group::S, n, cells: Sweep::cells_for(&t, &powers, pairs).expect("cells") };
        let cmp = compare_exceptions(&sweep, &items);
        matched += cmp.outcomes.iter().filter(|o| o.matched()).count();
        bad.extend(problems(&cmp));
    }
    verdict(
        bad.is_empty(),
        if bad.is_empty() {
            format!("all {matched} item cells match, no other exceptions at (n)-cycles")
        } else {
            format!("{matched}/9 item lines match; {}", summarize(&bad, 6))
        },
    )
}

fn inner(t: &SpinCharacterTable, a: &[CycNum], b: &[CycNum]) -> CycNum {
    let mut acc = CycNum::zero();
    for ((x, y), size) in a.iter().zip(b).zip(t.sizes()) {
        acc = acc + (x * &y.conjugate()).scale(&Rational::from_integer(size.clone().into()));
    }
    acc.scale(&Rational::new(1.into(), t.order().into()))
}

fn certify(t: &SpinCharacterTable) -> Result<(), String> {
    let name = format!("{}{}", t.group().letter(), t.n());
    for (i, a) in t.rows().iter().enumerate() {
        for b in &t.rows()[i..] {
            let want = if a.label == b.label { CycNum::one() } else { CycNum::zero() };
            if inner(t, &a.values, &b.values) != want {
                return Err(format!("{name}: <{}, {}>", a.label, b.label));
            }
        }
    }
    // spin columns: Σ_χ χ(g) conj χ(h) = |C(g)|/2 (δ_{g,h} − δ_{g,zh}) over spin χ
    let order = t.order();
    for (c, g) in t.classes().iter().enumerate() {
        let zg = g.times_z();
        for (d, h) in t.classes().iter().enumerate() {
            let mut sum = CycNum::zero();
            for r in t.rows() {
                sum = sum + &r.values[c] * &r.values[d].conjugate();
            }
            let half = Rational::new((&order / &t.sizes()[c]).into(), 2.into());
            let want = if zg == *g {
                Rational::from_integer(0.into())
            } else if h == g {
                half
            } else if *h == zg {
                -half
            } else {
                Rational::from_integer(0.into())
            };
            if sum != CycNum::from_rational(want) {
                return Err(format!("{name}: columns {g}, {h}"));
            }
        }
        if t.group() == Group::S {
            let mu = &g.cycle_type;
            let allowed = mu.is_all_odd() || (mu.is_strict() && mu.even_part_count() % 2 == 1);
            if !allowed && t.rows().iter().any(|r| !r.values[c].is_zero()) {
                return Err(format!("{name}: non-zero at {g}"));
            }
        }
    }
    Ok(())
}

fn a5() -> Verdict {
    let mut bad = Vec::new();
    let mut count = 0;
    for (group, max) in [(Group::S, 11), (Group::A, 10)] {
        for n in 1..=max {
            let t = build_table(group, n).expect("table");
            if let Err(e) = certify(&t) {
                bad.push(e);
            }
            count += 1;
        }
    }
    verdict(bad.is_empty(), if bad.is_empty() { format!("{count} tables certified") } else { summarize(&bad, 4) })
}

fn first_row(lambda: &StrictPartition, n: u32) -> RowLabel {
    RowLabel::new(lambda.clone(), row_assocs(Group::S, n, lambda)[0])
}

fn a6() -> Verdict {
    let blocks: Vec<BlockTables> = (1..=8).map(|m| BlockTables::build(m).expect("block")).collect();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=9u32 {
        let table = build_table(Group::S, n).expect("table");
        for m in 1..n {
            for mu in strict_partitions(m) {
                for nu in strict_partitions(n - m) {
                    let pc = ParabolicCharacter::new(vec![first_row(&mu, m), first_row(&nu, n - m)]);
                    let b = [&blocks[m as usize - 1], &blocks[(n - m) as usize - 1]];
                    let dec = induce_and_decompose(&pc, &b, &table).expect("induction");
                    let union = mu.as_partition().union(nu.as_partition());
                    // "odd" for a partition: n − ℓ odd, i.e. an odd number of even parts
                    let c_union = if union.even_part_count() % 2 == 1 { CycNum::sqrt2() } else { CycNum::one() };
                    for lam in strict_partitions(n) {
                        let got: Vec<Rational> = row_assocs(Group::S, n, &lam)
                            .iter()
                            .map(|&a| dec.get(&RowLabel::new(lam.clone(), a)).cloned().unwrap_or_default())
                            .collect();
                        checked += 1;
                        let f = shifted_lr(&lam, &mu, &nu);
                        if lam.is_odd() && &union == lam.as_partition() {
                            // one associate gets the whole multiplicity
                            let mut g = got.clone();
                            g.sort();
                            if g != vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())] {
                                bad.push(format!("{mu}×{nu}→{lam}"));
                            }
                            continue;
                        }
                        let e = mu.len() as i64 + nu.len() as i64 - lam.len() as i64;
                        let two = CycNum::sqrt2().pow(e.unsigned_abs() as u32);
                        let scaled = if e >= 0 { two } else { two.inv().expect("non-zero") };
                        let denom = &c_lambda(&lam) * &c_union;
                        let want = (&CycNum::from_i64(f as i64) * &scaled).checked_div(&denom).expect("non-zero");
                        if got.iter().any(|g| CycNum::from_rational(g.clone()) != want) {
                            bad.push(format!("{mu}×{nu}→{lam}: got {got:?}, formula {want}"));
                        }
                    }
                }
            }
        }
    }
    verdict(
        bad.is_empty(),
        if bad.is_empty() { format!("{checked} (μ, ν, λ) multiplicities, n <= 9") } else { summarize(&bad, 3) },
    )
}

fn a7() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 2..=12u8 {
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
                bad.push(format!("relations at t{j}, n={n}"));
            }
        }
    }
    for m in 2..=12u32 {
        for a in 1..=2u8 {
            let n = a + m as u8;
            // powers through words: one generator at a time is far cheaper
            // than squaring dense Clifford elements
            let u = Word::new(n, (a..a + m as u8).collect(), false);
            let v = Word::new(n, (a..a + m as u8 - 1).collect(), false);
            let e = m * (m * m + 4 - 3 * m) / 2;
            let v = v.pow(m).evaluate();
            let rhs = if e % 2 == 1 { v.neg() } else { v };
            if u.pow(m + 1).evaluate() != rhs {
                bad.push(format!("sign of powers, m={m}, a={a}"));
            }
        }
    }
    for k in 2..=16u32 {
        let pi = canonical_word(&Partition::new(vec![k])).pow(k).evaluate();
        let want_trivial = matches!(k % 8, 0 | 1 | 6 | 7);
        if !(pi.is_identity() && want_trivial || pi.is_minus_identity() && !want_trivial) {
            bad.push(format!("mod 8, k={k}"));
        }
    }
    let sigma = canonical_word(&Partition::new(vec![15]));
    if sigma.gens != (1..=14).collect::<Vec<u8>>() || sigma.z {
        bad.push(format!("σ_(15)^+ is not t1⋯t14"));
    }
    if !sigma.pow(15).evaluate().is_identity() {
        bad.push("σ^15 ≠ 1".into());
    }
    if !sigma.clone().times_z().pow(15).evaluate().is_minus_identity() {
        bad.push("(zσ)^15 ≠ z".into());
    }
    let three = class_of(&sigma.pow(3).evaluate(), Group::S).expect("class");
    let want = ClassLabel::new(Group::S, Partition::new(vec![5, 5, 5]), Some(Sign::Minus), None).expect("label");
    if three != want {
        bad.push(format!("σ^3 ∈ {three}"));
    }
    let five = class_of(&sigma.pow(5).evaluate(), Group::S).expect("class");
    let t = start.elapsed();
    verdict(
        bad.is_empty() && within(t, 60),
        if bad.is_empty() {
            format!("relations n<=12, powers m<=12, mod 8 k<=16, σ^3 ∈ {three}, σ^5 ∈ {five}, {:.1}s", t.as_secs_f64())
        } else {
            summarize(&bad, 4)
        },
    )
}

fn a8() -> Verdict {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for n in 1..=9 {
        for lam in strict_partitions(n) {
            for a in 0..=n {
                for mu in strict_partitions(a) {
                    for nu in strict_partitions(n - a) {
                        pairs += 1;
                        if shifted_lr(&lam, &mu, &nu) != shifted_lr(&lam, &nu, &mu) {
                            bad.push(format!("f^{lam}_{{{mu},{nu}}} not symmetric"));
                        }
                    }
                }
            }
        }
    }
    let lam: StrictPartition = "3,2,1".parse().unwrap();
    let mu: StrictPartition = "2,1".parse().unwrap();
    for nu in strict_partitions(3) {
        let f = shifted_lr(&lam, &mu, &nu);
        if f != 0 {
            bad.push(format!("f^(3,2,1)_{{(2,1),{nu}}} = {f}, stated 0"));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut constructive = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let all = strict_partitions(n);
        let lam = &all[rng.gen_range(0..all.len())];
        let m = rng.gen_range(1..=n);
        let alpha = dominant_partition(lam, m).expect("dominant");
        match dominant_complement_traced(lam, &alpha, true) {
            Ok(c) => {
                if c.nu.n() != n - m || shifted_lr(lam, &alpha, &c.nu) == 0 {
                    bad.push(format!("complement of {alpha} in {lam}"));
                }
                if !c.steps.contains(&RepairStep::Fallback) {
                    constructive += 1;
                }
            }
            Err(e) => bad.push(format!("{lam}, m={m}: {e}")),
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{pairs} symmetric pairs checked; 500 random complements ({constructive} constructive){}",
            if bad.is_empty() { String::new() } else { format!("; {}", summarize(&bad, 3)) }
        ),
    )
}

fn is_even(x: &CoverElement) -> bool {
    x.parity() == Parity::Even
}

fn fine_class(x: &CoverElement) -> ClassLabel {
    class_of(x, if is_even(x) { Group::A } else { Group::S }).expect("class")
}

fn identity_class(m: u32) -> ClassLabel {
    classes(Group::S, m).into_iter().find(|c| label_rep(c).is_identity()).expect("identity")
}

/// The reduced Clifford products making up W for the pair (U, V).
fn w_components(u: &RowLabel, v: &RowLabel) -> Vec<ParabolicCharacter> {
    let sa = |r: &RowLabel| r.assoc == Assoc::Plain;
    let other = |r: &RowLabel| RowLabel::new(r.lambda.clone(), r.assoc.swap());
    let mut out = vec![ParabolicCharacter::new(vec![u.clone(), v.clone()])];
    match (sa(u), sa(v)) {
        (true, false) => out.push(ParabolicCharacter::new(vec![u.clone(), other(v)])),
        (false, true) => out.push(ParabolicCharacter::new(vec![other(u), v.clone()])),
        _ => {}
    }
    out
}

fn a9() -> Verdict {
    let blocks: Vec<BlockTables> = (1..=8).map(|m| BlockTables::build(m).expect("block")).collect();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=9u32 {
        for m1 in 1..n {
            let m2 = n - m1;
            let (b1, b2) = (&blocks[m1 as usize - 1], &blocks[m2 as usize - 1]);
            let fine1: Vec<ClassLabel> = spinpoly_core::spinchars::fine_classes(b1).into_iter().map(|(c, _)| c).collect();
            let fine2: Vec<ClassLabel> = spinpoly_core::spinchars::fine_classes(b2).into_iter().map(|(c, _)| c).collect();
            let (id1, id2) = (identity_class(m1), identity_class(m2));
            for c1 in &fine1 {
                for c2 in &fine2 {
                    let shape = ParabolicCharacter::new(vec![
                        RowLabel::new(StrictPartition::new(vec![m1]).unwrap(), Assoc::Plain),
                        RowLabel::new(StrictPartition::new(vec![m2]).unwrap(), Assoc::Plain),
                    ]);
                    let g = shape.element_word(&[c1.clone(), c2.clone()]).evaluate();
                    let e1 = shape.element_word(&[c1.clone(), id2.clone()]).evaluate();
                    let e2 = shape.element_word(&[id1.clone(), c2.clone()]).evaluate();
                    let (p1, p2) = (label_rep(c1), label_rep(c2));
                    let (d1, d2) = (!is_even(&p1), !is_even(&p2));
                    let k = c1.cycle_type.union(&c2.cycle_type).lcm();
                    let order = if g.pow(k).is_identity() { k } else { 2 * k };
                    // (π1π2)^i = z^{d1 d2 i(i−1)/2} π1^i π2^i
                    let sign = |i: u64| d1 && d2 && (i * (i.saturating_sub(1)) / 2) % 2 == 1;
                    for i in 0..order {
                        let rhs = e1.pow(i).mul(&e2.pow(i));
                        let rhs = if sign(i) { rhs.neg() } else { rhs };
                        if g.pow(i) != rhs {
                            bad.push(format!("power law at {c1}·{c2}, i={i}"));
                        }
                    }
                    let powers: Vec<(bool, ClassLabel, ClassLabel)> =
                        (0..order).map(|i| (sign(i), fine_class(&p1.pow(i)), fine_class(&p2.pow(i)))).collect();
                    for u in b1.s.rows().iter().map(|r| &r.label) {
                        for v in b2.s.rows().iter().map(|r| &r.label) {
                            let comps = w_components(u, v);
                            let values: Vec<CycNum> = powers
                                .iter()
                                .map(|(neg, f1, f2)| {
                                    let mut acc = CycNum::zero();
                                    for pc in &comps {
                                        acc = acc + pc.value(&[b1, b2], &[f1.clone(), f2.clone()]).expect("value");
                                    }
                                    if *neg { -&acc } else { acc }
                                })
                                .collect();
                            checked += 1;
                            let direct = match spectrum_from_values(&values, k) {
                                Ok(sp) => sp.support(),
                                Err(e) => {
                                    bad.push(format!("{u}⊗{v} at {c1}·{c2}: {e}"));
                                    continue;
                                }
                            };
                            let su = spectrum(&b1.s, u, &c1.to_s()).expect("Sp_U").support();
                            let sv = spectrum(&b2.s, v, &c2.to_s()).expect("Sp_V").support();
                            let sa = (u.assoc == Assoc::Plain, v.assoc == Assoc::Plain);
                            let composed = compose_spectra(&su, &sv, sa, (d1, d2));
                            if composed != direct {
                                bad.push(format!("{u}⊗{v} at {c1}·{c2}: table {composed}, direct {direct}"));
                            }
                        }
                    }
                }
            }
        }
    }
    verdict(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} (U, V, π1, π2) cases, n <= 9")
        } else {
            format!("{} of {checked} disagree: {}", bad.len(), summarize(&bad, 3))
        },
    )
}

fn a10() -> Verdict {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in (2..=10u32).step_by(2) {
        let t = build_table(Group::S, n).expect("table");
        let cycle = Partition::new(vec![n]);
        for g in t.classes().iter().filter(|c| c.cycle_type == cycle) {
            let full = RootSet::binomial(n as u64, class_epsilon(g));
            let mut by_lambda: BTreeMap<StrictPartition, RootSet> = BTreeMap::new();
            for r in t.rows() {
                let sp = spectrum(&t, &r.label, g).expect("spectrum").support();
                checked += 1;
                if sp.union(&sp.negate()) != full {
                    bad.push(format!("±Sp of {} at {g}", r.label));
                }
                let e = by_lambda.entry(r.label.lambda.clone()).or_insert_with(|| RootSet::from_angles([]));
                *e = e.union(&sp);
            }
            for (lam, u) in by_lambda {
                if u != full {
                    bad.push(format!("Sp ∪ Sp' of {lam} at {g}"));
                }
            }
        }
    }
    verdict(
        bad.is_empty(),
        if bad.is_empty() { format!("{checked} (row, (n)-class) spectra, even n <= 10") } else { summarize(&bad, 4) },
    )
}

fn main() {
    let criteria: [(&str, &str, fn() -> Verdict); 10] = [
        ("A1", "S~n exception table, n <= 8", a1),
        ("A2", "A~n exception tables, n <= 10", a2),
        ("A3", "classifier sweep, S~9..S~11", a3),
        ("A4", "exceptions at n-cycles, n <= 8", a4),
        ("A5", "character table certification", a5),
        ("A6", "induced multiplicities vs shifted LR, n <= 9", a6),
        ("A7", "cover group laws", a7),
        ("A8", "shifted LR combinatorics", a8),
        ("A9", "spectra of reduced Clifford products, n <= 9", a9),
        ("A10", "even n-cycle completeness, n <= 10", a10),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let v = f();
        if !v.pass {
            failed += 1;
        }
        println!("{id:<3} {} {name}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed > 0 && std::env::var_os("SPINPOLY_STRICT_ACCEPTANCE").is_some() {
        std::process::exit(1);
    }
}
