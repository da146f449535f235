use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn spinpoly(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinpoly"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .env_remove("SPINPOLY_CACHE_DIR")
        .output()
        .expect("run spinpoly")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr_record(o: &Output) -> Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    serde_json::from_str(text.lines().last().expect("a failure record")).expect("json record")
}

#[test]
fn chartable_rows_for_n5() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["chartable", "--group", "S", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().skip(3).map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    assert_eq!(rows, ["(5)", "(4,1)+", "(4,1)-", "(3,2)+", "(3,2)-"]);
}

#[test]
fn chartable_n1_is_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["--format", "json", "chartable", "--group", "S", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
    assert_eq!(doc["rows"][0]["values"], serde_json::json!(["1", "-1"]));
}

#[test]
fn warm_cache_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    for fmt in ["table", "json", "csv"] {
        let args = ["--format", fmt, "chartable", "--group", "A", "--n", "7"];
        let cold = spinpoly(dir.path(), &args);
        let warm = spinpoly(dir.path(), &args);
        assert_eq!(cold.status.code(), Some(0));
        assert_eq!(cold.stdout, warm.stdout, "{fmt}");
    }
    assert!(dir.path().join("A7.v1.json").is_file());
}

#[test]
fn corrupt_or_foreign_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["chartable", "--group", "S", "--n", "6"];
    let clean = spinpoly(dir.path(), &args).stdout;
    let path = dir.path().join("S6.v1.json");
    let good = fs::read_to_string(&path).unwrap();

    fs::write(&path, &good[..good.len() / 2]).unwrap();
    assert_eq!(spinpoly(dir.path(), &args).stdout, clean);
    assert_eq!(fs::read_to_string(&path).unwrap(), good);

    // a wrong value is caught by the certification on load
    fs::write(&path, good.replacen("\"-1\"", "\"-2\"", 1)).unwrap();
    assert_eq!(spinpoly(dir.path(), &args).stdout, clean);
    assert_eq!(fs::read_to_string(&path).unwrap(), good);

    // the S5 table stored under the S6 key
    spinpoly(dir.path(), &["chartable", "--group", "S", "--n", "5"]);
    fs::copy(dir.path().join("S5.v1.json"), &path).unwrap();
    assert_eq!(spinpoly(dir.path(), &args).stdout, clean);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_spinpoly"))
        .args(["chartable", "--group", "S", "--n", "3"])
        .env("SPINPOLY_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("S3.v1.json").is_file());
}

#[test]
fn unwritable_cache_fails_with_record() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("not-a-dir");
    fs::write(&file, "x").unwrap();
    let o = spinpoly(&file, &["chartable", "--group", "S", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_record(&o)["error"], "cache");
}

fn minpoly_fields(dir: &Path, args: &[&str]) -> Value {
    let mut all = vec!["--format", "json", "minpoly"];
    all.extend_from_slice(args);
    let o = spinpoly(dir, &all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn minpoly_examples() {
    let dir = tempfile::tempdir().unwrap();
    let v = minpoly_fields(dir.path(), &["--group", "S", "--n", "5", "--lambda", "5", "--mu", "5", "--sign", "+"]);
    assert_eq!(v["computed"], "(x^5 + 1)/(x + 1)");
    assert_eq!(v["expanded"], "x^4 - x^3 + x^2 - x + 1");
    assert_eq!(v["verdict"], "match");

    let v = minpoly_fields(
        dir.path(),
        &["--group", "S", "--n", "6", "--lambda", "3,2,1", "--assoc", "+", "--mu", "6", "--sign", "+"],
    );
    assert_eq!(v["computed"], "(x^6 - 1)/(x^2 - 1)");
    assert_eq!(v["verdict"], "match");

    let v = minpoly_fields(dir.path(), &["--group", "A", "--n", "7", "--lambda", "4,2,1", "--mu", "1^7", "--sign", "+"]);
    assert_eq!(v["computed"], "(x - 1)");
    assert!(v["spectrum"].as_str().unwrap().starts_with("E(1)^0:"));
}

#[test]
fn minpoly_paper_notation_folds_signs() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(
        dir.path(),
        &["--paper-notation", "minpoly", "--group", "S", "--n", "5", "--lambda", "5", "--mu", "5", "--sign", "+"],
    );
    assert!(stdout(&o).lines().any(|l| l.starts_with("paper") && l.ends_with("(x^5 ± 1)/(x ± 1)")));
}

#[test]
fn invalid_labels_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["minpoly", "--group", "S", "--n", "5", "--lambda", "3,1,1", "--mu", "5", "--sign", "+"],
        &["minpoly", "--group", "S", "--n", "5", "--lambda", "5", "--mu", "5"],
        &["minpoly", "--group", "A", "--n", "5", "--lambda", "5", "--mu", "4,1", "--sign", "+"],
        &["minpoly", "--group", "S", "--n", "5", "--lambda", "4,1", "--assoc", "plain", "--mu", "5", "--sign", "+"],
        &["chartable", "--group", "S", "--n", "12"],
    ];
    for args in cases {
        let o = spinpoly(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_record(&o)["error"], "usage");
    }
    assert_eq!(spinpoly(dir.path(), &["chartable", "--group", "B", "--n", "3"]).status.code(), Some(2));
    assert_eq!(spinpoly(dir.path(), &["--workers", "0", "selftest"]).status.code(), Some(2));
}

#[test]
fn verify_clean_range_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["--format", "json", "verify", "--group", "S", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 100);
    for l in &lines {
        let keys: Vec<&str> = l.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 7);
        for k in ["n", "lambda", "assoc", "class", "computed", "predicted", "match"] {
            assert!(keys.contains(&k));
        }
        assert_eq!(l["match"], true);
    }
}

#[test]
fn verify_reports_table_errata() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["verify", "--group", "S", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(1));
    let rec = stderr_record(&o);
    assert_eq!(rec["error"], "mismatch");
    let ns: Vec<u64> = rec["cells"].as_array().unwrap().iter().map(|c| c["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, [3, 3, 6, 6, 6, 6]);
}

#[test]
fn verify_output_does_not_depend_on_workers() {
    let dir = tempfile::tempdir().unwrap();
    let one = spinpoly(dir.path(), &["--workers", "1", "--format", "csv", "verify", "--group", "A", "--n-max", "9"]);
    let four = spinpoly(dir.path(), &["--workers", "4", "--format", "csv", "verify", "--group", "A", "--n-max", "9"]);
    assert_eq!(one.stdout, four.stdout);
    let mut r = csv::Reader::from_reader(&one.stdout[..]);
    assert_eq!(r.headers().unwrap().len(), 7);
    assert!(r.records().count() > 500);
}

#[test]
fn exceptions_for_a10() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["--format", "json", "exceptions", "--group", "A", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let computed = doc["computed"].as_array().unwrap();
    assert!(computed.iter().any(|c| c["row"] == "(10)" && c["class"] == "(5,2^2,1)" && c["polynomial"] == "(x^10 + 1)/(x^2 + 1)"));
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 19);
    assert!(entries.iter().any(|e| e["entry"] == "(x^10+1)/(x^2+1)" && e["status"].as_str().unwrap().starts_with("matched")));
}

#[test]
fn exceptions_table_s8_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["exceptions", "--group", "S", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "agreement: yes"));
}

#[test]
fn selftest_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinpoly(dir.path(), &["--format", "json", "selftest"]);
    assert_eq!(o.status.code(), Some(0));
    for l in stdout(&o).lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["passed"], true, "{l}");
    }
}
