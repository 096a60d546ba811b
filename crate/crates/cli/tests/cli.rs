use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn satmut(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satmut"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn partitions(v: &Value) -> Vec<Vec<u64>> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn scan_reports_exceptions_through_six() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["--output", "structured", "scan", "--max-size", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    let sym = partitions(&v["exceptional"]["sym"]);
    let ext = partitions(&v["exceptional"]["ext"]);
    let mut want_sym = vec![vec![4, 2], vec![2, 2, 1, 1], vec![3, 2, 1]];
    want_sym.sort();
    let mut sorted = sym.clone();
    sorted.sort();
    assert_eq!(sorted, want_sym);
    assert_eq!(ext, vec![vec![3, 2, 1]]);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["size"] == 6));
}

#[test]
fn scan_small_sizes_are_empty() {
    let dir = tempfile::tempdir().unwrap();
    for n in ["1", "5"] {
        let out = satmut(dir.path(), &["--output", "structured", "scan", "--max-size", n]);
        assert_eq!(out.status.code(), Some(0), "{n}");
        assert!(json(&out)["entries"].as_array().unwrap().is_empty());
    }
    let out = satmut(dir.path(), &["scan", "--max-size", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn hooks_have_no_repeats() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["hooks", "--max-size", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no repeated summands"));
}

#[test]
fn mixed_two_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["--output", "structured", "mixed"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let dec: Vec<(Vec<u64>, u64)> = v["decomposition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (serde_json::from_value::<Vec<u64>>(e["partition"].clone()).unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    let total: u64 = dec.iter().map(|(p, m)| m * dim3(p)).sum();
    assert_eq!(total, 81);
    assert!(dec.contains(&(vec![4, 2], 1)));
}

fn dim3(p: &[u64]) -> u64 {
    let (a, b) = match p {
        [] => (0, 0),
        [x] => (*x, 0),
        [x, y] => (x - y, *y),
        [x, y, z] => (x - y, y - z),
        _ => panic!("not an sl3 weight"),
    };
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

#[test]
fn pointwise_build_then_cache_verify_detects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["--output", "structured", "build", "--strategy", "pointwise"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["dims"]["M"], 27);
    assert_eq!(v["m1m2_split"], serde_json::json!([27, 8, 1]));
    assert_eq!(v["r_mm_nnz"], 5696);
    assert_eq!(v["r_mm_intertwines"], true);
    let names: Vec<String> = serde_json::from_value(v["cache_entries"].clone()).unwrap();
    assert_eq!(names.len(), 3);

    let out = satmut(dir.path(), &["cache", "verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("ok")).count(), 3);

    // a second build is served from the cache
    let again = satmut(dir.path(), &["--output", "structured", "build", "--strategy", "pointwise"]);
    assert_eq!(json(&again), v);

    let victim = &names[1];
    let path = dir.path().join(format!("{victim}.txt"));
    let mut text = std::fs::read_to_string(&path).unwrap();
    text.push_str("0 0 1\n");
    std::fs::write(&path, text).unwrap();
    let out = satmut(dir.path(), &["cache", "verify"]);
    assert_eq!(out.status.code(), Some(2));
    let report = stdout(&out);
    assert!(report.lines().any(|l| l.starts_with("BAD") && l.contains(victim.as_str())), "{report}");

    let out = satmut(dir.path(), &["build", "--strategy", "pointwise"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(victim.as_str()));

    let out = satmut(dir.path(), &["cache", "clear"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&satmut(dir.path(), &["cache", "list"])).contains("empty"));
}

#[test]
fn pointwise_certify_is_seed_independent_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |seed: &str| satmut(dir.path(), &["--output", "structured", "certify", "--strategy", "pointwise", "--seed", seed]);
    let (one, two, again) = (run("1"), run("2"), run("1"));
    for o in [&one, &two, &again] {
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(one.stdout, again.stdout);
    let (a, b) = (json(&one), json(&two));
    assert_eq!(a["interpolated_polynomial"], b["interpolated_polynomial"]);
    assert_eq!(a["quotient_form"], "unit");
    assert_eq!(a["sign"], -1);
    assert_eq!(a["monomial_exponent"], -188);
    assert!(a.get("wall_time").is_none());
}

#[test]
fn text_certify_reports_pass() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["certify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("certification: PASS"));
    assert!(text.contains("unit: -a^-188"));
}

#[test]
fn symbolic_build_via_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["--output", "structured", "build", "--strategy", "symbolic"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["mode"], "symbolic");
    assert_eq!(v["dims"]["M"], 27);
    assert_eq!(v["r_mm_nnz"], 5696);
    let again = satmut(dir.path(), &["--output", "structured", "build", "--strategy", "symbolic"]);
    assert_eq!(json(&again), v);
}

#[test]
fn bad_arguments_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = satmut(dir.path(), &["certify", "--strategy", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
