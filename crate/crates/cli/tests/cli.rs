use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use azumaya_core::report::{Report, Status};
use serde_json::Value;
use tempfile::TempDir;

fn azumaya(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_azumaya")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn json_report(out: &Output) -> Report {
    Report::from_json(&String::from_utf8_lossy(&out.stdout)).expect("stdout is a JSON report")
}

#[test]
fn classify_symplectic_gram() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "w.json", r#"[["0", "-1"], ["1", "0"]]"#);
    let out = azumaya(&["classify", "--gram", &g, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(r.results["type"], Value::from("symplectic"));
    assert_eq!(r.results["fixed_dimension"], Value::from(1));
    assert_eq!(r.overall, Status::Pass);
}

#[test]
fn classify_hermitian_gram_over_gf25() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "h.json", r#"[["1", "0"], ["0", "1"]]"#);
    let out = azumaya(&["classify", "--gram", &g, "--field", "gf:5^2", "--conjugate", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_report(&out).results["type"], Value::from("unitary"));
}

#[test]
fn mathematical_failure_exits_one_with_a_failing_report() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.json", r#"[["1", "1"], ["0", "1"]]"#);
    let out = azumaya(&["classify", "--gram", &g, "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json_report(&out);
    assert_eq!(r.overall, Status::Fail);
    let failed = r.checks.iter().find(|c| c.status == Status::Fail).unwrap();
    assert!(failed.witness.is_some());

    let t = write(&dir, "t.json", r#"{"a": [[["1","0"],["0","0"]], [["0","0"],["0","1"]]]}"#);
    let out = azumaya(&["fiber", "--kind", "o", "--tuple", &t, "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_report(&out).overall, Status::Fail);
}

#[test]
fn operational_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("absent.json");
    let out = azumaya(&["classify", "--gram", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));

    let bad = write(&dir, "bad.json", r#"[["1", "2 +"], ["0", "1"]]"#);
    let out = azumaya(&["classify", "--gram", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("entry (0, 1)"));

    assert_eq!(azumaya(&["verify-sphere", "--field", "gf:4"]).status.code(), Some(2));
    assert_eq!(azumaya(&["verify-sphere", "--field", "gf:7"]).status.code(), Some(2));
    assert_eq!(azumaya(&["frobnicate"]).status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn same_seed_gives_identical_bytes_and_reports_round_trip() {
    let dir = TempDir::new().unwrap();
    let paths: Vec<String> = (0..2).map(|i| dir.path().join(format!("r{i}.json")).to_str().unwrap().to_string()).collect();
    for p in &paths {
        let out = azumaya(&["verify-sphere", "--samples", "20", "--seed", "7", "--format", "json", "--output", p]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = fs::read(&paths[0]).unwrap();
    assert_eq!(a, fs::read(&paths[1]).unwrap());
    let text = String::from_utf8(a).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.seed, 7);
    assert_eq!(r.to_json(), text);
}

#[test]
fn parallel_report_matches_sequential() {
    let seq = azumaya(&["verify-sphere", "--samples", "30", "--format", "json"]);
    let par = azumaya(&["verify-sphere", "--samples", "30", "--format", "json", "--parallel"]);
    assert_eq!(seq.status.code(), Some(0));
    assert_eq!(seq.stdout, par.stdout);

    let cseq = azumaya(&["coarse-type", "--sphere", "--tensor-power", "3", "--format", "json"]);
    let cpar = azumaya(&["coarse-type", "--sphere", "--tensor-power", "3", "--format", "json", "--parallel"]);
    assert_eq!(cseq.status.code(), Some(0));
    assert_eq!(cseq.stdout, cpar.stdout);
}

#[test]
fn text_output_lists_checks() {
    let out = azumaya(&["verify-sphere", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().any(|l| l.starts_with("[PASS] coarse_type")));
    assert!(text.contains("overall: pass"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn coarse_type_of_twists() {
    let dir = TempDir::new().unwrap();
    let diag = write(&dir, "d.json", r#"[["1", "0"], ["0", "x0"]]"#);
    let w = write(&dir, "w.json", r#"[["0", "-1"], ["1", "0"]]"#);
    for (path, sign) in [(&diag, 1), (&w, -1)] {
        let out = azumaya(&["coarse-type", "--twist", path, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let r = json_report(&out);
        assert_eq!(r.results["coarse_type"]["p"], Value::from(sign));
        assert_eq!(r.results["coarse_type"]["q"], Value::from(sign));
    }
    let out = azumaya(&["coarse-type", "--twist", &w, "--tensor-power", "2", "--format", "json"]);
    assert_eq!(json_report(&out).results["coarse_type"]["q"], Value::from(1));
}

#[test]
fn ordinary_check_and_generate_test() {
    let dir = TempDir::new().unwrap();
    let w = write(&dir, "w.json", r#"[["0", "-1"], ["1", "0"]]"#);
    let out = azumaya(&["ordinary-check", "--twist", &w, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_report(&out).results["factor"], Value::from("4"));

    let t = write(&dir, "t.json", r#"{"a": [[["0","1"],["0","0"]], [["0","0"],["1","0"]]]}"#);
    let out = azumaya(&["generate-test", "--tuple", &t, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_report(&out).results["generates"], Value::Bool(true));
}

#[test]
fn fiber_kinds_with_default_generators() {
    for (kind, ty) in [("o", "orthogonal"), ("s", "symplectic")] {
        let out = azumaya(&["fiber", "--kind", kind, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json_report(&out).results["type"], Value::from(ty));
    }
}

#[test]
fn unwritable_output_exits_two() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("missing").join("r.json");
    let out = azumaya(&["fiber", "--kind", "o", "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!Path::new(&target).exists());
}
