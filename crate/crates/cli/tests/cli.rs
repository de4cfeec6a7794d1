use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn genlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genlink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_lead_terms_for_a_single_row() {
    let o = genlink(&["generate", "1", "3", "iniJ"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "Y[1,1]*Y[2,2]*Y[3,3]\nx[1,1]*Y[1,1]\nx[1,2]*Y[2,2]\nx[1,3]*Y[3,3]\n"
    );
}

#[test]
fn generate_betti_csv_has_four_rows() {
    let o = genlink(&["generate", "2", "4", "betti", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "i,j,value\n1,3,3\n1,5,3\n2,6,11\n3,7,6\n");
}

#[test]
fn generate_nontrivial_part_has_two_generators() {
    let o = genlink(&["generate", "2", "3", "N", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["instance"], serde_json::json!({"m": 2, "n": 3, "g": 2, "r": 3}));
    assert_eq!(doc["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn generate_rejects_bad_sizes() {
    for args in [["generate", "3", "2", "iniJ"], ["generate", "0", "2", "iniJ"], ["generate", "2", "21", "iniJ"]] {
        let o = genlink(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
    assert_eq!(code(&genlink(&["generate", "2", "3", "bogus"])), 2);
}

#[test]
fn generate_refuses_above_the_generator_limit() {
    let o = genlink(&["generate", "3", "8", "iniI", "--max-gens", "10"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("56 generators"));
}

#[test]
fn every_format_renders() {
    for format in ["json", "csv", "text", "tex"] {
        for target in ["iniI", "iniA", "iniJ", "N", "betti"] {
            let o = genlink(&["generate", "2", "4", target, "--format", format]);
            assert_eq!(code(&o), 0, "{target} {format}");
            assert!(!stdout(&o).is_empty());
        }
    }
}

#[test]
fn verify_colon_passes() {
    let o = genlink(&["verify", "colon", "2", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: pass"));
}

#[test]
fn verify_all_with_bounds_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = genlink(&[
        "verify", "all", "2", "4", "--Lmax", "2", "--rmax", "2", "--seed", "7", "--out", path_str(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["bounds"]["l_max"], 2);
    assert_eq!(doc["bounds"]["seed"], 7);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 7);
    for r in reports {
        for key in ["check", "instance", "params", "status", "message", "witnesses", "seed", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
    // Only the temporary file's final name remains.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn verify_nontrivial_square_states_the_supported_condition() {
    for suite in ["cor412", "nontrivial"] {
        let o = genlink(&["verify", suite, "3", "5"]);
        assert_eq!(code(&o), 0);
        let text = stdout(&o);
        assert!(text.contains("N^(2) != N^2"), "{text}");
        assert!(text.contains("consistent with [m<=2 or n<=m+1]"), "{text}");
        assert!(text.contains("column-three argument agrees"), "{text}");
    }
}

#[test]
fn verify_reports_failure_and_refusal_codes() {
    // At m = n the closed-form list is not minimal, so the counts check fails.
    assert_eq!(code(&genlink(&["verify", "counts", "3", "3"])), 1);
    let o = genlink(&["verify", "symbolic", "3", "5", "--max-gens", "5"]);
    assert_eq!(code(&o), 3, "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: refused"));
    assert_eq!(code(&genlink(&["verify", "nosuch", "2", "3"])), 2);
}

#[test]
fn verify_output_is_reproducible() {
    let args = ["verify", "witnesses", "3", "5", "--seed", "11", "--samples", "50"];
    let a = genlink(&args);
    let b = genlink(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// The triangle `(xy, xz, yz)` over one row of three x variables.
const TRIANGLE: &str = r#"{
  "schema_version": 1,
  "universe": {"m": 1, "n": 3, "family_sizes": {"X": [1, 3], "Y": [0, 0]}},
  "generators": [
    {"x[1,1]": 1, "x[1,2]": 1},
    {"x[1,1]": 1, "x[1,3]": 1},
    {"x[1,2]": 1, "x[1,3]": 1}
  ]
}"#;

const UNIT: &str = r#"{
  "schema_version": 1,
  "universe": {"m": 1, "n": 3, "family_sizes": {"X": [1, 3], "Y": [0, 0]}},
  "generators": [{}]
}"#;

fn generators(text: &str) -> Vec<Value> {
    let doc: Value = serde_json::from_str(text).unwrap();
    doc["generators"].as_array().unwrap().clone()
}

#[test]
fn compare_symbolic_square_of_triangle_contains_xyz() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.json", TRIANGLE);
    let o = genlink(&["compare", &t, "--op", "symbolic:2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let xyz = serde_json::json!({"x[1,1]": 1, "x[1,2]": 1, "x[1,3]": 1});
    assert!(generators(&stdout(&o)).contains(&xyz));
}

#[test]
fn compare_with_the_unit_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.json", TRIANGLE);
    let u = write(dir.path(), "u.json", UNIT);
    let colon = genlink(&["compare", &u, &t, "--op", "colon"]);
    assert_eq!(code(&colon), 0);
    assert_eq!(generators(&stdout(&colon)), vec![serde_json::json!({})]);
    let product = genlink(&["compare", &t, &u, "--op", "product"]);
    assert_eq!(code(&product), 0);
    assert_eq!(generators(&stdout(&product)), generators(TRIANGLE));
    let meet = genlink(&["compare", &t, &u, "--op", "intersect"]);
    assert_eq!(generators(&stdout(&meet)), generators(TRIANGLE));
}

#[test]
fn compare_accepts_generated_documents() {
    let dir = tempfile::tempdir().unwrap();
    let ini_j = dir.path().join("j.json");
    let ini_i = dir.path().join("i.json");
    let ini_a = dir.path().join("a.json");
    for (target, p) in [("iniJ", &ini_j), ("iniI", &ini_i), ("iniA", &ini_a)] {
        let o = genlink(&["generate", "2", "4", target, "--format", "json", "--out", path_str(p)]);
        assert_eq!(code(&o), 0);
    }
    let colon = dir.path().join("colon.json");
    let o = genlink(&["compare", path_str(&ini_a), path_str(&ini_i), "--op", "colon", "--out", path_str(&colon)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let expected: Value = serde_json::from_str(&std::fs::read_to_string(&ini_j).unwrap()).unwrap();
    let mut want = expected["ideal"]["generators"].as_array().unwrap().clone();
    let mut got = generators(&std::fs::read_to_string(&colon).unwrap());
    let key = |v: &Value| v.to_string();
    want.sort_by_key(key);
    got.sort_by_key(key);
    assert_eq!(got, want);
}

#[test]
fn compare_reports_schema_errors_with_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\n  \"schema_version\": 1,\n  \"universe\": 7\n}");
    let o = genlink(&["compare", &bad, "--op", "symbolic:2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let unknown = write(dir.path(), "unk.json", &TRIANGLE.replace("x[1,3]\": 1}", "x[2,3]\": 1}"));
    let o = genlink(&["compare", &unknown, "--op", "symbolic:2"]);
    assert_eq!(code(&o), 2);

    let t = write(dir.path(), "t.json", TRIANGLE);
    assert_eq!(code(&genlink(&["compare", &t, "--op", "colon"])), 2);
    assert_eq!(code(&genlink(&["compare", &t, "--op", "symbolic:0"])), 2);
}

#[test]
fn failed_runs_leave_no_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never.json");
    let o = genlink(&["generate", "3", "8", "iniI", "--max-gens", "3", "--out", path_str(&out)]);
    assert_eq!(code(&o), 3);
    assert!(!out.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bounds.toml", "l_max = 2\nseed = 5\nmax_gens = 4\n");
    let o = genlink(&["generate", "2", "5", "iniI", "--config", &cfg]);
    assert_eq!(code(&o), 3);
    let o = genlink(&["generate", "2", "5", "iniI", "--config", &cfg, "--max-gens", "100"]);
    assert_eq!(code(&o), 0);

    let broken = write(dir.path(), "broken.toml", "l_max = 2\nwhat = 1\n");
    let o = genlink(&["verify", "colon", "2", "3", "--config", &broken]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}
