//! The binary end to end: documented examples, formats and exit codes.

use std::process::Command;

fn tableaux(args: &[&str]) -> (String, String, i32) {
    let o = Command::new(env!("CARGO_BIN_EXE_tableaux")).args(args).env_remove("TABLEAUX_MAX_N").output().expect("binary runs");
    (String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap(), o.status.code().unwrap_or(-1))
}

fn count_row(args: &[&str]) -> Vec<String> {
    let (out, _, code) = tableaux(args);
    assert_eq!(code, 0, "{args:?}");
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,family,stat,closed,enumerated,match"));
    lines.next().unwrap().split(',').map(String::from).collect()
}

#[test]
fn count_examples() {
    let row = count_row(&["count", "--family", "tlt", "--n", "3", "--stat", "corners"]);
    assert_eq!(row[3..], ["7", "7", "true"]);
    let row = count_row(&["count", "--family", "tltsym", "--n", "1", "--stat", "corners"]);
    assert_eq!(row[3..], ["3", "3", "true"]);
    let row = count_row(&["count", "--family", "at", "--n", "0", "--stat", "corners"]);
    assert_eq!(row[3..], ["0", "0", "true"]);
    let row = count_row(&["count", "--family", "ptb", "--n", "3", "--stat", "tableaux"]);
    assert_eq!(row[3..], ["48", "48", "true"]);
    let row = count_row(&["count", "--family", "pt", "--n", "4", "--stat", "noc"]);
    assert_eq!(row[3..], ["", "0", ""]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--family", "xyz", "--n", "3"][..],
        &["count", "--family", "tlt", "--n", "3", "--stat", "height"],
        &["verify", "thmZ"],
        &["bijection-check", "--name", "beta", "--n", "2"],
        &["count", "--family", "tlt", "--n", "14"],
        &["--parallel", "0", "verify", "thmA"],
    ] {
        let (_, err, code) = tableaux(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn io_failure_exits_1() {
    let (_, err, code) = tableaux(&["export", "--family", "tlt", "--n", "2", "--output", "/nonexistent-dir/t.json"]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot write"));
}

#[test]
fn exports() {
    let (out, _, code) = tableaux(&["export", "--family", "tlt", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["tableaux"].as_array().unwrap().len(), 2);
    assert_eq!(doc["tableaux"][0]["family"], "tlt");
    let (out, _, _) = tableaux(&["export", "--family", "ptb", "--n", "1", "--format", "ascii"]);
    assert_eq!(out.matches("# ").count(), 2);
    let (out, _, _) = tableaux(&["generate", "--family", "pt", "--n", "3", "--format", "csv"]);
    assert_eq!(out.lines().count(), 7);

    let dir = std::env::temp_dir().join(format!("tableaux-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("at3.csv");
    let (_, _, code) = tableaux(&["export", "--family", "at", "--n", "3", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 25);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reports() {
    let (out, _, code) = tableaux(&["verify", "thmA", "--max-n", "7", "--report", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema"], "tableaux-report/1");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["n_range"], serde_json::json!([1, 7]));
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass" && c.get("elapsed_ms").is_none()));

    let (out, _, code) = tableaux(&["verify", "conj-x", "--max-n", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("x-analogue formula = reference table [n=7]: 448*x^6"));

    let (out, _, code) = tableaux(&["verify", "corners-runs", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("corners-runs n=1..6: 20 passed, 0 failed, 0 skipped"));

    let (_, err, code) = tableaux(&["verify", "thmA", "--max-n", "12"]);
    assert_eq!(code, 0);
    assert!(err.contains("clamped from n = 12 to n = 8"));

    let (out, _, code) = tableaux(&["verify", "sec5-stats", "--timings", "--report", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("elapsed_ms"));
}

#[test]
fn bijection_checks() {
    for name in ["alpha", "gamma", "zeta", "corners-runs", "nat-word", "phi-contract", "xi-contract", "alpha-sym"] {
        let (out, err, code) = tableaux(&["bijection-check", "--name", name, "--n", "3", "--report", "json"]);
        assert_eq!(code, 0, "{name}: {err}");
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["passed"], true, "{name}");
    }
}

#[test]
fn polynomials() {
    let (out, _, code) = tableaux(&["poly", "t-ab", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "T_n(a,b) [n=3] = a^2 + 2*a*b + b^2 + a + b\n");
    let (out, _, _) = tableaux(&["poly", "expected-x", "--n", "3", "--a", "1/2", "--b", "3"]);
    let values: Vec<&str> = out.lines().map(|l| l.rsplit(" = ").next().unwrap()).collect();
    assert_eq!(values.len(), 2);
    assert_eq!(values[0], values[1]);
    let (out, _, code) = tableaux(&["poly", "noc-x", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["values"][0]["value"]["var"], serde_json::json!(["x"]));
    let (_, _, code) = tableaux(&["poly", "noc-ab-conj", "--n", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn env_bound_override_warns() {
    let o = Command::new(env!("CARGO_BIN_EXE_tableaux"))
        .args(["count", "--family", "tlt", "--n", "9"])
        .env("TABLEAUX_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("TABLEAUX_MAX_N=9"));
}
