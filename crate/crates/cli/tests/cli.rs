//! End-to-end checks of the `flagbundle` binary: parsing, exit codes,
//! deterministic output, tolerance overrides and the report generators.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagbundle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn invariants_examples() {
    // Gr(2,C⁴): fano 4, dim 4
    let o = run(&["invariants", "A3/{1,3}", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fano_index"], 4);
    assert_eq!(v["m_theta"], 4);
    // W₆: fano 2, dim 3
    let o = run(&["invariants", "A2/{}", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fano_index"], 2);
    assert_eq!(v["m_theta"], 3);
    // CP¹: fano 2, dim 1
    let o = run(&["invariants", "A1/{}", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fano_index"], 2);
    assert_eq!(v["m_theta"], 1);
}

#[test]
fn invariants_parse_errors() {
    let o = run(&["invariants", "A3/{9}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("out of range"));
    // Θ = Σ rejected
    let o = run(&["invariants", "A2/{1,2}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("omit at least one"));
}

#[test]
fn verify_cyt_passes_and_is_deterministic() {
    let args = [
        "verify",
        "cyt",
        "A1/{}",
        "--ell",
        "1",
        "--samples",
        "4",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    let a = run(&args);
    assert!(a.status.success());
    let b = run(&args);
    assert_eq!(
        stdout(&a),
        stdout(&b),
        "same seed must give identical bytes"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert!(v["rows"][0]["residual"].is_number());
    assert!(v["rows"][0]["tolerance"].is_number());
}

#[test]
fn verify_nijenhuis_product() {
    let o = run(&[
        "verify",
        "nijenhuis",
        "A1/{}xA1/{}",
        "--a",
        "0",
        "--b",
        "1",
        "--samples",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&[
        "verify",
        "nijenhuis",
        "A1/{}×A1/{}",
        "--a",
        "1",
        "--b",
        "2",
        "--samples",
        "2",
    ]);
    assert!(o.status.success());
}

#[test]
fn verify_rejects_non_type_a() {
    let o = run(&["verify", "einstein", "G2/{}", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("combinatorial-only"));
}

#[test]
fn tolerance_override_forces_failure() {
    let o = run(&[
        "verify",
        "cyt",
        "A1/{}",
        "--samples",
        "3",
        "--tol",
        "cyt=1e-12",
    ]);
    assert_eq!(o.status.code(), Some(1), "impossible tolerance must fail");
}

#[test]
fn config_file_with_flag_override() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# test config").unwrap();
    writeln!(f, "seed = 5").unwrap();
    writeln!(f, "samples = 3").unwrap();
    writeln!(f, "format = json").unwrap();
    writeln!(f, "tol.lck = 1e-5").unwrap();
    let path = f.path().to_str().unwrap().to_string();
    let o = run(&["verify", "lck", "A1/{}", "--config", &path]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tolerance"], 1e-5);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    // flags override the file
    let o = run(&[
        "verify",
        "lck",
        "A1/{}",
        "--config",
        &path,
        "--samples",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn report_table1() {
    let o = run(&["report", "table1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let su: Vec<i64> = rows
        .iter()
        .map(|r| r["su_index"].as_i64().unwrap())
        .collect();
    assert_eq!(su, vec![2, 3, 4, 5, 7]);
    // a different full flag moves the computed last column
    let o = run(&[
        "report",
        "table1",
        "--full-flag",
        "A2/{}",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap()[4]["su_index"], 4);
    // non-full-flag datum rejected
    let o = run(&["report", "table1", "--full-flag", "A3/{1}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_examples_includes_potentials() {
    let o = run(&["report", "examples", "--format", "markdown"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.contains("|z1 z4 - z2 z3|^2"),
        "Gr potential string present"
    );
    assert!(text.contains("Gr(2,C^4)"));
    // the W₆ row flags m = 3 with ψ = (2/3)ω₀
    assert!(text.contains("ψ = 2/3·ω₀ (m = 3)"));
}

#[test]
fn astheno_command() {
    let o = run(&["astheno", "1", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["locus"]["degenerate"], true);
    assert_eq!(v["locus"]["line_a"], serde_json::json!([0, 1]));
    let o = run(&["astheno", "2", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["locus"]["line_a"], serde_json::json!([-1, 2]));
    // datum form: Gr(2,C4) x W6 → circle center −2, r² = 2
    let o = run(&["astheno", "A3/{1,3}", "A2/{}", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["locus"]["center_a"], serde_json::json!([-2, 1]));
    assert_eq!(v["locus"]["radius_sq"], serde_json::json!([2, 1]));
    assert!(v["max_residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn unknown_report_is_usage_error() {
    let o = run(&["report", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown report"));
}
