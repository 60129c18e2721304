//! End-to-end tests of the binary: exit codes, report shapes, document
//! round trips, and CSV rechecking.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_criteria"))
}

fn examples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn analyze_bitcube() {
    let file = examples().join("bitcube.json");
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("discrimination vector: (2,2,2)"));
    assert!(text.contains("discrimination cells: 8"));
    assert!(text.contains("maximal categorization: true"));
    assert!(text.ends_with("verdict: PASS\n"));
}

#[test]
fn analyze_rejects_symmetric_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(
        &file,
        r#"{"schema":1,"domain":["a","b"],"criteria":[{"pairs":[["a","b"],["b","a"]]}]}"#,
    )
    .unwrap();
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not asymmetric"));
}

#[test]
fn analyze_single_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("single.json");
    std::fs::write(
        &file,
        r#"{"schema":1,"domain":["a","b","c"],"criteria":[{"pairs":[["a","b"]]}]}"#,
    )
    .unwrap();
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("discrimination vector: (3)"));
    assert!(text.contains("maximal categorization: true"));
}

#[test]
fn theorem_on_shipped_documents() {
    for (doc, expect) in [
        ("bitcube.json", "product representation: present"),
        ("car.json", "product representation: present"),
        ("nonproduct4.json", "product representation: absent"),
    ] {
        let file = examples().join(doc);
        let out = run(&["theorem", file.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{doc}");
        let text = stdout(&out);
        assert!(text.contains(expect), "{doc}");
        assert!(text.contains("theorem agreement: PASS"), "{doc}");
    }
}

#[test]
fn theorem_relabeling_table_for_products() {
    let file = examples().join("car.json");
    let out = run(&["theorem", file.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("relabeling:"));
    // 3x2x2 attribute product: first label maps to the zero signature
    assert!(text.contains("blue-fast-low -> 0.0.0"));
}

#[test]
fn frontier_csv_and_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("frontier.csv");
    let out = run(&[
        "frontier",
        "--cost",
        "power:2",
        "--domain-size",
        "64",
        "--budget",
        "6",
        "--csv",
        csv.to_str().unwrap(),
        "--recheck",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("csv recheck: PASS"));
    let content = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(
        content,
        "vector;cost;n\n(2);4;2\n(2,2);8;4\n(2,2,2);12;8\n(2,2,2,2);16;16\n(2,2,2,2,2);20;32\n(2,2,2,2,2,2);24;64\n"
    );
}

#[test]
fn frontier_budget_one() {
    let out = run(&["frontier", "--cost", "power:2", "--domain-size", "8", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("points: 1"));
    assert!(text.contains("(2);4;2"));
}

#[test]
fn frontier_rejects_bad_tables_and_budgets() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.json");
    std::fs::write(&table, r#"{"1": 0, "3": 9}"#).unwrap();
    let out = run(&[
        "frontier",
        "--cost",
        &format!("table:{}", table.display()),
        "--domain-size",
        "8",
        "--budget",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no entry for 2"));

    let out = run(&["frontier", "--cost", "power:2", "--domain-size", "8", "--budget", "30"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn radix_commands() {
    let out = run(&["radix", "optimal", "--n", "729", "--cost", "linear:1", "--kmax", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("optimal bases: 3"));
    assert!(text.contains("cost: 18"));

    let out = run(&["radix", "cost", "--n", "1", "--k", "7", "--cost", "linear:1"]);
    let text = stdout(&out);
    assert!(text.contains("digits: 0"));
    assert!(text.contains("cost: 0"));

    let out = run(&[
        "radix", "check-binary", "--cost", "power:2", "--kmax", "12", "--nmax", "10000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("binary condition: holds"));
    assert!(text.contains("sweep: binary strictly optimal"));
    assert!(text.contains("agreement: PASS"));

    let table = examples().join("kappa_squares.json");
    let out = run(&[
        "radix",
        "check-binary",
        "--cost",
        &format!("table:{}", table.display()),
        "--kmax",
        "12",
        "--nmax",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(0), "squares table agrees");
}

#[test]
fn radix_sweep_csv_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let out = run(&[
        "radix",
        "sweep",
        "--cost",
        "linear:1",
        "--kmax",
        "6",
        "--nmax",
        "40",
        "--csv",
        csv.to_str().unwrap(),
        "--recheck",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("csv recheck: PASS"));
    let content = std::fs::read_to_string(&csv).unwrap();
    assert!(content.starts_with("n;k*;cost\n2;2;2\n"));
    // n = 27 under linear cost: three ternary digits cost 9, five binary cost 10
    assert!(content.contains("\n27;3;9\n"));
}

#[test]
fn choice_build_and_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let choice = dir.path().join("choice.json");
    let criteria = examples().join("bitcube.json");
    let out = run(&[
        "choice",
        "build",
        criteria.to_str().unwrap(),
        "--out",
        choice.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("classes: 8"));

    let out = run(&[
        "choice",
        "check",
        "--criteria",
        criteria.to_str().unwrap(),
        "--choice",
        choice.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in [
        "classes: PASS",
        "uses: PASS",
        "maximal discrimination: PASS",
        "rationalizable: PASS",
        "condorcet: PASS",
        "verdict: PASS",
    ] {
        assert!(text.contains(line), "missing {line:?} in:\n{text}");
    }
}

#[test]
fn choice_build_to_stdout_is_a_document() {
    let criteria = examples().join("bitcube.json");
    let out = run(&["choice", "build", criteria.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["assignments"].as_array().unwrap().len(), 255);
}

#[test]
fn vote_on_binary_criteria_is_rational() {
    let file = examples().join("bitcube.json");
    let out = run(&["vote", file.to_str().unwrap(), "--weights", "4,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("  111 = 7"));
    assert!(text.contains("choice on full domain: 111"));
    assert!(text.contains("rationalizable: PASS"));
    assert!(text.contains("condorcet cycle: none"));
}

#[test]
fn vote_on_cyclic_ternary_profile_fails_with_witness() {
    let file = examples().join("condorcet3.json");
    let out = run(&["vote", file.to_str().unwrap(), "--weights", "1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("aggregation: NOT_APPLICABLE"));
    assert!(text.contains("condorcet cycle: a b c"));
    assert!(text.ends_with("verdict: FAIL\n"));
}

#[test]
fn vote_rejects_nonpositive_weights() {
    let file = examples().join("bitcube.json");
    let out = run(&["vote", file.to_str().unwrap(), "--weights", "4,0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn choice_check_reports_ill_defined_classes() {
    // identity choices except three large sets: interchangeability is not
    // transitive, so the classes are ill-defined
    let dir = tempfile::tempdir().unwrap();
    let criteria = dir.path().join("criteria.json");
    std::fs::write(
        &criteria,
        r#"{"schema":1,"domain":["a","b","c","d"],"criteria":[{"pairs":[["a","b"]]}]}"#,
    )
    .unwrap();
    let labels = ["a", "b", "c", "d"];
    let mut assignments = Vec::new();
    for mask in 1u32..16 {
        let set: Vec<&str> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| labels[i]).collect();
        let choose: Vec<&str> = match mask {
            0b1101 => vec!["c"],
            0b1110 => vec!["d"],
            0b1111 => vec!["a", "b", "d"],
            _ => set.clone(),
        };
        assignments.push(serde_json::json!({"set": set, "choose": choose}));
    }
    let choice = dir.path().join("choice.json");
    std::fs::write(
        &choice,
        serde_json::json!({"schema": 1, "domain": labels, "assignments": assignments}).to_string(),
    )
    .unwrap();
    let out = run(&[
        "choice",
        "check",
        "--criteria",
        criteria.to_str().unwrap(),
        "--choice",
        choice.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("choice classes: ill-defined, witness ("));
    assert!(text.ends_with("verdict: FAIL\n"));
}

#[test]
fn choice_build_refuses_oversized_explicit_documents() {
    let dir = tempfile::tempdir().unwrap();
    let criteria = dir.path().join("criteria.json");
    let labels: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
    std::fs::write(
        &criteria,
        serde_json::json!({
            "schema": 1,
            "domain": labels,
            "criteria": [{"pairs": [["x0", "x1"]]}],
        })
        .to_string(),
    )
    .unwrap();
    let out = run(&["choice", "build", criteria.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap 12"));
}

#[test]
fn canonical_output_round_trips_byte_exact() {
    let file = examples().join("car.json");
    let out = run(&["analyze", file.to_str().unwrap(), "--canonical"]);
    assert_eq!(out.status.code(), Some(0));
    let emitted = stdout(&out);
    let shipped = std::fs::read_to_string(&file).unwrap();
    assert_eq!(emitted, shipped);
}
