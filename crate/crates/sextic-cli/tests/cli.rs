//! End-to-end checks of the binary: output shapes, exit codes, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn classify_degree_six_reports_region() {
    let out = run(&["classify", "6", "1", "3", "3", "6", "6"]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["region"], "P2NotQ");
    assert_eq!(value["realizable"], false);
    assert_eq!(value["genus"], 14);
    assert_eq!(value["expected_codim"], 18);
}

#[test]
fn classify_degree_three_has_no_region_field() {
    let out = run(&["classify", "3", "1", "2"]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["realizable"], true);
    assert!(value.get("region").is_none());

    let gap = stdout_json(&run(&["classify", "3", "1", "3"]));
    assert_eq!(gap["realizable"], false);
}

#[test]
fn classify_rejects_bad_input() {
    let mismatch = run(&["classify", "6", "1", "2"]);
    assert_eq!(code(&mismatch), 1);
    assert!(!mismatch.stderr.is_empty());

    let unsorted = run(&["classify", "6", "3", "1", "3", "6", "6"]);
    assert_eq!(code(&unsorted), 1);

    let degree = run(&["classify", "4", "1", "1", "1"]);
    assert_eq!(code(&degree), 1);
}

#[test]
fn usage_errors_exit_one_but_help_exits_zero() {
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn enumerate_genus_zero_csv_bytes() {
    let out = run(&["enumerate", "--genus", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "e1,e2,e3,e4,e5,region,realizable,expected_codim\n1,1,1,1,1,Both,true,0\n"
    );
}

#[test]
fn enumerate_json_genus_one() {
    let out = run(&["enumerate", "--genus", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let rows = stdout_json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["invariants"], serde_json::json!([1, 1, 1, 1, 2]));
    assert_eq!(rows[0]["region"], "Both");
}

#[test]
fn enumerate_rejects_negative_genus() {
    assert_eq!(code(&run(&["enumerate", "--genus", "-3"])), 1);
}

#[test]
fn verify_lemma_passes_and_is_deterministic() {
    let first = run(&["verify-lemma"]);
    assert_eq!(code(&first), 0);
    let report = stdout_json(&first);
    assert_eq!(report["verdict"], "PASS");
    assert_eq!(report["cases"].as_array().unwrap().len(), 100);

    let second = run(&["verify-lemma"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_lemma_export_writes_cases() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("cases");
    let out = run(&["verify-lemma", "--export", target.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let count = std::fs::read_dir(&target).unwrap().count();
    assert_eq!(count, 100);
    assert!(target.join("case_T1_zzz_B1_zzz.lp").exists());
}

#[test]
fn witness_realizable_tuples() {
    let double = stdout_json(&run(&["witness", "3", "4", "4", "4", "4"]));
    assert_eq!(double["kind"], "double_over_triple");
    assert_eq!(double["total_genus"], 14);

    let triple = stdout_json(&run(&["witness", "1", "3", "3", "3", "3"]));
    assert_eq!(triple["kind"], "triple_over_double");
    assert_eq!(triple["partition"]["light"], serde_json::json!([2, 3]));
}

#[test]
fn witness_unrealizable_exits_four() {
    let out = run(&["witness", "1", "3", "3", "6", "6"]);
    assert_eq!(code(&out), 4);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not realizable"));
}

#[test]
fn bad_types_lists_competitors() {
    let out = run(&["bad-types", "3", "4", "4", "4", "4"]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["target_dim"], 5);
    assert_eq!(value["bad_loci"].as_array().unwrap().len(), 2);

    let outside = run(&["bad-types", "1", "3", "3", "3", "3"]);
    assert_eq!(code(&outside), 1);
}

#[test]
fn solve_lp_dispatches_on_extension() {
    let dir = tempfile::tempdir().unwrap();
    let lp = dir.path().join("tiny.lp");
    std::fs::write(&lp, "Minimize\n obj: x\nSubject To\n c1: x >= 2\nEnd\n").unwrap();
    let out = run(&["solve-lp", lp.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["status"], "optimal");
    assert_eq!(value["value"], "2");

    let mps = dir.path().join("tiny.mps");
    std::fs::write(
        &mps,
        "NAME tiny\nROWS\n N obj\n G c1\nCOLUMNS\n x obj 1 c1 1\nRHS\n rhs c1 2\nENDATA\n",
    )
    .unwrap();
    let out = run(&["solve-lp", mps.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["value"], "2");

    let txt = dir.path().join("tiny.txt");
    std::fs::write(&txt, "Minimize\n obj: x\nSubject To\nEnd\n").unwrap();
    assert_eq!(code(&run(&["solve-lp", txt.to_str().unwrap()])), 1);

    let broken = dir.path().join("broken.lp");
    std::fs::write(&broken, "Minimize\n obj: x\n").unwrap();
    assert_eq!(code(&run(&["solve-lp", broken.to_str().unwrap()])), 1);

    assert_eq!(code(&run(&["solve-lp", "/nonexistent/file.lp"])), 1);
}

#[test]
fn export_cases_lists_files() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out");
    let out = run(&["export-cases", target.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let names = stdout_json(&out);
    assert_eq!(names.as_array().unwrap().len(), 100);
    assert!(target.join("case_T3_B3.lp").exists());
}

#[test]
fn bounds_reports_exact_rational() {
    let whole = stdout_json(&run(&["bounds", "6", "4"]));
    assert_eq!(whole["bound"], "3");

    let fractional = stdout_json(&run(&["bounds", "6", "0"]));
    assert_eq!(fractional["bound"], "5/3");

    assert_eq!(code(&run(&["bounds", "1", "4"])), 1);
}
