//! End-to-end golden tests for the binary: exact output bytes, exit codes,
//! and determinism.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_polytutte"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
        output.status.code().expect("exit code present"),
    )
}

#[test]
fn tutte_text_matches_the_known_polynomial() {
    let (stdout, stderr, code) = run(&["tutte", "-i", "uniform:1,2"]);
    assert_eq!(stdout, "x^2 + 2*x*y + y^2 - x - y\n");
    assert_eq!(stderr, "");
    assert_eq!(code, 0);
}

#[test]
fn tutte_json_lists_terms_in_display_order() {
    let (stdout, _, code) = run(&["tutte", "-i", "uniform:1,2", "--json"]);
    assert_eq!(
        stdout,
        "{\"terms\": [{\"x\": 2, \"y\": 0, \"c\": \"1\"}, {\"x\": 1, \"y\": 1, \"c\": \"2\"}, \
         {\"x\": 0, \"y\": 2, \"c\": \"1\"}, {\"x\": 1, \"y\": 0, \"c\": \"-1\"}, \
         {\"x\": 0, \"y\": 1, \"c\": \"-1\"}]}\n"
    );
    assert_eq!(code, 0);
}

#[test]
fn bases_are_listed_in_ascending_order() {
    let (stdout, _, code) = run(&["bases", "-i", "uniform:1,2"]);
    assert_eq!(stdout, "(0, 1)\n(1, 0)\n");
    assert_eq!(code, 0);
}

#[test]
fn activities_show_sets_and_count_triples() {
    let (stdout, _, code) = run(&["activities", "-i", "uniform:1,2"]);
    assert_eq!(
        stdout,
        "(0, 1): internal {1}, external {1,2}, (oi, oe, ie) = (0, 1, 1)\n\
         (1, 0): internal {1,2}, external {1}, (oi, oe, ie) = (1, 0, 1)\n"
    );
    assert_eq!(code, 0);
}

#[test]
fn classical_oracle_agrees_on_the_triangle() {
    let path = std::env::temp_dir().join("polytutte-cli-test-k3.json");
    std::fs::write(&path, r#"{"vertices": 3, "edges": [[0,1],[1,2],[2,0]]}"#).unwrap();
    let (stdout, _, code) = run(&["classical", "-i", path.to_str().unwrap(), "--oracle"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(stdout, "x^2 + x + y\nx^2 + x + y\nAGREE\n");
    assert_eq!(code, 0);
}

#[test]
fn series_truncates_at_the_requested_degree() {
    let (stdout, _, code) = run(&["series", "-i", "uniform:1,2", "--degree", "1"]);
    assert_eq!(stdout, "2 + 3*u + 3*v\n");
    assert_eq!(code, 0);
}

#[test]
fn verify_runs_all_checks_by_default() {
    let (stdout, _, code) = run(&["verify", "-i", "uniform:2,4"]);
    assert_eq!(
        stdout,
        "sn: PASS\nfibers: PASS\nlemmas: PASS\nseries: PASS\ncorrespondence: PASS\n"
    );
    assert_eq!(code, 0);
}

#[test]
fn verify_respects_selection_order_and_deduplicates() {
    let (stdout, _, code) = run(&[
        "verify",
        "-i",
        "uniform:1,2",
        "--checks",
        "lemmas,sn,lemmas",
    ]);
    assert_eq!(stdout, "lemmas: PASS\nsn: PASS\n");
    assert_eq!(code, 0);
}

#[test]
fn verify_all_perms_matches_spec_example() {
    let (stdout, _, code) = run(&[
        "verify",
        "-i",
        "uniform:1,2",
        "--checks",
        "sn",
        "--all-perms",
    ]);
    assert_eq!(stdout, "sn: PASS\n");
    assert_eq!(code, 0);
}

#[test]
fn correspondence_skips_non_matroid_tables() {
    let (stdout, _, code) = run(&[
        "verify",
        "-i",
        r#"{"n":2,"ranks":[0,2,1,2]}"#,
        "--checks",
        "correspondence",
    ]);
    assert_eq!(
        stdout,
        "correspondence: SKIP (rank table is not a matroid rank function)\n"
    );
    assert_eq!(code, 0);
}

#[test]
fn invalid_inputs_exit_with_code_two() {
    for args in [
        vec!["tutte", "-i", "uniform:9,2"],
        vec!["bases", "-i", "garbage"],
        vec!["bases", "-i", r#"{"n":2,"ranks":[0,1,1,3]}"#],
        vec!["classical", "-i", r#"{"n":2,"ranks":[0,2,1,2]}"#],
    ] {
        let (_, stderr, code) = run(&args);
        assert_eq!(code, 2, "args {args:?}");
        assert!(stderr.starts_with("error: "), "args {args:?}: {stderr}");
    }
}

#[test]
fn missing_required_arguments_exit_with_code_two() {
    let (_, stderr, code) = run(&["bases"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn inline_coverage_instances_resolve() {
    let (stdout, _, code) = run(&["bases", "-i", "coverage:0,2,4,1,1"]);
    assert!(!stdout.is_empty());
    assert_eq!(code, 0);
}

#[test]
fn output_is_byte_deterministic() {
    let first = run(&["tutte", "-i", "coverage:3,3,4,2,2"]);
    let second = run(&["tutte", "-i", "coverage:3,3,4,2,2"]);
    assert_eq!(first, second);
    assert_eq!(first.2, 0);
}
