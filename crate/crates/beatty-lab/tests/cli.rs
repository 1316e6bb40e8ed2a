//! Black-box tests of the binary: exit codes, output shapes, determinism
//! across worker settings, and the JSON round trip.

use std::process::{Command, Output};

use beatty_lab::{satisfying_indices, SequenceId, SequenceSpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_beatty-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn beatty-lab")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn terms_prints_first_five() {
    let out = run(&["terms", "--count", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1 2 4 5 7\n");
}

#[test]
fn check_clean_range_reports_zero() {
    let out = run(&["check", "--from", "2", "--to", "100000", "--jobs", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "0 counterexamples\n");
}

#[test]
fn check_n1_reports_divergence_and_exits_1() {
    let out = run(&["check", "--from", "1", "--to", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("n=1:"), "{text}");
    assert!(text.contains("d=true"), "{text}");
    assert!(text.contains("b=false"), "{text}");
    assert!(text.ends_with("1 counterexamples\n"), "{text}");
}

#[test]
fn check_json_round_trips() {
    let out = run(&["check", "--from", "1", "--to", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(v["from"], "1");
    assert_eq!(v["to"], "4");
    assert_eq!(v["checked"], 4);
    let cx = v["counterexamples"].as_array().expect("array");
    assert_eq!(cx.len(), 1);
    assert_eq!(cx[0]["n"], "1");
    assert_eq!(cx[0]["d"], true);
    assert_eq!(cx[0]["b"], false);
}

#[test]
fn terms_json_round_trips() {
    let out = run(&["terms", "--count", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(v["count"], 5);
    assert_eq!(v["terms"], serde_json::json!(["1", "2", "4", "5", "7"]));
}

#[test]
fn parity_matches_spec_prefix() {
    let out = run(&["parity", "--count", "10"]);
    assert_eq!(stdout_of(&out), "1001101100\n");
}

#[test]
fn seq_output_is_jobs_independent() {
    let one = run(&["seq", "a120752", "--count", "500", "--jobs", "1"]);
    let three = run(&["seq", "a120752", "--count", "500", "--jobs", "3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    assert!(stdout_of(&one).starts_with("2\n3\n6\n9\n10\n12\n"));
}

#[test]
fn seq_d_variant_starts_at_zero() {
    let out = run(&["seq", "a090892", "--count", "6"]);
    assert_eq!(stdout_of(&out), "0\n1\n2\n3\n6\n9\n");
}

#[test]
fn shift_check_holds() {
    let out = run(&["shift-check", "--count", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let json = run(&["shift-check", "--count", "1000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&json)).expect("valid JSON");
    assert_eq!(v["holds"], true);
}

#[test]
fn shift_check_rejects_zero_count() {
    let out = run(&["shift-check", "--count", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn complement_check_covers_and_reports_json() {
    let out = run(&["complement-check", "--limit", "1000", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(v["covered"], true);
    assert_eq!(v["gaps"], serde_json::json!([]));
}

#[test]
fn lemma1_evaluates_the_running_example() {
    let out = run(&["lemma1", "--x", "7/2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("256"), "{text}");
    assert!(text.contains("260"), "{text}");

    let json = run(&["lemma1", "--x", "14/4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&json)).expect("valid JSON");
    assert_eq!(v["x"], "7/2");
    assert_eq!(v["holds"], true);
}

#[test]
fn lemma1_rejects_bad_rationals() {
    assert_eq!(run(&["lemma1", "--x", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["lemma1", "--x", "x/2"]).status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(run(&["terms", "--nope"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn walk_requires_exactly_one_source() {
    assert_eq!(run(&["walk"]).status.code(), Some(2));
    assert_eq!(
        run(&["walk", "--bits", "01", "--parity", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn walk_rejects_non_binary_bits() {
    let out = run(&["walk", "--bits", "012"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn walk_pgm_bytes_for_single_step() {
    let out = run(&["walk", "--bits", "0", "--format", "pgm", "--margin", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"P5\n1 2\n255\n\x00\x00");
}

#[test]
fn walk_writes_svg_file_and_stays_quiet() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("walk.svg");
    let out = run(&[
        "walk",
        "--bits",
        "1001101100",
        "--out",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).expect("file written");
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<polyline"));
}

#[test]
fn walk_stats_agree_between_bits_and_parity_sources() {
    let parity = run(&["parity", "--count", "50"]);
    let bits = stdout_of(&parity).trim().to_owned();
    let via_bits = run(&["walk", "--bits", &bits, "--format", "text"]);
    let via_parity = run(&["walk", "--parity", "50", "--format", "text"]);
    assert_eq!(via_bits.stdout, via_parity.stdout);
}

#[test]
fn oeis_compare_matching_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("b120752.txt");
    let spec = SequenceSpec::new(SequenceId::CondBA120752);
    let mut text = String::from("# regenerated locally\n");
    for (i, term) in satisfying_indices(&spec, 40).iter().enumerate() {
        text.push_str(&format!("{} {}\n", i + 1, term));
    }
    std::fs::write(&path, &text).expect("write b-file");

    let out = run(&[
        "oeis-compare",
        "--bfile",
        path.to_str().expect("utf-8 path"),
        "--seq",
        "a120752",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("matches a120752"));
}

#[test]
fn oeis_compare_flags_corruption() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("b090892.txt");
    let spec = SequenceSpec::new(SequenceId::CondDA090892);
    let mut text = String::new();
    for (i, term) in satisfying_indices(&spec, 30).iter().enumerate() {
        if i == 12 {
            text.push_str(&format!("{} {}\n", i, term + 1u32));
        } else {
            text.push_str(&format!("{} {}\n", i, term));
        }
    }
    std::fs::write(&path, &text).expect("write b-file");

    let out = run(&[
        "oeis-compare",
        "--bfile",
        path.to_str().expect("utf-8 path"),
        "--seq",
        "a090892",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(v["matches"], false);
    assert_eq!(v["first_mismatch"]["index"], 12);
}

#[test]
fn oeis_compare_rejects_malformed_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "1 2\n1 3\n").expect("write b-file");
    let out = run(&[
        "oeis-compare",
        "--bfile",
        path.to_str().expect("utf-8 path"),
        "--seq",
        "a083035",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).expect("utf-8 stderr");
    assert!(err.contains("non-monotone"), "{err}");

    let missing = run(&["oeis-compare", "--bfile", "/nonexistent", "--seq", "a083035"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn invalid_jobs_env_exits_2() {
    let out = bin()
        .args(["check", "--from", "1", "--to", "10"])
        .env("BEATTY_LAB_JOBS", "many")
        .output()
        .expect("spawn beatty-lab");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).expect("utf-8 stderr");
    assert!(err.contains("BEATTY_LAB_JOBS"), "{err}");
}

#[test]
fn jobs_env_sets_default_worker_count() {
    let out = bin()
        .args(["check", "--from", "2", "--to", "5000"])
        .env("BEATTY_LAB_JOBS", "3")
        .output()
        .expect("spawn beatty-lab");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "0 counterexamples\n");
}
