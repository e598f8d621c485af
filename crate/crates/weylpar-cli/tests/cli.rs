//! End-to-end tests of the installed binary: output schemas, determinism
//! across runs, and exit codes.

use std::process::{Command, Output};

fn weylpar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylpar"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn enumerate_is_byte_identical_across_runs() {
    let first = weylpar(&["enumerate", "E8", "--format", "json"]);
    let second = weylpar(&["enumerate", "E8", "--format", "json"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn json_schema_matches_documented_shape() {
    let out = weylpar(&["enumerate", "E8", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("[\n"));
    assert!(text.trim_end().ends_with(']'));
    assert!(text.contains(
        "{\"ambient\": \"E8\", \"J\": [2, 3, 4, 5], \"levi\": \"D4\", \"zeta\": \"-1\", \"relative\": \"F4\", \"epsilon\": \"chi_1\"}"
    ));
    // 166 parameters plus the enclosing brackets.
    assert_eq!(text.lines().count(), 168);
}

#[test]
fn count_totals() {
    for (spec, expected) in [("F4", "37"), ("G2", "10"), ("E6", "30")] {
        let out = weylpar(&["enumerate", spec, "--count"]);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(
            text.contains(&format!("total: {expected}")),
            "{spec}: {text}"
        );
    }
}

#[test]
fn relative_fixture_through_cli() {
    let out = weylpar(&["relative", "E7", "--levi", "2,3,4,5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("relative type: C3"));
    assert!(text.contains("levi type: D4"));
}

#[test]
fn cuspidal_json() {
    let out = weylpar(&["cuspidal", "E8", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"count\": 13"));
    assert!(text.contains("\"1'\", \"1''\""));
}

#[test]
fn exit_codes() {
    // 0 on success.
    assert_eq!(weylpar(&["count", "B3"]).status.code(), Some(0));
    // 1 on input errors.
    assert_eq!(weylpar(&["count", "E9"]).status.code(), Some(1));
    assert_eq!(
        weylpar(&["relative", "F4", "--levi", "9"]).status.code(),
        Some(1)
    );
    // 1 on constructions outside the cuspidal hypothesis.
    assert_eq!(
        weylpar(&["relative", "F4", "--levi", "1"]).status.code(),
        Some(1)
    );
    // 2 when a bound is exceeded.
    assert_eq!(
        weylpar(&["mset", "weyl:E6", "--bound", "1000"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("weylpar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.json");
    let to_file = Command::new(env!("CARGO_BIN_EXE_weylpar"))
        .args(["enumerate", "G2", "--format", "json", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(to_file.status.success());
    let direct = weylpar(&["enumerate", "G2", "--format", "json"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_smoke_run_passes() {
    // A scaled-down verification run: every check below the heavy jobs.
    let out = weylpar(&["verify", "--max-rank", "4", "--bound", "2000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("13 of 13 checks passed"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn mset_text_totals() {
    let out = weylpar(&["mset", "S5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total: 39"), "{text}");
}
