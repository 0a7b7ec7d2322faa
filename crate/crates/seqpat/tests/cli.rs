//! End-to-end tests of the `seqpat` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_seqpat"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("seqpat-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

const THREE_SEQUENCES: &str = "\
# three length-5 level-3 sequences
level: 3
1 1 3 2 1
3 3 1 2 3
1 1 2 2 1
";

#[test]
fn distance_in_sequences_mode() {
    let path = write_temp("seqmode.txt", THREE_SEQUENCES);
    let output = bin()
        .args(["distance", path.to_str().unwrap(), "--mode", "sequences"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(stdout_of(&output), "4\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn distance_in_patterns_mode_with_witness() {
    let path = write_temp("patmode.txt", THREE_SEQUENCES);
    for algorithm in ["clique", "brute", "auto"] {
        let output = bin()
            .args([
                "distance",
                path.to_str().unwrap(),
                "--mode",
                "patterns",
                "--algorithm",
                algorithm,
                "--witness",
            ])
            .output()
            .unwrap();
        assert!(output.status.success(), "{algorithm}");
        let text = stdout_of(&output);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("1"), "{algorithm}");
        let witness = lines.next().unwrap();
        assert!(witness.starts_with("witness: "), "{witness}");
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn distance_json_shape() {
    let path = write_temp("json.txt", THREE_SEQUENCES);
    let output = bin()
        .args([
            "distance",
            path.to_str().unwrap(),
            "--mode",
            "patterns",
            "--json",
            "--witness",
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["distance"], 1);
    assert_eq!(value["constant_count"], 4);
    let witness = value["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 3);
    std::fs::remove_file(&path).ok();
}

#[test]
fn distance_hungarian_requires_a_pair() {
    let path = write_temp("hungarian3.txt", THREE_SEQUENCES);
    let output = bin()
        .args([
            "distance",
            path.to_str().unwrap(),
            "--algorithm",
            "hungarian",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));

    let pair = write_temp(
        "hungarian2.txt",
        "level: 3\n1 1 3 2 1\n1 1 2 2 1\n",
    );
    let output = bin()
        .args(["distance", pair.to_str().unwrap(), "--algorithm", "hungarian"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(stdout_of(&output), "1\n");
    std::fs::remove_file(&path).ok();
    std::fs::remove_file(&pair).ok();
}

#[test]
fn distance_of_identical_rows_is_zero() {
    let path = write_temp("identical.txt", "level: 2\n1 2 1\n1 2 1\n");
    let output = bin()
        .args(["distance", path.to_str().unwrap(), "--mode", "patterns"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(stdout_of(&output), "0\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn distance_exit_codes() {
    // parse error: missing header
    let bad = write_temp("bad.txt", "1 2 3\n");
    let output = bin()
        .args(["distance", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    std::fs::remove_file(&bad).ok();

    // domain violation: a single sequence
    let single = write_temp("single.txt", "level: 2\n1 2 1\n");
    let output = bin()
        .args(["distance", single.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    std::fs::remove_file(&single).ok();

    // missing file
    let output = bin()
        .args(["distance", "/nonexistent/seqpat-input.txt"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn standardize_prints_canonical_rows() {
    let path = write_temp(
        "standardize.txt",
        "level: 3\n1 1 3 2 1\n1 1 1\n# trailing comment\n",
    );
    let output = bin()
        .args(["standardize", path.to_str().unwrap()])
        .output()
        .unwrap();
    // rows of mixed length are a parse error, so use equal-length rows
    assert_eq!(output.status.code(), Some(2));
    std::fs::remove_file(&path).ok();

    let path = write_temp(
        "standardize-ok.txt",
        "level: 3\n1 1 3 2 1\n2 2 1 3 2\n1 1 1 1 1\n",
    );
    let output = bin()
        .args(["standardize", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(
        stdout_of(&output),
        "level: 3\n1 1 2 3 1\n1 1 2 3 1\n1 1 1 1 1\n"
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn standardize_output_reparses_and_is_stable() {
    let path = write_temp("restandardize.txt", "level: 4\n4 2 4 1 2\n3 3 1 2 4\n");
    let output = bin()
        .args(["standardize", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success());
    let first = stdout_of(&output);

    let again = write_temp("restandardize2.txt", &first);
    let output = bin()
        .args(["standardize", again.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&output), first, "already-standard input is fixed");
    std::fs::remove_file(&path).ok();
    std::fs::remove_file(&again).ok();
}

#[test]
fn generate_json_matches_maxdist() {
    let output = bin()
        .args(["generate", "7", "3", "2", "--json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["distance"], 4, "7 - ceil(7/3)");
    assert_eq!(value["sequences"].as_array().unwrap().len(), 2);
}

#[test]
fn count_verify_failure_path_does_not_trigger() {
    // the verification exit code is reserved for route disagreement, which
    // must not occur; make sure --verify succeeds across a small grid
    for n in 1..=6 {
        for level in 1..=4 {
            let output = bin()
                .args([
                    "count",
                    "--length",
                    &n.to_string(),
                    "--level",
                    &level.to_string(),
                    "--verify",
                ])
                .output()
                .unwrap();
            assert!(output.status.success(), "n={n} level={level}");
        }
    }
}
