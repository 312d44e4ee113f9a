// End-to-end tests running the compiled binary.

use std::process::{Command, Output};

use num_bigint::BigInt;

fn qsquares(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsquares"))
        .args(args)
        .output()
        .expect("failed to spawn qsquares")
}

fn stdout_of(args: &[&str]) -> String {
    let out = qsquares(args);
    assert!(
        out.status.success(),
        "args {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    qsquares(args).status.code().expect("no exit code")
}

#[test]
fn poly_human_golden_fixtures() {
    assert_eq!(stdout_of(&["poly", "c", "1"]), "q^2 - 2q + 1\n");
    assert_eq!(stdout_of(&["poly", "gamma", "2"]), "q^4 + q^3 + q + 1\n");
    assert_eq!(
        stdout_of(&["poly", "gamma", "3"]),
        "q^6 + q^5 - q^4 - 2q^3 - q^2 + q + 1\n"
    );
}

#[test]
fn poly_csv_dense_records() {
    assert_eq!(
        stdout_of(&["poly", "gamma", "1", "--format", "csv"]),
        "exponent,coefficient\n0,1\n1,2\n2,1\n"
    );
}

#[test]
fn poly_jsonlines_schema() {
    let out = stdout_of(&["poly", "c", "2", "--format", "jsonlines"]);
    let records: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 4); // C_2 = q^4 - q^3 - q + 1
    for r in &records {
        assert_eq!(r["v"], 1);
        assert_eq!(r["kind"], "C");
        assert_eq!(r["n"], 2);
    }
    assert_eq!(records[0]["exponent"], 0);
    assert_eq!(records[0]["coefficient"], 1);
    assert_eq!(records[1]["coefficient"], -1);
}

#[test]
fn poly_usage_errors() {
    assert_eq!(exit_code(&["poly", "gamma", "0"]), 2);
    assert_eq!(exit_code(&["poly", "gamma", "2", "--format", "bfile"]), 2);
    assert_eq!(exit_code(&["poly", "quadratic", "2"]), 2);
}

#[test]
fn verify_human_summary() {
    let out = stdout_of(&["verify", "--range", "1..100"]);
    assert!(out.contains("n=1 lemma1=pass"));
    assert!(out.ends_with("100/100 pass\n"));
    assert!(out.contains("theorem1: 100 pass, 0 fail"));
}

#[test]
fn verify_jsonlines_negative_coefficient_case() {
    let out = stdout_of(&[
        "verify", "--range", "3..3", "--checks", "theorem1", "--format", "jsonlines",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let report: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(report["n"], 3);
    assert_eq!(report["checks"][0]["name"], "theorem1");
    assert_eq!(report["checks"][0]["pass"], true);
    // Gamma_3 has negative coefficients, so no witness is recorded
    assert!(report["checks"][0]["detail"].is_null());
    let summary: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary["type"], "summary");
    assert_eq!(summary["fully_passed"], 1);
}

#[test]
fn verify_records_witness_on_nonnegative_side() {
    let out = stdout_of(&["verify", "--range", "10..10", "--checks", "theorem1", "--format", "csv"]);
    assert_eq!(
        out,
        "n,check,result,detail\n10,theorem1,pass,witness x=3 y=4 z=5 k=1\n"
    );
}

#[test]
fn verify_usage_errors() {
    assert_eq!(exit_code(&["verify", "--range", "1..0"]), 2);
    assert_eq!(exit_code(&["verify", "--range", "0..5"]), 2);
    let out = qsquares(&["verify", "--range", "1..5", "--checks", "lemma3"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("lemma1") && stderr.contains("structural"), "{stderr}");
}

#[test]
fn verify_output_is_byte_identical_across_jobs() {
    for format in ["human", "jsonlines", "csv"] {
        let single = qsquares(&["verify", "--range", "1..200", "--jobs", "1", "--format", format]);
        let eight = qsquares(&["verify", "--range", "1..200", "--jobs", "8", "--format", format]);
        assert_eq!(single.stdout, eight.stdout, "format {format}");
        assert!(single.status.success());
    }
}

#[test]
fn sequence_human_examples() {
    assert_eq!(stdout_of(&["sequence", "r2", "--range", "1..5"]), "4,4,0,4,8\n");
    assert_eq!(stdout_of(&["sequence", "d34", "--range", "1..6"]), "0,0,1,0,0,1\n");
    assert_eq!(
        stdout_of(&["sequence", "nonneg", "--range", "1..8"]),
        "1,1,0,1,1,0,0,1\n"
    );
    assert_eq!(stdout_of(&["sequence", "negsum", "--range", "3..3"]), "-4\n");
    assert_eq!(stdout_of(&["sequence", "possum", "--range", "25..25"]), "12\n");
}

#[test]
fn sequence_bfile_convention() {
    assert_eq!(
        stdout_of(&["sequence", "r2", "--range", "1..5", "--format", "bfile"]),
        "1 4\n2 4\n3 0\n4 4\n5 8\n"
    );
}

#[test]
fn sequence_csv_and_jsonlines() {
    assert_eq!(
        stdout_of(&["sequence", "d14", "--range", "1..3", "--format", "csv"]),
        "n,value\n1,1\n2,1\n3,1\n"
    );
    let out = stdout_of(&["sequence", "r2", "--range", "5..5", "--format", "jsonlines"]);
    let record: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(record["v"], 1);
    assert_eq!(record["stat"], "r2");
    assert_eq!(record["n"], 5);
    assert_eq!(record["value"], 8);
}

#[test]
fn sequence_usage_errors() {
    assert_eq!(exit_code(&["sequence", "r2", "--range", "4..2"]), 2);
    assert_eq!(exit_code(&["sequence", "r3", "--range", "1..5"]), 2);
}

#[test]
fn triples_listing() {
    assert_eq!(
        stdout_of(&["triples", "--z-limit", "1", "--format", "csv"]),
        "x,y,z\n0,1,1\n1,0,1\n"
    );
    let out = stdout_of(&["triples", "--z-limit", "13", "--format", "csv"]);
    assert!(out.contains("3,4,5"));
    assert!(out.contains("5,12,13"));
    assert_eq!(
        stdout_of(&["triples", "--z-limit", "5"]),
        "(0, 1, 1)\n(1, 0, 1)\n(3, 4, 5)\n"
    );
}

#[test]
fn large_range_warns_on_stderr() {
    let out = qsquares(&["sequence", "d34", "--range", "10000001..10000001"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    // below the threshold: silent
    let out = qsquares(&["sequence", "d34", "--range", "1..3"]);
    assert!(out.stderr.is_empty());
}

#[test]
fn poly_csv_round_trips_through_evaluation() {
    // Re-parse the CSV for Gamma_n, evaluate at q=1 (sum of coefficients),
    // and compare against the r2 sequence, for every n up to 500.
    let seq = stdout_of(&["sequence", "r2", "--range", "1..500", "--format", "bfile"]);
    let r2: Vec<(u64, i64)> = seq
        .lines()
        .map(|l| {
            let (n, v) = l.split_once(' ').unwrap();
            (n.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(r2.len(), 500);
    for &(n, expected) in &r2 {
        let csv = stdout_of(&["poly", "gamma", &n.to_string(), "--format", "csv"]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("exponent,coefficient"));
        let mut at_one = BigInt::from(0);
        for line in lines {
            let (_, c) = line.split_once(',').unwrap();
            at_one += c.parse::<i64>().unwrap();
        }
        assert_eq!(at_one, BigInt::from(expected), "n={n}");
    }
}
