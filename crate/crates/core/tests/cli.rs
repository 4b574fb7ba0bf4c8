use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn spherinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spherinv")).args(args).env_remove("NO_COLOR").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json")).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

fn assert_valid(json: &str) {
    let instance: Value = serde_json::from_str(json).unwrap();
    let schema = schema();
    let msgs: Vec<String> = match schema.validate(&instance) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("schema violations: {msgs:#?}");
}

#[test]
fn verify_examples_exit_zero() {
    for args in [
        &["verify", "--case", "ichino"][..],
        &["verify", "--case", "diagonal"],
        &["verify", "--case", "rankin-selberg", "--n", "2"],
    ] {
        let out = spherinv(args);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn fiber_examples() {
    assert_eq!(code(&spherinv(&["fiber", "--case", "gross-prasad", "--n", "2", "--trials", "50"])), 0);
    let out = spherinv(&["fiber", "--case", "friedberg-jacquet", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("over (0): 2 orbits"), "{}", stdout(&out));
    let bad = spherinv(&["fiber", "--case", "not-a-case"]);
    assert_eq!(code(&bad), 2);
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown case"));
}

#[test]
fn newton_examples() {
    assert_eq!(code(&spherinv(&["newton", "--mu", "()", "--n", "2", "--corrected"])), 0);
    assert_eq!(code(&spherinv(&["newton", "--mu", "(3,1)", "--n", "4", "--corrected"])), 0);
    assert_eq!(code(&spherinv(&["newton", "--mu", "(1,1,1)", "--n", "2"])), 2);
    // the uncorrected identity fails already for the empty partition
    assert_eq!(code(&spherinv(&["newton", "--mu", "()", "--n", "2"])), 1);
}

#[test]
fn out_of_grid_and_malformed_arguments_are_usage_errors() {
    assert_eq!(code(&spherinv(&["verify", "--case", "gross-prasad", "--n", "3"])), 2);
    assert_eq!(code(&spherinv(&["verify", "--case", "odd-gl", "--n", "0"])), 2);
    assert_eq!(code(&spherinv(&["fiber", "--case", "diagonal", "--trials", "0"])), 2);
    assert_eq!(code(&spherinv(&["verify"])), 2);
    assert_eq!(code(&spherinv(&["verify", "--case", "diagonal", "--format", "xml"])), 2);
    assert_eq!(code(&spherinv(&["--version"])), 0);
}

#[test]
fn json_output_matches_golden_files_byte_for_byte() {
    let cases = [
        (vec!["verify", "--case", "jacquet-ichino"], "verify_jacquet-ichino_n1.json"),
        (vec!["verify", "--case", "rankin-selberg", "--n", "2"], "verify_rankin-selberg_n2.json"),
        (vec!["fiber", "--case", "friedberg-jacquet", "--n", "1"], "fiber_friedberg-jacquet_n1.json"),
        (vec!["fiber", "--case", "gross-prasad", "--n", "2"], "fiber_gross-prasad_n2.json"),
    ];
    for (mut args, golden) in cases {
        args.extend(["--format", "json"]);
        assert_eq!(stdout(&spherinv(&args)), fixture(golden), "{golden}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["fiber", "--case", "rankin-selberg", "--n", "2", "--seed", "17", "--trials", "20", "--format", "json"];
    let first = spherinv(&args);
    let second = spherinv(&args);
    assert_eq!(first.stdout, second.stdout);
    let other_seed = spherinv(&["fiber", "--case", "rankin-selberg", "--n", "2", "--seed", "18", "--trials", "20", "--format", "json"]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn json_reports_validate_against_the_schema() {
    for args in [
        &["verify", "--case", "gross-prasad", "--n", "2", "--format", "json"][..],
        &["verify", "--case", "odd-gl", "--n", "3", "--format", "json", "--timing"],
        &["fiber", "--case", "jacquet-ichino", "--trials", "10", "--format", "json"],
        &["newton", "--mu", "(2,2)", "--n", "3", "--format", "json"],
    ] {
        assert_valid(&stdout(&spherinv(args)));
    }
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")).unwrap() {
        assert_valid(&std::fs::read_to_string(entry.unwrap().path()).unwrap());
    }
}

#[test]
fn timing_is_opt_in() {
    let plain: Value = serde_json::from_str(&stdout(&spherinv(&["verify", "--case", "diagonal", "--format", "json"]))).unwrap();
    assert!(plain.get("duration_ms").is_none());
    let timed: Value =
        serde_json::from_str(&stdout(&spherinv(&["verify", "--case", "diagonal", "--format", "json", "--timing"]))).unwrap();
    assert!(timed["duration_ms"].is_u64());
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = spherinv(&["verify", "--case", "jacquet-ichino", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), fixture("verify_jacquet-ichino_n1.json"));
}

#[test]
fn colors_follow_the_caller_and_no_color() {
    let mut colored = Vec::new();
    let mut err = Vec::new();
    spherinv::cli::run(["spherinv", "verify", "--case", "diagonal"], &mut colored, &mut err, true);
    assert!(String::from_utf8(colored).unwrap().contains('\x1b'));

    let out = Command::new(env!("CARGO_BIN_EXE_spherinv"))
        .args(["verify", "--case", "diagonal"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert!(!stdout(&out).contains('\x1b'));
}

#[test]
fn selftest_reports_a_corrupted_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for entry in std::fs::read_dir(&src).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let target = dir.path().join("verify_friedberg-jacquet_n2.json");
    let text = std::fs::read_to_string(&target).unwrap().replacen("\"c2\"", "\"c3\"", 1);
    std::fs::write(&target, text).unwrap();

    let out = spherinv(&["selftest", "--fixtures", dir.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let json = stdout(&out);
    assert_valid(&json);
    let report: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(report["status"], "fail");
    assert!(report["results"]["criteria"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let bad: Vec<&Value> =
        report["results"]["goldens"].as_array().unwrap().iter().filter(|g| g["outcome"] != "match").collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["file"], "verify_friedberg-jacquet_n2.json");
    let diff = bad[0]["diff"].as_str().unwrap();
    assert!(diff.lines().any(|l| l.starts_with('-') && l.contains("\"c3\"")), "{diff}");
    assert!(diff.lines().any(|l| l.starts_with('+') && l.contains("\"c2\"")), "{diff}");
}
