use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hexamoment"));
    cmd.env_remove("HEXAMOMENT_LIMIT");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema")
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn assert_conforms(schema_file: &str, instance: &Value) {
    let common = load("common.v1.json");
    let validator = jsonschema::options()
        .with_resource(
            "https://hexamoment.invalid/schema/common.v1.json",
            jsonschema::Resource::from_contents(common).unwrap(),
        )
        .build(&load(schema_file))
        .unwrap();
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}");
}

#[test]
fn count_prints_exact_integers() {
    assert_eq!(stdout(&run(&["count", "1", "1", "1"])), "2\n");
    assert_eq!(stdout(&run(&["count", "2", "2", "2"])), "20\n");
    let big = stdout(&run(&["count", "6", "6", "6"]));
    assert_eq!(big.trim(), "1478619421136");
    let v = json(&["count", "3", "3", "3", "--format", "json"]);
    assert_eq!(v["count"], "980");
    assert_conforms("count.v1.json", &v);
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        vec!["count", "0", "1", "1"],
        vec!["count", "1", "1"],
        vec!["frobnicate"],
        vec!["moments", "2", "2", "2", "--format", "csv"],
        vec!["--limit", "0", "count", "1", "1", "1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn prob_table_json_matches_schema() {
    let v = json(&["prob-table", "1", "1", "1"]);
    assert_conforms("prob-table.v1.json", &v);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["x"], 1);
    assert_eq!(entries[0]["y"], 0);
    assert_eq!(entries[0]["p"], "1/2");
    assert_eq!(entries[1]["y"], 1);
    assert_eq!(entries[1]["p"], "1/2");
    assert_eq!(v["total"], "1/1");

    let v = json(&["prob-table", "3", "2", "2", "--float"]);
    assert_conforms("prob-table.v1.json", &v);
    assert_eq!(v["entries"].as_array().unwrap().len(), 4 * 5);
    assert_eq!(v["total"], "6/1");
    assert!(v["entries"][0]["p_float"].is_number());
}

#[test]
fn prob_table_csv_columns_and_footer() {
    let text = stdout(&run(&["prob-table", "2", "3", "2", "--format", "csv"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a,b,c,x,y,p_num,p_den");
    assert_eq!(lines.len(), 1 + 4 * 4 + 1);
    assert!(lines[1].starts_with("2,3,2,1,0,"));
    assert_eq!(*lines.last().unwrap(), "2,3,2,,,6,1");
    let with_float = stdout(&run(&["prob-table", "1", "1", "1", "--format", "csv", "--float"]));
    assert!(with_float.starts_with("a,b,c,x,y,p_num,p_den,p_float\n1,1,1,1,0,1,2,0.5\n"));
}

#[test]
fn moments_report_exact_values() {
    let v = json(&["moments", "2", "2", "2"]);
    assert_conforms("moments.v1.json", &v);
    assert_eq!(v["vertical"], "18/1");
    assert_eq!(v["consistent"], true);
    assert_eq!(json(&["moments", "1", "1", "1"])["horizontal"], "0/1");
    assert_eq!(json(&["moments", "3", "5", "4"])["horizontal"], "40/1");
    let text = stdout(&run(&["moments", "3", "3", "3", "--format", "text"]));
    assert!(text.contains("vertical 93/1"));
}

#[test]
fn default_verify_sweep_passes() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS row-sum"));
    assert!(text.trim_end().ends_with("0 failed"));
    let v = json(&["verify", "--max", "2", "--format", "json"]);
    assert_conforms("verify.v1.json", &v);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_single_box_covers_both_orientations() {
    for dims in [["2", "3", "2"], ["3", "2", "2"]] {
        let mut args = vec!["verify", "--format", "json"];
        args.extend(dims);
        let v = json(&args);
        assert_conforms("verify.v1.json", &v);
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn injected_fault_fails_verification() {
    let out = run(&["verify", "2", "2", "2", "--inject-fault", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_conforms("verify.v1.json", &v);
    let failures = v["failures"].as_array().unwrap();
    assert!(failures.iter().any(|f| f["check"] == "row-sum"));
    assert!(!stdout(&run(&["verify", "--help"])).contains("inject"));
}

#[test]
fn limit_flag_and_environment() {
    assert_eq!(run(&["--limit", "5", "count", "3", "3", "3"]).status.code(), Some(3));
    assert_eq!(
        run(&["--limit", "5", "--force", "count", "3", "3", "3"]).status.code(),
        Some(0)
    );
    let env_limited = bin()
        .env("HEXAMOMENT_LIMIT", "5")
        .args(["moments", "3", "3", "3"])
        .output()
        .unwrap();
    assert_eq!(env_limited.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&env_limited.stderr).contains("--limit"));
    let overridden = bin()
        .env("HEXAMOMENT_LIMIT", "5")
        .args(["--limit", "1000", "count", "3", "3", "3"])
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
}

#[test]
fn samples_are_reproducible() {
    let args = ["sample", "3", "3", "3", "--seed", "11", "--count", "4"];
    let first = run(&args);
    assert_eq!(first.stdout, run(&args).stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_conforms("sample.v1.json", &v);
    assert_eq!(v["samples"].as_array().unwrap().len(), 4);
    let other = run(&["sample", "3", "3", "3", "--seed", "12", "--count", "4"]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn sample_frequencies_on_the_unit_box() {
    const K: u64 = 20_000;
    let v = json(&["sample", "1", "1", "1", "--seed", "5", "--count", &K.to_string()]);
    let zeros = v["samples"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["horizontals"][0][1] == 0)
        .count() as f64;
    let sigma = (K as f64 * 0.25).sqrt();
    assert!((zeros - K as f64 / 2.0).abs() <= 5.0 * sigma, "{zeros}");
}

#[test]
fn renders() {
    let svg = stdout(&run(&["sample", "3", "5", "4", "--render", "svg"]));
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches(r#"class="horizontal""#).count(), 15);
    assert_eq!(svg.matches("<svg").count(), svg.matches("</svg>").count());
    let ascii = stdout(&run(&["sample", "2", "2", "2", "--render", "ascii", "--seed", "1"]));
    assert!(ascii.contains('█'));
    assert!(ascii.lines().all(|l| l.chars().all(|ch| " █▒░".contains(ch))));
}
