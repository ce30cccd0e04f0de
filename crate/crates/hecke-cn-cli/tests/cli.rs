//! End-to-end tests of the command-line surface: output formats, exit
//! codes, determinism, and configuration.

use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-cn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hecke(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn exit_code(args: &[&str]) -> i32 {
    hecke(args).status.code().expect("exit code")
}

#[test]
fn ds_prints_the_worked_parameter() {
    let out = stdout(&["ds", "--sigma", "4,3,3,2,1", "--m", "9/4"]);
    assert_eq!(
        out,
        "ds(4,3,3,2,1) at m = 9/4: {[-7/4,9/4] [1/4] [5/4,13/4] [9/4,21/4]*}\n"
    );
    let traced = stdout(&["ds", "--sigma", "4,3,3,2,1", "--m", "9/4", "--trace"]);
    assert!(traced.contains("+ [9/4, 13/4, 17/4, 21/4]"));
    assert!(traced.contains("- [-7/4, -3/4]"));
}

#[test]
fn ds_json_is_deterministic_and_sorted() {
    let a = stdout(&["ds", "--sigma", "2", "--m", "7/4", "--format", "json"]);
    let b = stdout(&["ds", "--sigma", "2", "--m", "7/4", "--format", "json"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).expect("valid json");
    assert_eq!(v["ds"]["segments"][0]["lo"], "7/4");
    assert_eq!(v["ds"]["segments"][0]["hi"], "11/4");
    assert_eq!(v["ds"]["segments"][0]["marked"], true);
}

#[test]
fn peel_logs_strips() {
    let out = stdout(&["peel", "--sigma", "1,1", "--m", "1/4"]);
    assert_eq!(out, "- [-3/4, 1/4]\n");
}

#[test]
fn orbits_emits_dot_and_json() {
    let dot = stdout(&["orbits", "--sigma", "2", "--m", "3/4"]);
    assert_eq!(dot.matches("label=").count(), 4);
    assert_eq!(dot.matches("->").count(), 4);
    let dot2 = stdout(&["orbits", "--sigma", "2", "--m", "3/4"]);
    assert_eq!(dot, dot2);

    let json = stdout(&[
        "orbits",
        "--weights",
        "3/4",
        "--m",
        "3/4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 2);
    assert_eq!(v["covers"][0][2], "mark_removal");
}

#[test]
fn springer_reports_agreement() {
    let out = stdout(&["springer", "--sigma", "4,3,3,2,1", "--m", "9/4"]);
    assert!(out.contains("(1,3,9,11,15,23)"));
    assert!(out.contains("{(4,3,3,1)(2)}"));
    assert!(out.contains("agree:    true"));

    let csv = stdout(&["springer", "--sigma", "1", "--m", "3/4", "--format", "csv"]);
    assert!(csv.starts_with("n,m,sigma,bipartition_slooten,orbit,bipartition_ls,agree\n"));
    assert!(csv.contains("\"(5)\""));
}

#[test]
fn tempered_counts() {
    let csv = stdout(&["tempered", "--n", "2", "--m", "3/4", "--format", "csv"]);
    assert_eq!(csv, "n,bipartition_count,enumerated\n2,5,5\n");
    let ascii = stdout(&["tempered", "--n", "0", "--m", "3/4"]);
    assert!(ascii.contains("count: 1"));
}

#[test]
fn profile_lists_intervals() {
    let out = stdout(&["profile", "--sigma", "1,1", "--m-lo", "0", "--m-hi", "3/2"]);
    assert!(out.contains("(0, 1/2)"));
    assert!(out.contains("critical points: 1/2, 1"));
}

#[test]
fn check_runs_suites() {
    let out = stdout(&["check", "n2-table"]);
    assert!(out.contains("n2-table: PASS"));
    let json = stdout(&["check", "springer-example", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v["pass"], true);
}

#[test]
fn exit_codes() {
    // parse / validation errors exit 2
    assert_eq!(exit_code(&["ds", "--sigma", "1,1", "--m", "1/2"]), 2);
    assert_eq!(exit_code(&["ds", "--sigma", "2", "--m", "0.75"]), 2);
    assert_eq!(exit_code(&["ds", "--sigma", "3,4", "--m", "1/4"]), 2);
    assert_eq!(exit_code(&["check", "nothing-registered-name"]), 2);
    // cap exceeded exits 4
    assert_eq!(exit_code(&["orbits", "--sigma", "5,4,4", "--m", "1/4"]), 4);
}

#[test]
fn config_file_defaults() {
    let dir = std::env::temp_dir().join("hecke-cn-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.txt");
    std::fs::write(&path, "default_m = 9/4\nn_cap = 10\n# comment\n").unwrap();
    let cfg = path.to_str().unwrap();
    let out = stdout(&["--config", cfg, "ds", "--sigma", "2"]);
    assert!(out.contains("m = 9/4"));
    // the configured cap is enforced
    assert_eq!(exit_code(&["--config", cfg, "tempered", "--n", "11"]), 4);
}

#[test]
fn env_cap_override_requires_force_above_14() {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke-cn"))
        .env("HECKE_CN_N_CAP", "15")
        .args(["tempered", "--n", "3", "--m", "3/4"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_hecke-cn"))
        .env("HECKE_CN_N_CAP", "15")
        .args(["--force", "tempered", "--n", "3", "--m", "3/4"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}
