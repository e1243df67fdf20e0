use std::path::PathBuf;
use std::process::{Command, Output};

fn pasep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pasep")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn partition_function_text() {
    let out = pasep(&["zn", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 * q^0 * a^-1 * b^0 + 1 * q^0 * a^0 * b^-1\n");
}

#[test]
fn involution_of_the_worked_example() {
    let out = pasep(&["invol", "--perm", "7,4,8,3,6,2,1,5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2,4,8,7,3,6,1,5\n");
}

#[test]
fn balance_suite_passes() {
    let out = pasep(&["verify", "--suite", "balance", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["violations"], serde_json::json!([]));
    assert_eq!(report["suite"], "balance");
}

#[test]
fn other_suites_pass() {
    for suite in ["projection", "bijection", "involution", "outrates"] {
        let out = pasep(&["verify", "--suite", suite, "--n-max", "3"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn stationary_csv() {
    let out = pasep(&["stationary", "--chain", "pasep", "--n", "2", "--q", "0", "--alpha", "1", "--beta", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "state,probability_num,probability_den\n00,1,5\n01,1,5\n10,2,5\n11,1,5\n");
}

#[test]
fn stationary_json_for_the_pt_chain() {
    let out = pasep(&["stationary", "--chain", "pt", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let law: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(law.len(), 6);
    assert!(law.iter().all(|e| e["probability"] == "1/6"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["zn"],
        &["stationary", "--n", "2", "--alpha", "3/2"],
        &["stationary", "--n", "2", "--q", "0.5"],
        &["stationary", "--chain", "tableau", "--n", "2"],
        &["verify", "--suite", "everything"],
        &["invol", "--perm", "1,1,2"],
        &["flambda", "--state", "012"],
        &["phi", "--tableau", "/definitely/not/here.json"],
        &["stationary", "--n", "2", "--format", "dot"],
    ] {
        let out = pasep(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn phi_from_a_tableau_file() {
    let path = scratch("example.json");
    std::fs::write(&path, r#"{"shape":[4,4,4,3],"rows":[[1,1,0,0],[0,0,1,0],[1,1,1,1],[0,0,1]]}"#).unwrap();
    let out = pasep(&["phi", "--tableau", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7,4,8,3,6,2,1,5\n");

    let out = pasep(&["invol", "--tableau", path.to_str().unwrap()]);
    let bar = stdout(&out);
    let bar_path = scratch("example_bar.json");
    std::fs::write(&bar_path, bar).unwrap();
    let out = pasep(&["phi", "--tableau", bar_path.to_str().unwrap()]);
    assert_eq!(stdout(&out), "2,4,8,7,3,6,1,5\n");
}

#[test]
fn phi_inverse_prints_json() {
    let out = pasep(&["phi", "--perm", "21"]);
    assert_eq!(stdout(&out), "{\"shape\":[1],\"rows\":[[1]]}\n");
}

#[test]
fn simulation_is_reproducible() {
    let args = ["simulate", "--chain", "pt", "--n", "2", "--steps", "20000", "--seed", "9", "--q", "1/2"];
    let a = pasep(&args);
    let b = pasep(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("state,frequency\n"));
}

#[test]
fn dot_diagram() {
    let out = pasep(&["diagram", "--chain", "pasep", "--n", "2", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    for label in ["a/(N+1)", "b/(N+1)", "q/(N+1)", "1/(N+1)"] {
        assert!(dot.contains(label));
    }
}

#[test]
fn pt_move_list_json() {
    let out = pasep(&["diagram", "--chain", "pt", "--n", "1", "--format", "json"]);
    let states: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(states.len(), 2);
    for s in &states {
        let moves = s["moves"].as_array().unwrap();
        assert_eq!(moves.len(), 1);
        for key in ["kind", "row_index", "site_index", "target"] {
            assert!(moves[0].get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn enumerate_counts() {
    let out = pasep(&["enumerate", "--n", "3"]);
    assert_eq!(stdout(&out).lines().count(), 24);
    let out = pasep(&["enumerate", "--n", "2", "--format", "json"]);
    let items: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(items.len(), 6);
}

#[test]
fn output_flag_writes_a_file() {
    let path = scratch("z2.txt");
    let out = pasep(&["zn", "--n", "2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.matches(" + ").count(), 5);
}
