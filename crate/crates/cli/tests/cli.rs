//! End-to-end tests of the installed binary: contracted output strings,
//! JSON schemas, exit codes, and byte determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn cuspidal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = cuspidal(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_ok(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_ok(args)).expect("valid JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    cuspidal(args).status.code().expect("no signal")
}

#[test]
fn alexander_symmetric_torus_3_4() {
    assert_eq!(
        stdout_ok(&["alexander", "--cusp", "3,4", "--symmetric"]),
        "t^3 - t^2 + 1 - t^-2 + t^-3\n"
    );
}

#[test]
fn alexander_json_is_sorted_pairs() {
    let v = json_ok(&["alexander", "--cusp", "3,4", "--json"]);
    assert_eq!(v, serde_json::json!([[0, 1], [1, -1], [3, 1], [5, -1], [6, 1]]));
}

#[test]
fn v_at_zero_for_torus_3_4() {
    assert_eq!(stdout_ok(&["v", "--cusp", "3,4", "--m", "0"]), "1\n");
    assert_eq!(stdout_ok(&["v", "--cusp", "3,4", "--m", "0", "--json"]), "1\n");
}

#[test]
fn v_window_schema() {
    let v = json_ok(&["v", "--cusp", "3,4", "--json"]);
    assert_eq!(v["genus"], 3);
    assert_eq!(v["window_start"], -6);
    assert_eq!(v["values"], serde_json::json!([6, 5, 4, 3, 3, 2, 1, 1, 1, 0]));
}

#[test]
fn v_convolves_multiple_knots() {
    // trefoil # trefoil: V_0 = 1, not 2
    assert_eq!(
        stdout_ok(&["v", "--cusp", "2,3", "--cusp", "2,3", "--m", "0"]),
        "1\n"
    );
}

#[test]
fn semigroup_text_and_json() {
    assert_eq!(
        stdout_ok(&["semigroup", "--cusp", "3,4"]),
        "gaps: 1 2 5\ngenus: 3\nconductor: 6\n"
    );
    let v = json_ok(&["semigroup", "--generators", "4,6,13", "--json"]);
    assert_eq!(
        v,
        serde_json::json!({"gaps": [1, 2, 3, 5, 7, 9, 11, 15], "genus": 8, "conductor": 16})
    );
}

#[test]
fn staircase_text_and_json() {
    assert_eq!(
        stdout_ok(&["staircase", "--cusp", "3,4"]),
        "m: 0 1 1 3 3\nx: (3,0) (1,1) (0,3)\ny: (3,1) (1,3)\ngenus: 3\n"
    );
    let v = json_ok(&["staircase", "--cusp", "3,4", "--json"]);
    assert_eq!(
        v,
        serde_json::json!({
            "m": [0, 1, 1, 3, 3],
            "x": [[3, 0], [1, 1], [0, 3]],
            "y": [[3, 1], [1, 3]],
            "genus": 3,
        })
    );
}

#[test]
fn d_invariant_exact_fraction() {
    assert_eq!(stdout_ok(&["d", "--cusp", "2,3", "--q", "9", "--m", "1"]), "10/9\n");
    assert_eq!(stdout_ok(&["d", "--cusp", "2,3", "--q", "9", "--m", "0"]), "0\n");
    assert_eq!(
        stdout_ok(&["d", "--cusp", "2,3", "--q", "9", "--m", "1", "--json"]),
        "\"10/9\"\n"
    );
}

#[test]
fn obstruct_counterexample_report() {
    let v = json_ok(&[
        "obstruct", "--degree", "8", "--cusp", "6,7", "--cusp", "2,9", "--cusp", "2,5", "--json",
    ]);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["genus_residual"], 0);
    assert_eq!(v["bl"]["verdict"], "pass");
    assert_eq!(v["bl"]["rows"].as_array().unwrap().len(), 7);
    assert_eq!(v["d_invariants"]["all_zero"], true);
    assert_eq!(v["flmn"]["satisfied"], false);
    let violated: Vec<i64> = v["flmn"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["j"].as_i64().unwrap())
        .collect();
    assert_eq!(violated, [1, 4]);
    assert_eq!(v["cusps"], serde_json::json!([[6, 7], [2, 9], [2, 5]]));
}

#[test]
fn obstruct_verdicts_are_data_not_exit_codes() {
    let fail = cuspidal(&["obstruct", "--degree", "5", "--cusp", "3,7"]);
    assert!(fail.status.success());
    assert!(String::from_utf8_lossy(&fail.stdout).contains("verdict: fail"));

    let impossible = cuspidal(&["obstruct", "--degree", "3", "--cusp", "2,3", "--cusp", "2,3"]);
    assert!(impossible.status.success());
    let text = String::from_utf8_lossy(&impossible.stdout).to_string();
    assert!(text.contains("genus residual: -1"));
    assert!(text.contains("verdict: impossible"));
    assert!(text.contains("bl check: skipped"));
}

#[test]
fn config_file_matches_inline_flags() {
    let path = std::env::temp_dir().join(format!("cuspidal-cfg-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"degree": 8, "cusps": [[6,7],[2,9],[2,5]]}"#).unwrap();
    let from_file = stdout_ok(&["obstruct", "--config", path.to_str().unwrap(), "--json"]);
    let inline = stdout_ok(&[
        "obstruct", "--degree", "8", "--cusp", "6,7", "--cusp", "2,9", "--cusp", "2,5", "--json",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(from_file, inline);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["obstruct", "--degree", "8", "--cusp", "6,7", "--cusp", "2,9", "--cusp", "2,5", "--json"][..],
        &["search", "--degree", "3", "--max-degree", "8", "--json"][..],
        &["search", "--degree", "5", "--cusps", "2", "--format", "json"][..],
        &["v", "--cusp", "4,6,7", "--json"][..],
    ] {
        assert_eq!(stdout_ok(args), stdout_ok(args), "{args:?} not deterministic");
    }
}

#[test]
fn search_degree_five_trichotomy() {
    let text = stdout_ok(&["search", "--degree", "5"]);
    assert_eq!(
        text,
        "degree 5 (2,13): pass [family d]\n\
         degree 5 (3,7): FAIL at j=1 (computed 2, required 3)\n\
         degree 5 (4,5): pass [family a]\n\
         summary: 3 candidates, 2 pass, 1 fail\n"
    );
}

#[test]
fn search_json_shape_and_families() {
    let v = json_ok(&["search", "--degree", "8", "--json"]);
    assert_eq!(v["summary"]["candidates"], 4);
    let families: Vec<Value> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["family"].clone())
        .collect();
    // (2,43) fails and is in no family; (3,22) e; (4,15) b; (7,8) a
    assert_eq!(families, vec![Value::Null, "e".into(), "b".into(), "a".into()]);
    assert_eq!(v["review"].as_array().unwrap().len(), 0);
}

#[test]
fn search_flmn_flag_adds_advisory_column() {
    let text = stdout_ok(&["search", "--degree", "5", "--flmn"]);
    assert!(text.contains("(4,5): pass [family a] flmn=ok"));
    let v = json_ok(&["search", "--degree", "5", "--flmn", "--json"]);
    assert_eq!(v["candidates"][0]["flmn_satisfied"], true);
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(exit_code(&["semigroup", "--cusp", "3,6"]), 2);
    assert_eq!(exit_code(&["semigroup", "--cusp", "banana"]), 2);
    assert_eq!(exit_code(&["semigroup", "--generators", "2,4"]), 2);
    assert_eq!(exit_code(&["v", "--generators", "3,5,7", "--m", "0"]), 2);
    assert_eq!(exit_code(&["d", "--cusp", "2,3", "--q", "9", "--m", "5"]), 2);
    assert_eq!(exit_code(&["d", "--cusp", "3,4", "--q", "4", "--m", "0"]), 2);
    assert_eq!(exit_code(&["search", "--degree", "5", "--cusps", "3"]), 2);
    assert_eq!(exit_code(&["search", "--degree", "2"]), 2);
    assert_eq!(exit_code(&["flmn", "--degree", "4", "--cusp", "2,3"]), 2);
    assert_eq!(exit_code(&["obstruct", "--degree", "8"]), 2);
    assert_eq!(exit_code(&["staircase", "--cusp", "3,4", "--cusp", "2,3"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);
    assert_eq!(exit_code(&["v", "--cusp", "2,3", "--format", "text", "--json"]), 2);
}

#[test]
fn missing_config_file_exits_two() {
    assert_eq!(exit_code(&["obstruct", "--config", "/nonexistent/x.json"]), 2);
}

#[test]
fn sharded_search_merges_to_single_range() {
    let whole = stdout_ok(&["search", "--degree", "3", "--max-degree", "9", "--json"]);
    let whole: Value = serde_json::from_str(&whole).unwrap();
    let mut merged = Vec::new();
    for (lo, hi) in [("3", "5"), ("6", "7"), ("8", "9")] {
        let shard = json_ok(&["search", "--degree", lo, "--max-degree", hi, "--json"]);
        merged.extend(shard["candidates"].as_array().unwrap().clone());
    }
    assert_eq!(whole["candidates"].as_array().unwrap(), &merged);
}
