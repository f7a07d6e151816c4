use std::io::Write;
use std::process::{Command, Stdio};

use hds_core::cli::run_with_input;
use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    run_stdin(args, "")
}

fn run_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("hds").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_input(&argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {out} {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn cascade_output_is_exact() {
    let (code, out, _) = run(&["cascade", "--group", "su", "--p", "2", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"cascade":[["1","0","0","0","-1"],["0","1","0","-1","0"]]}"#);
}

#[test]
fn blattner_param_sp4() {
    let v = ok_json(&["blattner-param", "--group", "sp", "--n", "4", "--lambda", "5,3,1,-2"]);
    assert_eq!(v["Lambda"], json!(["6", "5", "3", "-1"]));
    assert_eq!(v["condition_1_2"], json!(false));
    let c = ok_json(&["condition", "--group", "sp", "--n", "4", "--lambda", "5,3,1,-2"]);
    assert_eq!(c["condition_1_2"], json!(false));
}

#[test]
fn admissible_verdicts() {
    let v = ok_json(&["admissible", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-q-block"]);
    assert_eq!(v, json!({"status": "Admissible", "certificate": "ConeKernelTrivial"}));
    let v = ok_json(&["admissible", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-p-block", "--truncate", "3"]);
    assert_eq!(v["status"], "NotAdmissible");
    assert_eq!(v["witness"], json!(["1", "1", "0", "-1", "-1"]));
}

#[test]
fn subgroup_file_from_stdin_and_disk() {
    let desc = r#"{"name":"u1","projection":[["1","1","0","0","0"]],"flags":{"is_torus":true}}"#;
    let (code, out, err) =
        run_stdin(&["admissible", "--group", "su", "--p", "2", "--q", "3", "--subgroup-file", "-"], desc);
    assert_eq!(code, 0, "{err}");
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["status"], "Admissible");

    let path = std::env::temp_dir().join(format!("hds-subgroup-{}.json", std::process::id()));
    std::fs::write(&path, desc).unwrap();
    let v = ok_json(&["admissible", "--group", "su", "--p", "2", "--q", "3", "--subgroup-file", path.to_str().unwrap()]);
    assert_eq!(v["status"], "Admissible");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn multiplicity_commands() {
    let v = ok_json(&["kmult", "--group", "sp", "--n", "2", "--Lambda", "3,3", "--mu", "5,5"]);
    assert_eq!(v, json!({"mult": "1"}));
    let v = ok_json(&["blattner", "--group", "sp", "--n", "2", "--lambda", "2,1", "--mu", "5,5"]);
    assert_eq!(v, json!({"mult": "1"}));
    let v = ok_json(&["kmult", "--group", "sp", "--n", "2", "--Lambda", "3,3", "--degree", "1"]);
    assert_eq!(v["terms"][0]["hw"], json!(["5", "3"]));
    let v = ok_json(&["schmid", "--group", "su", "--p", "2", "--q", "2", "--degree", "2"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let v = ok_json(&["hmult", "--group", "su", "--p", "1", "--q", "2", "--subgroup", "su-q-block", "--Lambda", "2,-1,-1", "--mu", "1,-1"]);
    assert_eq!(v["complete"], json!(true));
    let v = ok_json(&["ds-hmult", "--group", "sp", "--n", "2", "--subgroup", "center", "--lambda", "2,1", "--mu", "6"]);
    assert_eq!(v["complete"], json!(true));
    let v = ok_json(&["branch", "--group", "sp", "--n", "2", "--subgroup", "su-n", "--Lambda", "2,0"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    let v = ok_json(&["invariants", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-p-block", "--degree", "2"]);
    assert_eq!(v["dim"], "3");
}

#[test]
fn structural_commands() {
    for cmd in ["pair", "cone", "chambers", "restricted-roots"] {
        ok_json(&[cmd, "--group", "sp", "--n", "2"]);
    }
    let v = ok_json(&["chambers", "--group", "sp", "--n", "2"]);
    assert_eq!(v["chambers"].as_array().unwrap().len(), 4);
    let v = ok_json(&["moment", "--group", "su", "--p", "2", "--q", "2", "--t", "2,1"]);
    assert_eq!(v["image"], json!(["2", "1/2", "-1/2", "-2"]));
    ok_json(&["sympow", "--group", "sp", "--n", "2", "--degree", "2"]);
    ok_json(&["tensor", "--group", "sp", "--n", "2", "--lambda", "1,0", "--mu", "1,1"]);
}

#[test]
fn domain_errors_exit_two_with_error_object() {
    let (code, out, _) = run(&["blattner-param", "--group", "sp", "--n", "2", "--lambda", "2,2"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "not_harish_chandra");
    let (code, out, _) = run(&["hmult", "--group", "su", "--p", "2", "--q", "2", "--subgroup", "su-p-block", "--Lambda", "2,2,-2,-2", "--mu", "0,0"]);
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["kind"], "not_admissible");
    let (code, _, _) = run(&["cascade", "--group", "su", "--p", "0", "--q", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["cascade", "--group", "su", "--p", "2"],
        vec!["blattner-param", "--group", "sp", "--n", "2", "--lambda", "1"],
        vec!["blattner-param", "--group", "sp", "--n", "2", "--lambda", "x,1"],
        vec!["frobnicate"],
        vec![],
        vec!["cascade", "--group", "sl", "--n", "2"],
        vec!["admissible", "--group", "sp", "--n", "2"],
    ] {
        let (code, out, _) = run(&args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
    }
}

#[test]
fn version_and_pretty() {
    let v = ok_json(&["--version"]);
    assert_eq!(v["schema_version"], hds_core::cli::SCHEMA_VERSION);
    let (_, out, _) = run(&["cascade", "--group", "sp", "--n", "1", "--pretty"]);
    assert!(out.contains('\n') && out.lines().count() > 2);
}

#[test]
fn verify_command_and_filter() {
    let v = ok_json(&["verify-paper"]);
    assert_eq!(v["all_pass"], json!(true));
    assert_eq!(v["items"].as_array().unwrap().len(), hds_core::verify::ITEMS.len());
    let v = ok_json(&["verify-paper", "--item", "sp4-counterexample"]);
    assert_eq!(v["items"].as_array().unwrap().len(), 1);
    let (code, _, _) = run(&["verify-paper", "--item", "no-such-item"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["pair", "--group", "su", "--p", "3", "--q", "2"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hds"))
        .args(["admissible", "--group", "sp", "--n", "2", "--subgroup-file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"name":"diag","projection":[["1","1"]],"flags":{"is_torus":true}}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "Admissible");

    let status = Command::new(env!("CARGO_BIN_EXE_hds")).args(["cascade"]).stderr(Stdio::null()).status().unwrap();
    assert_eq!(status.code(), Some(1));
}
