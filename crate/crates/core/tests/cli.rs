use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphequiv"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_reports() {
    let out = run(&["analyze", "gen:cycle:8"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["wl2Rank"], 5);

    let out = run(&["analyze", "gen:subdivision:complete:4"]);
    let v = json(&out);
    assert_eq!(v["classification"]["kind"], "distance-biregular");
    assert_eq!(v["classification"]["arrays"]["iota1"]["b"], serde_json::json!([3, 1, 2]));
    assert_eq!(v["classification"]["arrays"]["iota2"]["c"], serde_json::json!([1, 1, 2, 2]));

    let out = run(&["analyze", "@"]);
    assert_eq!(json(&out)["controllable"], true);
}

#[test]
fn compare_reports() {
    let out = run(&["compare", "gen:complete-bipartite:1,4", "gen:union:cycle:4+complete:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["cospectral"].as_bool(), v["c3"].as_bool()), (Some(true), Some(false)));

    let out = run(&["compare", "gen:cycle:6", "gen:union:complete:3+complete:3"]);
    let v = json(&out);
    assert_eq!((v["c2"].as_bool(), v["cospectral"].as_bool()), (Some(true), Some(false)));

    let out = run(&["compare", "gen:petersen", "IheA@GUAo"]);
    let v = json(&out);
    for key in ["c2", "c3", "cospectral", "generalizedCospectral", "walkEquivalent", "fractionalWitnessFound"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn inputs_from_stdin_json_and_files() {
    let mut child = bin()
        .args(["analyze", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)["size"], 2);

    let dir = std::env::temp_dir().join(format!("graphequiv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let list = dir.join("pairs.g6");
    // K_(1,4), C4 + K1, C6, 2K3
    std::fs::write(&list, "Ds_\nD]?\nEhEG\nEwCW\n").unwrap();
    let report = dir.join("report.json");
    let out = run(&["verify-corpus", "--input", list.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
    assert_eq!(v["interestingPairs"]["cospectralNotC3"].as_array().unwrap().len(), 1);
    assert_eq!(v["interestingPairs"]["c2NotCospectral"].as_array().unwrap().len(), 1);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn human_output_and_timestamps() {
    let out = run(&["compare", "gen:cycle:5", "gen:cycle:5", "--human"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("c3 => c2"));
    let out = run(&["analyze", "gen:path:3", "--timestamps"]);
    let v = json(&out);
    assert!(v["generatedAt"].is_u64());
    assert_eq!(v["report"]["order"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "not graph6 at all"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "gen:cycle:2"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "{", "--format", "json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify-corpus", "--n-max", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify-corpus"]).status.code(), Some(2));
    let out = run(&["analyze", "zz"]);
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["verify-corpus", "--n-max", "3", "--suite", "drg"]).status.code(), Some(0));
}
