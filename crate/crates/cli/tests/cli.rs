//! The `summand` binary: exit codes, report shape, determinism.

use std::io::Write;
use std::process::{Command, Output};

fn summand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_summand")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn without_timings(mut v: serde_json::Value) -> serde_json::Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn commutative_ring_passes_check() {
    let out = summand(&["check", "zmod-6", "--props", "ssp,sip,c3", "--side", "both", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["caps", "ring", "theorems", "timings", "verdicts", "version"]);
    assert_eq!(report["verdicts"].as_array().unwrap().len(), 6);
    assert_eq!(report["caps"]["size"], 4096);
}

#[test]
fn failing_property_exits_one_with_labeled_witness() {
    let out = summand(&["check", "pattern-e13-f2", "--props", "ssp", "--side", "left", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = &json(&out)["verdicts"][0];
    assert_eq!(v["holds"], false);
    assert_eq!(v["side"], "left");
    assert_eq!(v["witness"]["first"]["label"], "e11");
    assert_eq!(v["witness"]["second"]["label"], "e11+e13");
    assert_eq!(v["witness"]["second"]["index"], 12);
    assert_eq!(v["witness_refails"], true);
}

#[test]
fn both_methods_are_reported() {
    let out = summand(&["check", "ut2-f2", "--props", "ssp", "--method", "both", "--side", "right", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let methods: Vec<String> = json(&out)["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["method"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(methods, ["definitional", "ef-criterion"]);
}

#[test]
fn invalid_input_exits_two() {
    let dir = std::env::temp_dir().join(format!("summand-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::File::create(&bad).unwrap().write_all(b"{\n  \"kind\": \"zmod\"\n  \"n\": 4\n}\n").unwrap();
    let out = summand(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&out.stderr));

    let mask = r#"{"kind":"pattern","n":2,"base":{"kind":"zmod","n":2},"mask":[[1,1],[1,0]]}"#;
    let out = summand(&["check", mask]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mask"));

    for args in [
        &["check", "no-such-source.json"][..],
        &["fixtures", "run", "no-such-fixture"],
        &["check", "f2", "--props", "ssq"],
        &["check", "f2", "--cap-size", "0"],
        &["verify", r#"{"kind":"zmod","n":4,"m":1}"#],
    ] {
        assert_eq!(summand(args).status.code(), Some(2), "{args:?}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn cap_overrides_reach_the_report() {
    let out = summand(&["check", "m2-f2", "--props", "c2", "--cap-ideals", "8"]);
    assert_eq!(out.status.code(), Some(2), "C2 needs ideal enumeration above the cap");
    let out = summand(&["check", "m2-f2", "--props", "ssp", "--cap-hom", "77", "--format", "json"]);
    assert_eq!(json(&out)["caps"]["hom"], 77);
    let out = summand(&["check", "m2-zmod4", "--cap-size", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    for args in [
        &["check", "pattern-e13-f2", "--format", "json"][..],
        &["verify", "ut2-f2", "--format", "json"],
        &["fixtures", "run", "zmod-4", "--format", "json"],
    ] {
        let (a, b) = (summand(args), summand(args));
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(without_timings(json(&a)), without_timings(json(&b)), "{args:?}");
    }
}

#[test]
fn verify_lists_skipped_checks_and_passes() {
    let out = summand(&["verify", "m2-f2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let checks = report["theorems"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["status"] == "skipped" && c["id"] == "regular-iff-matrix-ssp"));
    assert!(checks.iter().all(|c| c["status"] != "failed"));
    assert!(checks.iter().any(|c| c["subject"] == "R^1"));
}

#[test]
fn fixtures_list_and_markdown() {
    let out = summand(&["fixtures", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.starts_with("f2 "));

    let out = summand(&["check", "zmod-4", "--props", "regular"]);
    assert_eq!(out.status.code(), Some(1));
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.contains("| regular | - | element-scan | false | 2 (#2) |"), "{md}");
}

#[test]
fn the_pattern_fixture_fails_only_on_its_right_c3_claim() {
    let out = summand(&["fixtures", "run", "pattern-e13-f2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let failed: Vec<(String, String)> = report["theorems"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "failed")
        .map(|c| (c["id"].as_str().unwrap().into(), c["side"].as_str().unwrap_or("").into()))
        .collect();
    assert_eq!(failed, [("c3".to_string(), "right".to_string())]);
}
