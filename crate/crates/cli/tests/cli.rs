use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strictmono"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn strict_construction_round_trips_through_good_set() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("strict.json");
    let out = run(&["construct", "strict", "--n", "3", "--ell", "3", "--out", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let built: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(built["size"], 2187);
    assert_eq!(built["points"].as_array().unwrap().len(), 2187);

    let out = run(&["verify", "good-set", "--in", path_str(&file), "--ell", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    let dirs = report["directions"].as_array().unwrap();
    assert_eq!(dirs.len(), 13);
    assert!(dirs.iter().all(|r| r["computed"].as_u64().unwrap() <= 3));
}

#[test]
fn every_construction_is_accepted_by_its_verifier() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (&["construct", "nonstrict", "--n", "3", "--ell", "2"], "good-set"),
        (&["construct", "strict", "--n", "2", "--ell", "2"], "good-set"),
        (&["construct", "sequence", "--n", "1", "--ell", "2"], "good-set"),
        (&["construct", "es", "--a", "3", "--b", "4"], "good-set"),
        (&["construct", "repeated-es", "--ell", "3"], "good-set"),
        (&["construct", "pillage-stable", "--n", "4"], "stability"),
        (&["construct", "pillage-stable", "--n", "5"], "axioms"),
    ];
    for (k, (args, check)) in cases.iter().enumerate() {
        let file = dir.path().join(format!("{k}.json"));
        let mut full = args.to_vec();
        full.extend(["--out", path_str(&file)]);
        assert_eq!(run(&full).status.code(), Some(0), "{args:?}");
        let out = run(&["verify", check, "--in", path_str(&file)]);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn computed_and_target_sizes_reported() {
    let out = run(&["construct", "pillage-stable", "--n", "5"]);
    let v = json_of(&out);
    assert_eq!((v["computed_size"].as_u64(), v["target_size"].as_u64()), (Some(27), Some(27)));
    let out = run(&["construct", "repeated-es", "--ell", "2"]);
    assert_eq!(json_of(&out)["computed_size"], 8);
}

#[test]
fn malformed_requests_exit_2() {
    assert_eq!(run(&["construct", "strict", "--n", "0", "--ell", "3"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "strict", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "strict", "--n", "2", "--ell", "2", "--colour", "red"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "good-set", "--in", "/nonexistent.json", "--ell", "2"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":2,"points":[[0,0],[0,0]]}"#).unwrap();
    let out = run(&["verify", "good-set", "--in", path_str(&bad), "--ell", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json_of(&out)["error"].as_str().unwrap().contains("duplicate"));
}

#[test]
fn failed_verification_exits_1_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("line.json");
    std::fs::write(&file, r#"{"n":2,"points":[[0,0],[1,1],[2,2]]}"#).unwrap();
    let out = run(&["verify", "good-set", "--in", path_str(&file), "--ell", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["violation"]["direction"], serde_json::json!([1, 1]));
    assert_eq!(v["violation"]["indices"], serde_json::json!([0, 1, 2]));

    let pairs = dir.path().join("pairs.json");
    std::fs::write(&pairs, r#"{"d":2,"pairs":[[[0,0],[1,1]],[[0,1],[1,0]],[[0,2],[2,0]]]}"#).unwrap();
    let out = run(&["verify", "pairs", "--in", path_str(&pairs)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json_of(&out)["violation"].is_null());
}

#[test]
fn flats_from_points_are_minimalized() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("pts.json");
    std::fs::write(&file, r#"{"n":4,"points":[[1,7,1,3],[8,0,1,4],[1,0,9,5]]}"#).unwrap();
    let out = run(&["verify", "flats", "--in", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["system"]["flats"].as_array().unwrap().len(), 3);
    assert_eq!(v["coordinate_bound"]["bound"], 4);
}

#[test]
fn searches_and_certificates() {
    let out = run(&["search", "max-pairs", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["best"], 4);
    let out = run(&["certify", "exterior", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["rank"], 8);
    let out = run(&["search", "random-good", "--n", "2", "--ell", "2", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["good_found"], 0);
    let out = run(&["pillage", "pairs", "--n", "4"]);
    assert_eq!(json_of(&out)["count"], 25);
    let out = run(&["pillage", "bound", "--n", "3"]);
    assert_eq!(json_of(&out)["refined"], 27);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["construct", "strict", "--n", "2", "--ell", "3"][..],
        &["search", "random-good", "--n", "2", "--ell", "2", "--seed", "7", "--trials", "10"][..],
        &["construct", "pillage-stable", "--n", "5"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn inline_profile_is_accepted() {
    let profile = r#"{"n":2,"mode":"strict","lengths":[{"direction":[0,1],"length":2},{"direction":[1,-1],"length":3},{"direction":[1,0],"length":2},{"direction":[1,1],"length":2}]}"#;
    let out = run(&["construct", "strict", "--profile", profile]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["computed_size"], v["target_size"]);
}
