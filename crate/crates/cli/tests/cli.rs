use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn rlmds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlmds")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = rlmds(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn gf4_search_finds_the_single_mds_triple() {
    let v = json(&["search", "--p", "2", "--m", "2", "--alpha", "0,1,2", "--k", "3", "--target", "mds"]);
    assert_eq!(v["schema"], "rlmds.search/v1");
    assert_eq!(v["matched"], 1);
    let row = &v["rows"][0];
    assert_eq!((row["delta"].as_u64(), row["tau"].as_u64(), row["pi"].as_u64()), (Some(0), Some(3), Some(2)));
    assert_eq!(row["d"], 4);
}

#[test]
fn verdict_counts_cover_every_triple() {
    let v = json(&["search", "--q", "5", "--alpha", "1,2,3", "--k", "3"]);
    let total: u64 = v["counts"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(total, 125);
    assert_eq!(v["total"], 125);
    assert_eq!(v["rows"].as_array().unwrap().len(), 125);
}

#[test]
fn classify_c2_gf5_example() {
    let v = json(&["classify-c2", "--p", "5", "--m", "1", "--alpha", "1,2,3", "--k", "3", "--delta", "2", "--tau", "0", "--pi", "1"]);
    let c = &v["classification"];
    assert_eq!((c["n"].as_u64(), c["k"].as_u64(), c["d"].as_u64()), (Some(6), Some(3), Some(4)));
    assert_eq!(c["verdict"], "MDS");
    assert_eq!(v["mds"]["overall"], true);
}

#[test]
fn power_notation_is_accepted() {
    let a = json(&["classify-c2", "--q", "8", "--alpha", "0,1,g,g^2", "--k", "3", "--delta", "g^3", "--tau", "g^5", "--pi", "g"]);
    let b = json(&["classify-c2", "--q", "8", "--alpha", "0,1,2,4", "--k", "3", "--delta", "3", "--tau", "7", "--pi", "2"]);
    assert_eq!(a, b);
    assert_eq!(a["notation"]["powers"]["3"], "g^3");
}

#[test]
fn classify_reads_a_built_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("code.json");
    let out = rlmds(&["build", "--q", "7", "--family", "rs", "--alpha", "1,2,3,4,5,6", "--k", "3", "--json"]);
    assert!(out.status.success());
    fs::write(&path, &out.stdout).unwrap();
    let v = json(&["classify", "--code", path.to_str().unwrap()]);
    assert_eq!((v["d"].as_u64(), v["verdict"].as_str()), (Some(4), Some("MDS")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["search", "--q", "6", "--alpha", "1", "--k", "1"][..],
        &["classify-c2", "--q", "5", "--alpha", "1,2,3", "--k", "3", "--delta", "2"],
        &["classify-c2", "--q", "5", "--alpha", "1,1,3", "--k", "3", "--delta", "2", "--tau", "0", "--pi", "1"],
        &["search", "--q", "5", "--alpha", "1,2,9", "--k", "3"],
        &["field", "--q", "5", "--format", "csv"],
        &["search", "--q", "5", "--alpha", "1,2,3", "--k", "3", "--target", "best"],
        &["nonsense"],
    ] {
        let out = rlmds(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = rlmds(&["covering", "--q", "5", "--alpha", "1,2,3", "--k", "3", "--sweep", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn help_exits_0() {
    assert_eq!(rlmds(&["--help"]).status.code(), Some(0));
    assert_eq!(rlmds(&["search", "--help"]).status.code(), Some(0));
}

#[test]
fn saved_config_replays_identically() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let args = ["search", "--q", "4", "--alpha", "0,1,2", "--k", "3", "--no-timing", "--json", "--save-config"];
    let mut first = args.to_vec();
    first.push(cfg.to_str().unwrap());
    let a = rlmds(&first);
    assert!(a.status.success());
    let saved: Value = serde_json::from_str(&fs::read_to_string(&cfg).unwrap()).unwrap();
    assert_eq!(saved["schema"], "rlmds.config/v1");
    assert_eq!(saved["command"]["name"], "search");
    let b = rlmds(&["replay", cfg.to_str().unwrap()]);
    assert!(b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_emit_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = rlmds(&["search", "--q", "5", "--alpha", "1,2,3", "--k", "3", "--format", "csv", "--emit", path.to_str().unwrap()]);
    assert!(out.status.success());
    let file = fs::read_to_string(&path).unwrap();
    assert_eq!(file.as_bytes(), &out.stdout[..]);
    let mut lines = file.lines();
    assert_eq!(lines.next(), Some("# schema: rlmds.search.csv/v1"));
    assert_eq!(lines.next(), Some("delta,tau,pi,cond1,cond2,cond3,cond4,verdict,d,d_dual"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 125);
    assert!(rows.contains(&"2,0,1,true,true,true,true,MDS,4,4"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let base = ["search", "--q", "7", "--alpha", "1,2,3", "--k", "3", "--no-timing", "--json"];
    let runs: Vec<Vec<u8>> = ["1", "2", "4"]
        .iter()
        .map(|t| {
            let mut a = base.to_vec();
            a.extend(["--threads", t]);
            let out = rlmds(&a);
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0], runs[2]);
}

#[test]
fn fixtures_round_trip_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(rlmds(&["fixtures", "--out", d]).status.success());
    assert!(rlmds(&["fixtures", "--check", d]).status.success());
    let victim = dir.path().join("gf5_mds_6_3_4.json");
    assert!(victim.exists());
    fs::write(&victim, "{}").unwrap();
    let out = rlmds(&["fixtures", "--check", d]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("gf5_mds_6_3_4"));
}

#[test]
fn covering_sweep_is_consistent() {
    let v = json(&["covering", "--q", "5", "--alpha", "0,1,2,3", "--k", "3", "--sweep"]);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 125);
}

#[test]
fn extendable_single_set() {
    let v = json(&["extendable", "--q", "7", "--alpha", "1,2,4,6"]);
    assert_eq!(v["predicted_dual_distance"], v["measured_dual_distance"]);
}

#[test]
fn field_show_filters_sections() {
    let v = json(&["field", "--p", "2", "--m", "3", "--show", "modulus"]);
    assert_eq!(v["modulus"], serde_json::json!([1, 1, 0, 1]));
    assert!(v.get("table").is_none());
    let v = json(&["field", "--q", "9", "--show", "primitive"]);
    assert_eq!(v["primitive_elements"].as_array().unwrap().len(), 4);
    let out = rlmds(&["field", "--q", "4", "--show", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("     3  g^2"));
}

#[test]
fn warnings_reach_the_report() {
    let v = json(&["classify-c2", "--q", "5", "--alpha", "1,2,3", "--k", "3", "--delta", "2", "--tau", "0", "--pi", "1"]);
    assert!(v["warnings"][0].as_str().unwrap().contains("outside"));
}
