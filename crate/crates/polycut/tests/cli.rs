//! End-to-end CLI tests: exit-code contract, file round-trips, report JSON.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn polycut(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycut"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_validate_analyze_simplex() {
    let dir = tempdir().unwrap();
    let out = polycut(&["construct", "--kind", "simplex", "--d", "3", "--out", "s.fl"], dir.path());
    assert!(out.status.success());

    let out = polycut(&["validate", "s.fl"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["valid"], true);
    assert_eq!(report["euler_ok"], true);

    let out = polycut(&["analyze", "s.fl"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["lambda"], 3);
    assert_eq!(report["all_min_cuts_trivial"], true);
}

#[test]
fn construct_nontrivial_and_analyze_with_oracle() {
    let dir = tempdir().unwrap();
    let out = polycut(
        &["construct", "--kind", "nontrivial", "--d", "4", "--out", "p4.fl"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("p4.fl").exists());
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("p4.fl.labels.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["labels"]["x_1"], 1);
    assert_eq!(sidecar["f0"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(sidecar["designated_cut"].as_array().unwrap().len(), 10);

    let out = polycut(&["analyze", "p4.fl", "--oracle"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["lambda"], 10);
    assert_eq!(report["delta"], 10);
    assert_eq!(report["all_min_cuts_trivial"], false);
    assert_eq!(report["theorem_applicable"], false);
    assert_eq!(report["contradiction"], false);
}

#[test]
fn oracle_flag_errors_above_scale() {
    let dir = tempdir().unwrap();
    polycut(
        &["construct", "--kind", "nontrivial", "--d", "5", "--out", "p5.fl"],
        dir.path(),
    );
    let out = polycut(&["analyze", "p5.fl", "--oracle"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle scale exceeded"));
}

#[test]
fn malformed_file_exits_2() {
    let dir = tempdir().unwrap();
    std::fs::write(dir.path().join("garbage.fl"), "1 2 3\n4 5 6\n").unwrap();
    let out = polycut(&["analyze", "garbage.fl"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_complex_exits_1_on_validate_2_on_analyze() {
    let dir = tempdir().unwrap();
    std::fs::write(dir.path().join("broken.fl"), "dim 3\n1 2 3\n1 2 4\n").unwrap();

    let out = polycut(&["validate", "broken.fl"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["pseudomanifold"], false);

    let out = polycut(&["analyze", "broken.fl"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_round_trip_is_canonical() {
    let dir = tempdir().unwrap();
    polycut(
        &["construct", "--kind", "cyclic", "--d", "4", "--n", "8", "--out", "c.fl"],
        dir.path(),
    );
    let text = std::fs::read_to_string(dir.path().join("c.fl")).unwrap();
    let complex = polycut::io::parse_facet_list(&text).unwrap();
    assert_eq!(polycut::io::canonical_facet_list(&complex), text);
}

#[test]
fn links_subcommand() {
    let dir = tempdir().unwrap();
    polycut(
        &["construct", "--kind", "cyclic", "--d", "4", "--n", "7", "--out", "c.fl"],
        dir.path(),
    );
    let out = polycut(&["links", "c.fl"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["checked"], 7);
}

#[test]
fn campaign_writes_reproducible_summary() {
    let dir = tempdir().unwrap();
    let args = [
        "campaign",
        "--family",
        "plane-triangulations",
        "--count",
        "4",
        "--seed",
        "12",
        "--n-min",
        "8",
        "--n-max",
        "14",
        "--flip-max",
        "30",
        "--out",
        "run1",
    ];
    let out = polycut(&args, dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = stdout_json(&out);
    assert_eq!(summary["totals"]["instances"], 4);
    assert_eq!(summary["totals"]["contradictions"], 0);

    let mut args2 = args;
    args2[args.len() - 1] = "run2";
    polycut(&args2, dir.path());
    let a = std::fs::read_to_string(dir.path().join("run1/summary.json")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("run2/summary.json")).unwrap();
    assert_eq!(a, b, "summaries must be byte-identical for equal configs");
}

#[test]
fn worker_env_var_is_honored() {
    let dir = tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_polycut"))
        .args([
            "campaign",
            "--family",
            "plane-triangulations",
            "--count",
            "2",
            "--seed",
            "3",
            "--n-min",
            "8",
            "--n-max",
            "10",
            "--flip-max",
            "10",
        ])
        .env("POLYCUT_WORKERS", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_polycut"))
        .args(["campaign", "--family", "plane-triangulations", "--count", "1"])
        .env("POLYCUT_WORKERS", "not-a-number")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn triangulation_kind_rejects_other_dimensions() {
    let dir = tempdir().unwrap();
    let out = polycut(
        &["construct", "--kind", "triangulation", "--d", "4", "--n", "10", "--out", "t.fl"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));

    let out = polycut(
        &["construct", "--kind", "triangulation", "--n", "10", "--seed", "5", "--out", "t.fl"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let out = polycut(&["analyze", "t.fl"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["d"], 3);
    assert_eq!(report["all_min_cuts_trivial"], true);
    // a validated 2-sphere counts as polytopal provenance
    assert_eq!(report["provenance"]["polytopal"], true);
}
