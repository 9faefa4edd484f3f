//! End-to-end checks of the `lcg` binary: exit codes, report determinism,
//! and file exports.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

fn lcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_pass_exits_zero() {
    let out = lcg(&["verify", "--algebra", "N4_8", "--alpha", "1", "--q", "2", "--shapes"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn usage_errors_exit_two() {
    // unknown family
    let out = lcg(&["verify", "--algebra", "N9_9", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // missing required parameter
    let out = lcg(&["verify", "--algebra", "N3_2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // inadmissible parameters
    let out = lcg(&["verify", "--algebra", "N4_10", "--alpha", "1", "--beta", "0", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // unsatisfiable family reports rather than crashing
    let out = lcg(&["verify", "--algebra", "N4_9", "--alpha", "1", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsatisfiable"));
    // sweep bound
    let out = lcg(&["sweep", "--max-q", "16"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_shows_admissibility() {
    let out = lcg(&["list", "--q", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("N4_8"));
    assert!(text.contains("none admissible"));
}

fn strip_timings(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            map.remove("timings");
            for (_, val) in map.iter_mut() {
                strip_timings(val);
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

#[test]
fn sweep_reports_are_deterministic_modulo_timings() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = lcg(&[
            "sweep",
            "--max-q",
            "3",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let mut va: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let mut vb: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(va["schema"], 1);
    assert_eq!(va["all_pass"], true);
    strip_timings(&mut va);
    strip_timings(&mut vb);
    assert_eq!(
        serde_json::to_string(&va).unwrap(),
        serde_json::to_string(&vb).unwrap()
    );
}

fn read_csv(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.to_string())
        .collect()
}

#[test]
fn graph_export_is_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("edges.csv");
    let labels = dir.path().join("labels.csv");
    let out = lcg(&[
        "graph",
        "--algebra",
        "N2",
        "--q",
        "3",
        "--edges",
        edges.to_str().unwrap(),
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let edge_lines = read_csv(&edges);
    assert_eq!(edge_lines[0], "u_index,v_index");
    // N2 over GF(3): 8 vertices, q+1 = 4 components, each a K_(q-1) = K_2,
    // so exactly 4 edges, each with u < v
    assert_eq!(edge_lines.len() - 1, 4);
    for line in &edge_lines[1..] {
        let (u, v) = line.split_once(',').unwrap();
        assert!(u.parse::<usize>().unwrap() < v.parse::<usize>().unwrap());
    }

    let label_lines = read_csv(&labels);
    assert_eq!(label_lines[0], "vertex_index,component_id,coordinates");
    assert_eq!(label_lines.len() - 1, 8);
    let comps: BTreeSet<&str> = label_lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(comps.len(), 4);
    // coordinates are colon-separated element indices
    assert!(label_lines[1].ends_with("1:0"));
}

#[test]
fn custom_algebra_from_json() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("algebra.json");
    std::fs::write(
        &spec,
        r#"{"field": "2^2", "dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": [1, 0]}]}"#,
    )
    .unwrap();
    let edges = dir.path().join("edges.csv");
    let labels = dir.path().join("labels.csv");
    let out = lcg(&[
        "graph",
        "--custom",
        spec.to_str().unwrap(),
        "--edges",
        edges.to_str().unwrap(),
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    // this is N2 over GF(4): 15 vertices, q+1 = 5 components
    let label_lines = read_csv(&labels);
    assert_eq!(label_lines.len() - 1, 15);
    let comps: BTreeSet<&str> = label_lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(comps.len(), 5);

    // Jacobi-violating input is rejected with a config error
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"field": "3", "dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": [0, 0, 1]},
            {"i": 1, "j": 3, "coeffs": [1, 0, 0]},
            {"i": 2, "j": 3, "coeffs": [0, 1, 0]}
        ]}"#,
    )
    .unwrap();
    let out = lcg(&[
        "graph",
        "--custom",
        bad.to_str().unwrap(),
        "--edges",
        edges.to_str().unwrap(),
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi"));
}

#[test]
fn verify_json_report_structure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = lcg(&[
        "verify",
        "--algebra",
        "N4_11",
        "--q",
        "3",
        "--shapes",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["field"], "3");
    assert_eq!(v["algebra"], "N4_11");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["computed"]["cc_count"], 28);
    assert_eq!(v["predicted"]["cc_count"], 28);
    // the windmill is present among the predicted shapes
    let shapes = v["predicted"]["components"].as_array().unwrap();
    assert!(shapes
        .iter()
        .any(|c| c["shape"]["kind"] == "windmill" && c["shape"]["blade_count"] == 4));
}
