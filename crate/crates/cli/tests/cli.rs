use std::process::{Command, Output};

use serde_json::Value;

fn cartan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn cartan_of_dihedral_presets() {
    let out = cartan(&["cartan", "dihedral:3@GF(3)"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["results"]["cartan_dim"], 4);
    assert_eq!(doc["command"], "cartan");
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "normalizer_equals_self"));

    let out = cartan(&["cartan", "dihedral:6@GF(3)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["results"]["cartan_dim"], 8);
}

#[test]
fn report_shape() {
    let doc = json_of(&cartan(&["report", "--seed", "7", "dual-numbers:GF(3)"]));
    for key in ["input_digest", "command", "results", "checks", "seed", "version"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(doc["results"]["lie_nilpotency"]["lie_nilpotent"], true);
}

#[test]
fn reports_are_reproducible() {
    let a = json_of(&cartan(&["report", "dihedral:3@GF(3)"]));
    let b = json_of(&cartan(&["report", "dihedral:3@GF(3)"]));
    assert_eq!(a["results"].to_string(), b["results"].to_string());
}

#[test]
fn verify_rejects_scalars_in_m2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scalars.json");
    std::fs::write(&path, r#"{"basis": [[1, 0, 0, 1]]}"#).unwrap();
    let out = cartan(&["verify", "matrix:2@GF(3)", "--subspace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    let doc = json_of(&out);
    assert_eq!(doc["results"]["is_cartan"], false);

    std::fs::write(&path, r#"{"basis": [[1, 0, 0, 0], [0, 0, 0, 1]]}"#).unwrap();
    let out = cartan(&["verify", "matrix:2@GF(3)", "--subspace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(cartan(&["cartan", "sphere:2@Q"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(cartan(&["radical", bad.to_str().unwrap()]).status.code(), Some(2));
    // (e1 e1) e1 = e2 e1 = e1 but e1 (e1 e1) = e1 e2 = 0
    let nonassoc = dir.path().join("nonassoc.json");
    std::fs::write(
        &nonassoc,
        r#"{"field":{"type":"GF","p":2},"dim":3,"table":[
            [[0,0,0],[0,0,0],[0,0,0]],
            [[0,0,0],[0,0,1],[0,0,0]],
            [[0,0,0],[0,1,0],[0,0,0]]]}"#,
    )
    .unwrap();
    assert_eq!(cartan(&["radical", nonassoc.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(cartan(&["index", "dihedral:3@GF(3)"]).status.code(), Some(4));
    assert_eq!(cartan(&["units", "quaternion:Q"]).status.code(), Some(4));
    assert_eq!(cartan(&["units", "truncated:17@GF(2)"]).status.code(), Some(6));
}

#[test]
fn group_inputs_and_field_flag() {
    let a = json_of(&cartan(&["cartan", "--group", "dihedral:3", "--field", "GF:3"]));
    assert_eq!(a["results"]["cartan_dim"], 4);
    let b = json_of(&cartan(&["cartan", "matrix:2", "--field", "GF:3"]));
    assert_eq!(b["results"]["cartan_dim"], 2);
    assert_eq!(cartan(&["cartan", "--group", "dihedral:3"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c2.json");
    std::fs::write(&g, r#"{"order":2,"mul":[[0,1],[1,0]],"identity":0}"#).unwrap();
    let c = json_of(&cartan(&[
        "soluble",
        "--group-file",
        g.to_str().unwrap(),
        "--field",
        "Q",
    ]));
    assert_eq!(c["results"]["soluble"], true);
}

#[test]
fn algebra_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quat.json");
    let q = cartan_core::presets::quaternions_q();
    std::fs::write(&path, cartan_core::json::algebra_to_json(&q).to_string()).unwrap();
    let doc = json_of(&cartan(&["index", path.to_str().unwrap()]));
    assert_eq!(doc["results"]["index"], 2);
    assert_eq!(
        json_of(&cartan(&["reduced", path.to_str().unwrap()]))["results"]["reduced"],
        "undetermined"
    );
}

#[test]
fn oracle_flag_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r.json");
    let out = cartan(&[
        "cartan",
        "--oracle",
        "upper:2@GF(3)",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "cartan_in_bruteforce_list" && c["passed"] == true));
    let big = json_of(&cartan(&["radical", "--oracle", "matrix:3@GF(2)"]));
    assert!(big["results"]["oracle_skipped"].is_string());
}

#[test]
fn units_and_pretty_output() {
    let doc = json_of(&cartan(&["units", "dual-numbers:GF(3)"]));
    assert_eq!(doc["results"]["order"], 6);
    assert_eq!(doc["results"]["nilpotent"], true);
    let doc = json_of(&cartan(&["units", "matrix:2@GF(3)"]));
    assert_eq!(doc["results"]["order"], 48);
    assert_eq!(doc["results"]["nilpotent"], false);
    let out = cartan(&["cartan", "--pretty", "matrix:2@GF(3)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cartan_dim: 2"));
    assert!(text.contains("verdict: all checks passed"));
}
