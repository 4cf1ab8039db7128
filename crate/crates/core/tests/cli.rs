//! End-to-end tests of the `a3a4` binary: golden-file checks of the JSON
//! output mode and exit-code conventions.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a3a4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn catalog_list_json_matches_golden() {
    let out = run(&["--format", "json", "catalog", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden("catalog_list.json"));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["schema"], "catalog/1");
    assert_eq!(doc["sporadic"].as_array().unwrap().len(), 26);
}

#[test]
fn catalog_show_json_matches_golden() {
    let out = run(&["--format", "json", "catalog", "show", "8,2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden("catalog_show_8_2.json"));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["schema"], "protoset/1");
    assert_eq!(doc["units"], "pi");
}

#[test]
fn solve_prism_json_matches_golden() {
    let out = run(&[
        "--format",
        "json",
        "--units",
        "radians",
        "solve",
        "prism",
        "--alpha",
        "acos(1/8)",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("solve_prism_endpoint.json")
    );
}

#[test]
fn export_json_is_schema_versioned_and_verifiable() {
    let out = run(&["export", "icosahedron", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "embedding/1");
    assert_eq!(doc["tiling"]["schema"], "tiling/1");

    // the exported document round-trips through `verify`
    let dir = std::env::temp_dir().join("a3a4-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ico.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success(), "verify failed on exported document");
}

#[test]
fn export_obj_has_vertex_and_face_records() {
    let out = run(&["export", "prism", "--format", "obj"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let v = text.lines().filter(|l| l.starts_with("v ")).count();
    let f = text.lines().filter(|l| l.starts_with("f ")).count();
    assert_eq!(v, 6, "prism has 6 vertices");
    assert_eq!(f, 5, "prism has 5 faces");
}

#[test]
fn exit_codes_follow_the_convention() {
    // usage / unknown id -> 2
    let out = run(&["catalog", "show", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // validation failure (tiling does not close under the wrong protoset) -> 1
    let out = run(&["export", "icosahedron", "--protoset", "8,2", "--format", "obj"]);
    assert_eq!(out.status.code(), Some(1));
    // success -> 0
    let out = run(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
}
