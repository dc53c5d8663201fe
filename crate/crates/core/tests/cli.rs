//! The command-line contract: outputs and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segre-pg72"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_named_polynomials() {
    for (poly, point, want) in [("Q2", "18", "1"), ("Q4", "1246", "1"), ("P1", "1", "1")] {
        let out = run(&["eval", poly, point]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), want, "{poly}({point})");
    }
    assert_eq!(run(&["eval", "Q2", "1"]).status.code(), Some(0));
    assert_eq!(stdout(&run(&["eval", "18 + 27", "18"])).trim(), "1");
    assert_eq!(stdout(&run(&["eval", "18 + 27", "1278"])).trim(), "0");
    assert_eq!(run(&["eval", "Nope", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "Q2", "9"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "spread"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("85 disjoint lines cover 255 points"));
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical_and_match_the_schema() {
    let a = stdout(&run(&["verify", "table1", "--format", "json"]));
    let b = stdout(&run(&["verify", "table1", "--format", "json"]));
    assert_eq!(a, b);
    let report: serde_json::Value = serde_json::from_str(&a).unwrap();
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    conforms(&report, &schema);
    let s = &report["summary"];
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(s["total"], checks.len());
    assert_eq!(
        s["passed"],
        checks.iter().filter(|c| c["pass"] == true).count()
    );
    for c in checks {
        assert_eq!(c["pass"], c["expected"] == c["actual"]);
    }
}

/// Structural check covering the schema keywords the report schema uses.
fn conforms(v: &serde_json::Value, schema: &serde_json::Value) {
    use serde_json::Value;
    if let Some(options) = schema.get("enum") {
        assert!(
            options.as_array().unwrap().contains(v),
            "{v} not in {options}"
        );
    }
    match schema.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = v.as_object().expect("object");
            let props = schema["properties"].as_object().unwrap();
            for key in schema["required"].as_array().unwrap() {
                assert!(obj.contains_key(key.as_str().unwrap()), "missing {key}");
            }
            for (k, x) in obj {
                let sub = props.get(k).unwrap_or_else(|| panic!("unexpected key {k}"));
                conforms(x, sub);
            }
        }
        Some("array") => {
            for x in v.as_array().expect("array") {
                conforms(x, &schema["items"]);
            }
        }
        Some("string") => assert!(v.is_string()),
        Some("boolean") => assert!(v.is_boolean()),
        Some("integer") => assert!(v.as_u64().is_some()),
        _ => {}
    }
}

#[test]
fn exports() {
    let csv = stdout(&run(&["export", "orbits", "--format", "csv"]));
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "point,GS_orbit,GB_orbit,weight");
    assert_eq!(rows.len(), 256);

    let spread: Vec<[String; 3]> =
        serde_json::from_str(&stdout(&run(&["export", "spread", "--format", "json"]))).unwrap();
    assert_eq!(spread.len(), 85);

    let polys: Vec<serde_json::Value> =
        serde_json::from_str(&stdout(&run(&["export", "polys"]))).unwrap();
    assert_eq!(polys.len(), 20);
    assert!(polys
        .iter()
        .all(|p| p["degree"].is_u64() && p["terms"].is_u64()));

    let model: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["export", "model"]))).unwrap();
    assert_eq!(model["points"].as_array().unwrap().len(), 27);
    assert_eq!(model["tangents"].as_array().unwrap().len(), 27);

    let out = run(&["export", "spread", "--out", "/nonexistent-dir/spread.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["export", "everything"]).status.code(), Some(2));
}

#[test]
fn export_to_file_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("segre-pg72-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("polys.json");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["export", "polys", "--out", p]).status.code(), Some(0));
    let first = std::fs::read(&path).unwrap();
    assert_eq!(run(&["export", "polys", "--out", p]).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn orbits_and_groups() {
    let out = run(&["orbits", "--group", "GS", "--format", "json"]);
    let classes: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let mut sizes: Vec<u64> = classes
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [12, 27, 54, 54, 108]);
    for c in &classes {
        assert!(c["label"].is_string() && c["representative"].is_string());
        assert_eq!(c["weight_histogram"].as_array().unwrap().len(), 9);
    }
    assert!(stdout(&run(&["orbits", "--group", "GB"])).contains("21 orbits"));
    assert_eq!(run(&["orbits", "--group", "GX"]).status.code(), Some(2));

    assert_eq!(
        stdout(&run(&["group", "order", "--gens", "M,N,K"])).trim(),
        "348364800"
    );
    assert_eq!(
        stdout(&run(&["group", "order", "--gens", "M',N", "--cap", "10"])).trim(),
        "648"
    );
    assert_eq!(
        run(&["group", "order", "--gens", "Q"]).status.code(),
        Some(2)
    );
}
