use std::process::{Command, Output};

use serde_json::Value;

fn orbits(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbits"))
        .args(args)
        .env_remove("ORBITS_TABLE_PATH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = orbits(&all);
    let v: Value = serde_json::from_slice(&o.stdout).expect("one JSON document");
    assert_eq!(v["schema_version"], 1);
    (v, code(&o))
}

#[test]
fn classify_reports_flags() {
    let o = orbits(&["classify", "--flavor", "sp", "--partition", "4,1,1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("symplectic: true"), "{out}");
    assert!(out.contains("symplectic-special: false"));
    assert!(out.contains("metaplectic-special: true"));

    let (v, c) = json(&["classify", "--flavor", "sp", "-p", "2,2"]);
    assert_eq!(c, 0);
    assert_eq!(v["special"]["symplectic-special"], true);

    let (v, c) = json(&["classify", "--flavor", "o", "-p", "2,1"]);
    assert_eq!(c, 0);
    assert_eq!(v["classical"], false);
}

#[test]
fn expand_examples() {
    let first_line = |args: &[&str]| stdout(&orbits(args)).trim().to_string();
    assert_eq!(first_line(&["expand", "--flavor", "metaplectic", "-p", "3,3,3,3"]), "4,3,3,2");
    assert_eq!(first_line(&["expand", "--flavor", "symplectic", "-p", "4,2"]), "4,2");
    assert_eq!(first_line(&["expand", "--flavor", "metaplectic", "-p", "3,3", "--recipe"]), "4,2");

    let (v, _) = json(&["expand", "--flavor", "orthogonal", "-p", "2,2,1"]);
    assert_eq!(v["expansion"], serde_json::json!([3, 1, 1]));
}

#[test]
fn raise_chain_examples() {
    let (v, c) = json(&["raise-chain", "--group", "metaplectic-sp", "-p", "3,3,3,3"]);
    assert_eq!(c, 0);
    let steps = v["chain"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0]["partition"], serde_json::json!([4, 3, 3, 2]));

    let (v, _) = json(&["raise-chain", "--group", "sp", "-p", "4,2"]);
    assert!(v["chain"]["steps"].as_array().unwrap().is_empty());

    let (v, c) = json(&["raise-chain", "--group", "o", "-p", "2,2,1", "--verify"]);
    assert_eq!(c, 0);
    assert_eq!(v["verified"], true);
}

#[test]
fn enumerate_examples() {
    assert_eq!(stdout(&orbits(&["enumerate", "--flavor", "sp", "--n", "2"])), "2\n1,1\n");
    assert_eq!(stdout(&orbits(&["enumerate", "--flavor", "sp", "--n", "2", "--count"])), "2\n");
    let (v, _) = json(&["enumerate", "--flavor", "sp", "--n", "0"]);
    assert_eq!(v["partitions"], serde_json::json!([[]]));
    let (v, _) = json(&["enumerate", "--flavor", "sp", "--n", "8", "--special", "metaplectic"]);
    assert!(v["count"].as_u64().unwrap() > 0);
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&orbits(&["enumerate", "--flavor", "o", "--n", "7", "--special-only"]));
    let (v, _) = json(&["enumerate", "--flavor", "o", "--n", "7", "--special-only"]);
    let from_json: Vec<String> = v["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            p.as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    assert_eq!(text.lines().collect::<Vec<_>>(), from_json);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify", "--flavor", "sp", "-p", "4,x"][..],
        &["enumerate", "--flavor", "sp", "--n", "3"],
        &["expand", "--flavor", "symplectic", "-p", "3"],
        &["expand", "--flavor", "orthogonal", "-p", "3", "--recipe"],
        &["raise-chain", "--group", "sp", "-p", "3,1"],
        &["classify", "--flavor", "bogus", "-p", "1"],
        &["no-such-command"],
        &[],
    ] {
        assert_eq!(code(&orbits(args)), 2, "{args:?}");
    }
    let (v, c) = json(&["enumerate", "--flavor", "sp", "--n", "5"]);
    assert_eq!(c, 2);
    assert!(v["error"].is_string());
}

#[test]
fn verify_tables_per_group() {
    for (g, n) in [("G2", 2), ("F4", 5), ("E6", 4), ("E7", 10), ("E8", 24)] {
        let o = orbits(&["verify", "--scope", "tables", "--group", g]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).contains(&format!("{g}: {n}/{n} rows pass")), "{}", stdout(&o));
    }
}

#[test]
fn verify_properties_small() {
    let (v, c) = json(&["verify", "--scope", "properties", "--max-n", "12"]);
    assert_eq!(c, 0);
    assert_eq!(v["passed"], true);
    assert!(v["property_suites"].as_array().unwrap().len() >= 9);
}

#[test]
fn verify_all_passes() {
    let o = orbits(&["verify"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all checks pass\n"));
}

#[test]
fn table_override_failure_exits_1() {
    let dir = std::env::temp_dir().join(format!("orbits-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (mut v, _) = json(&["table"]);
    let row = v["records"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|r| r["group"] == "F4" && r["label"] == "B2")
        .unwrap();
    row["expected"] = serde_json::json!({"kind": "raised", "m": 4});
    let path = dir.join("table.json");
    std::fs::write(&path, v.to_string()).unwrap();

    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_orbits"))
            .args(args)
            .env("ORBITS_TABLE_PATH", &path)
            .output()
            .unwrap()
    };
    let o = run(&["verify", "--scope", "tables", "--group", "F4"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL F4 B2"), "{out}");
    assert!(out.contains("first failure: F4 B2"), "{out}");
    assert_eq!(code(&run(&["verify", "--scope", "tables", "--group", "E8"])), 0);

    std::fs::write(&path, "{\"schema_version\": 2, \"records\": []}").unwrap();
    assert_eq!(code(&run(&["table"])), 2);
    std::fs::remove_dir_all(&dir).ok();
}
