use std::process::{Command, Output};

use serde_json::Value;

fn qnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qnil"))
        .args(args)
        .output()
        .expect("runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = qnil(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn elements(v: &Value) -> Vec<String> {
    v["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn xuxu_qnil_set() {
    let v = json(&[
        "compute",
        "--ring",
        "builtin:xuxu-local16",
        "--sets",
        "qnil",
    ]);
    assert_eq!(v["schema"], "qnil.sets/v1");
    let set = &v["sets"][0];
    assert_eq!(set["cardinality"], 8);
    let mut got = elements(set);
    got.sort();
    let mut want = ["0", "2", "x", "y", "2+x", "2+y", "x+y", "2+x+y"]
        .map(String::from)
        .to_vec();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn descriptor_file_units_and_radical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zn4.json");
    std::fs::write(&path, r#"{"kind": "zn", "n": 4}"#).unwrap();
    let v = json(&[
        "compute",
        "--ring",
        path.to_str().unwrap(),
        "--sets",
        "units,jacobson",
    ]);
    assert_eq!(elements(&v["sets"][0]), ["1", "3"]);
    assert_eq!(elements(&v["sets"][1]), ["0", "2"]);
}

#[test]
fn k0_center_is_two_scalars() {
    let v = json(&["compute", "--ring", "builtin:k0-z2", "--sets", "center"]);
    assert_eq!(elements(&v["sets"][0]), ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]);
}

#[test]
fn commutant_needs_element() {
    let out = qnil(&["compute", "--ring", "m2-z2", "--sets", "comm"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&[
        "compute",
        "--ring",
        "m2-z2",
        "--sets",
        "comm",
        "--element",
        "a11=1,a12=0,a21=0,a22=0",
    ]);
    assert_eq!(v["sets"][0]["cardinality"], 4);
}

#[test]
fn l11_witness_renders_matrices() {
    let v = json(&[
        "check",
        "--ring",
        "builtin:l11-z4",
        "--props",
        "right-qnil-duo",
        "--witness",
    ]);
    assert_eq!(v["schema"], "qnil.verdicts/v1");
    let verdict = &v["verdicts"][0];
    assert_eq!(verdict["holds"], false);
    let shown = verdict["witness"]["elements"].as_array().unwrap();
    assert_eq!(shown.len(), 2);
    for e in shown {
        let value = e["value"].as_str().unwrap();
        assert_eq!(value.matches('[').count(), 4, "{value}");
    }
    assert!(verdict["witness"]["detail"]
        .as_str()
        .unwrap()
        .contains("b*a = "));
}

#[test]
fn regular_z6_and_abelian_m2z2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zn6.json");
    std::fs::write(&path, r#"{"kind": "zn", "n": 6}"#).unwrap();
    let v = json(&[
        "check",
        "--ring",
        path.to_str().unwrap(),
        "--props",
        "regular,strongly-regular",
    ]);
    assert_eq!(v["verdicts"][0]["holds"], true);
    assert_eq!(v["verdicts"][1]["holds"], true);
    let v = json(&[
        "check",
        "--ring",
        "m2-z2",
        "--props",
        "abelian",
        "--witness",
    ]);
    let w = &v["verdicts"][0]["witness"]["elements"];
    assert_eq!(w[0]["role"], "e");
    assert_eq!(w[0]["value"], "[[1,0],[0,0]]");
}

#[test]
fn text_and_json_agree() {
    let v = json(&["check", "--ring", "xuxu-local16", "--props", "all"]);
    let text =
        String::from_utf8(qnil(&["check", "--ring", "xuxu-local16", "--props", "all"]).stdout)
            .unwrap();
    for verdict in v["verdicts"].as_array().unwrap() {
        let name = verdict["property"].as_str().unwrap();
        let line = text
            .lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .unwrap();
        assert_eq!(
            line.split_whitespace().nth(1).unwrap(),
            verdict["holds"].to_string()
        );
    }
    let v = json(&["compute", "--ring", "m2-z2", "--sets", "units,qnil"]);
    let text =
        String::from_utf8(qnil(&["compute", "--ring", "m2-z2", "--sets", "units,qnil"]).stdout)
            .unwrap();
    for set in v["sets"].as_array().unwrap() {
        let line = text
            .lines()
            .find(|l| l.starts_with(set["name"].as_str().unwrap()))
            .unwrap();
        assert_eq!(
            line.split_whitespace().nth(1).unwrap(),
            set["cardinality"].to_string()
        );
    }
}

#[test]
fn unknown_names_are_rejected_before_building() {
    let out = qnil(&[
        "check",
        "--ring",
        "l11-z4",
        "--props",
        "right-qnil-duo,nonsense",
        "--order-cap",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown property `nonsense`"));
    let out = qnil(&["compute", "--ring", "nowhere", "--sets", "qnil"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_cap_refuses() {
    let out = qnil(&[
        "compute",
        "--ring",
        "l11-z4",
        "--sets",
        "qnil",
        "--order-cap",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the order cap 100"));
    let out = Command::new(env!("CARGO_BIN_EXE_qnil"))
        .args(["compute", "--ring", "l11-z4", "--sets", "qnil"])
        .env("QNIL_ORDER_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_descriptor_reports_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"kind": "lst", "base": {"kind": "zn", "n": 4}, "s": 7, "t": 1}"#,
    )
    .unwrap();
    let out = qnil(&[
        "compute",
        "--ring",
        path.to_str().unwrap(),
        "--sets",
        "qnil",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_with_bad_catalog_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    let catalog = r#"{"schema": "qnil.catalog/v1", "rings": [
        {"name": "z4", "ring": {"kind": "zn", "n": 4}},
        {"name": "bad", "ring": {"kind": "ks", "base": {"kind": "zn", "n": 4}, "s": 9}}
    ]}"#;
    std::fs::write(&path, catalog).unwrap();
    let out_path = dir.path().join("report.json");
    let out = qnil(&[
        "verify",
        "--catalog",
        path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("build failure  bad"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["schema"], "qnil.suite/v1");
    assert_eq!(report["complete"], false);
    assert!(report["summary"]["skipped"].as_u64().unwrap() > 0);
}

#[test]
fn verify_report_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = qnil(&["verify", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["schema"], "qnil.suite/v1");
    assert_eq!(report["catalog"]["sha256"].as_str().unwrap().len(), 64);
    let cases = report["cases"].as_array().unwrap();
    assert!(cases.len() >= 60);
    for c in cases {
        for key in ["case_id", "paper_ref", "kind", "outcome", "millis"] {
            assert!(c.get(key).is_some(), "{key} missing in {}", c["case_id"]);
        }
    }
}

#[test]
fn explain_lists_coordinates() {
    let v = json(&["explain", "--ring", "xuxu-local16"]);
    assert_eq!(v["schema"], "qnil.explain/v1");
    let names: Vec<&str> = v["coordinates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["a", "b", "c"]);
    assert!(v["formula"].as_str().unwrap().contains("x^2 - 2"));
}
