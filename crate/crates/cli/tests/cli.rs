use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn build_writes_twelve_facets() {
    let dir = std::env::temp_dir().join(format!("gencluster-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cx.json");
    let out = run(&["build", "--phi", "A2", "--m", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["result"]["facets"].as_array().unwrap().len(), 12);
    assert_eq!(report["config"]["phi"], "A2");
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_passes_on_a2() {
    let out = run(&["verify-all", "--phi", "A2", "--m", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report = json(&out);
    let ids: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    for id in ["facet-count", "shelling-full", "kcm-full", "moebius", "homotopy-k2", "polygon-model"] {
        assert!(ids.contains(&id), "missing {id}");
    }
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn kcm_beyond_the_bound_names_a_witness() {
    let out = run(&["kcm", "--phi", "A2", "--m", "2", "--k", "4", "--exhaustive", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let witness = report["result"]["failures"][0]["removed"].as_array().unwrap();
    assert_eq!(witness.len(), 3);
    assert!(witness.iter().all(|v| v.is_string()));
    let ok = run(&["kcm", "--phi", "A2", "--m", "2", "--k", "3", "--exhaustive"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["kcm", "--phi", "B3", "--m", "1", "--k", "3", "--samples", "20", "--seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["shelling", "--phi", "G2", "--m", "2", "--positive", "--format", "json"]);
    let d = run(&["shelling", "--phi", "G2", "--m", "2", "--positive", "--format", "json"]);
    assert_eq!(c.stdout, d.stdout);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["build", "--phi", "Q3"][..],
        &["build", "--phi", "A7"],
        &["build", "--phi", "A2", "--m", "5"],
        &["build", "--phi", "B6", "--m", "4", "--cap-vertices", "100"],
        &["ncp", "--phi", "A2", "--k", "3"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn other_commands() {
    let f = run(&["fvector", "--phi", "A3", "--m", "2", "--format", "csv"]);
    assert_eq!(f.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&f.stdout).contains("1,"));

    let h = json(&run(&["homology", "--phi", "A3", "--m", "2", "--positive", "--format", "json"]));
    assert_eq!(h["checks"][0]["id"], "wedge-positive");
    assert_eq!(h["checks"][0]["status"], "pass");

    let i = json(&run(&["incidence", "--phi", "B2", "--m", "3", "--format", "json"]));
    assert_eq!(i["result"]["4"], 14);
    assert_eq!(i["checks"][0]["status"], "pass");

    let n = run(&["ncp", "--phi", "A2", "--m", "2", "--format", "json"]);
    assert_eq!(n.status.code(), Some(0));
    assert_eq!(json(&n)["result"]["moebius"], 2);

    let t = run(&["build", "--phi", "A", "--rank", "2"]);
    let text = String::from_utf8_lossy(&t.stdout);
    assert!(text.contains("facets (5)"), "{text}");
}
