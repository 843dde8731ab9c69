use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus")).join(name)
}

fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pgroup-cli-{}-{test}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn pgroup(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pgroup")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, stdout, _) = pgroup(&all);
    (code, serde_json::from_str(&stdout).unwrap())
}

#[test]
fn quotient_writes_a_loadable_presentation() {
    let dir = scratch("quotient");
    let out = dir.join("c.pcp.json");
    let (code, report) = json(&[
        "quotient",
        corpus("exampleC.grp").to_str().unwrap(),
        "--class",
        "6",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["schema"], "pgroup-report/1");
    assert_eq!(report["data"]["order"], 15625);
    assert_eq!(report["data"]["class"], 5);
    assert_eq!(report["data"]["stabilized"], true);
    let g = pgroup_core::PcPresentation::from_json_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 6);

    let (code, report) = json(&["series", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["lower_central_logs"], serde_json::json!([6, 4, 3, 2, 1, 0]));
}

#[test]
fn series_of_a_cyclic_group() {
    let dir = scratch("series");
    let file = dir.join("trivial.grp");
    std::fs::write(&file, "name trivial;\nprime 5;\ngenerators a;\nrelators a^5;\n").unwrap();
    let (code, report) = json(&["series", file.to_str().unwrap(), "--class", "1"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["lower_central_orders"], serde_json::json!([5, 1]));
    let (code, stdout, _) = pgroup(&["series", file.to_str().unwrap(), "--class", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("series"));
    assert!(stdout.contains("lower_central_orders: [5,1]"));
}

#[test]
fn check_all_on_example_a() {
    let dir = scratch("check");
    let out = dir.join("a.pcp.json");
    let (code, _) = json(&["quotient", corpus("exampleA.grp").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, report) = json(&["check", "all", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{report:#}");
    let titles: Vec<&str> = report["sections"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["title"].as_str().unwrap())
        .collect();
    assert_eq!(titles, ["theorem1", "hall", "transfer", "classify", "power-central"]);
    assert_eq!(report["data"]["hypotheses"]["satisfied"], true);

    // H = <u1, u2> misses the precondition
    let h = "0,0,1,0,0,0,0,0,0;0,0,0,1,0,0,0,0,0";
    let (code, report) = json(&["check", "transfer", out.to_str().unwrap(), "--h", h]);
    assert_eq!(code, 0);
    assert_eq!(report["sections"][0]["checklist"]["checks"][0]["status"], "not-applicable");
    let (code, _) = json(&["check", "transfer", out.to_str().unwrap(), "--h", "1,2"]);
    assert_eq!(code, 2);
}

#[test]
fn p_two_is_refused() {
    let dir = scratch("w");
    let file = dir.join("w.pcp.json");
    std::fs::write(&file, pgroup_cli::corpus::w128().to_json_string()).unwrap();
    let (code, report) = json(&["check", "theorem1", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let check = &report["sections"][0]["checklist"]["checks"][0];
    assert_eq!(check["status"], "not-applicable");
    assert!(check["witness"]["reason"].as_str().unwrap().contains("p >= 3"));
    let (code, report) = json(&["check", "hall", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["sections"][0]["checklist"]["checks"][0]["status"], "pass");
    let (code, _) = json(&["decompose", file.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn decompose_example_b() {
    let (code, report) = json(&["decompose", corpus("exampleB.grp").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["h_generators"].as_array().unwrap().len(), 3);
    assert_eq!(report["ok"], true);
}

#[test]
fn syntax_errors_are_located() {
    let dir = scratch("syntax");
    let file = dir.join("bad.grp");
    std::fs::write(&file, "prime 5;\ngenerators a;\nrelators a^0;\n").unwrap();
    let (code, _, stderr) = pgroup(&["series", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bad.grp:3:12: zero exponent"), "{stderr}");
    let (code, report) = json(&["quotient", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(report["ok"], false);
    assert!(report["error"].as_str().unwrap().contains("3:12"));
}

#[test]
fn corpus_verify_selected_criteria() {
    let dir = corpus("");
    let (code, report) = json(&["corpus-verify", dir.to_str().unwrap(), "--criterion", "1", "--criterion", "6"]);
    assert_eq!(code, 0, "{report:#}");
    assert_eq!(report["sections"].as_array().unwrap().len(), 2);
    let (code, _) = json(&["corpus-verify", "/nonexistent/corpus"]);
    assert_eq!(code, 2);
    let (code, _) = json(&["corpus-verify", dir.to_str().unwrap(), "--criterion", "9"]);
    assert_eq!(code, 2);
}
