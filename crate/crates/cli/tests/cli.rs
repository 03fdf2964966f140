use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const PP3: &str = r#"{"points":["a","b","p"],"opens":[[],["a","b"],["a","b","p"]]}"#;
const SIERP: &str = r#"{"points":["a","b"],"opens":[[],["a"],["a","b"]]}"#;
const INDISC2: &str = r#"{"points":["a","b"],"opens":[[],["a","b"]]}"#;

fn topolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn validate_accepts_and_rejects() {
    let good = file(PP3);
    let o = topolab(&["validate", good.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3 points"));

    let missing_full = file(r#"{"points":["a","b"],"opens":[[],["a"]]}"#);
    let o = topolab(&["validate", missing_full.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let garbage = file("{not json");
    let o = topolab(&["analyze", garbage.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn analyze_particular_point() {
    let f = file(PP3);
    let o = topolab(&["--json", "analyze", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["x1"], serde_json::json!(["p"]));
    assert_eq!(v["singletons"].as_array().unwrap().len(), 3);
    assert_eq!(v["report"]["sg_t_half"], true);
}

#[test]
fn analyze_set_flags() {
    let f = file(SIERP);
    let o = topolab(&["--json", "analyze", f.path().to_str().unwrap(), "--set", "b"]);
    let v = json(&o);
    assert_eq!(v["set"]["flags"]["nowhere_dense"], true);
    assert_eq!(v["set"]["flags"]["hsg_closed"], true);
    let o = topolab(&["analyze", f.path().to_str().unwrap(), "--set", "z"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    for (n, count, classes) in [(3, "29", "9"), (4, "355", "33")] {
        let o = topolab(&["enumerate", "--n", n.to_string().as_str(), "--count-only"]);
        assert_eq!(stdout(&o).trim(), count);
        let o = topolab(&["enumerate", "--n", n.to_string().as_str(), "--count-only", "--modulo-homeo"]);
        assert_eq!(stdout(&o).trim(), classes);
    }
    let o = topolab(&["enumerate", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = topolab(&["enumerate", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_runs_and_rejects_unknown_ids() {
    let o = topolab(&["verify", "--n", "3", "--ids", "T1,T12,S2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("T1   pass") && out.contains("S2   pass"));
    let o = topolab(&["verify", "--n", "3", "--ids", "T99"]);
    assert_eq!(o.status.code(), Some(2));
    let o = topolab(&["verify", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_is_stable_across_workers() {
    let run = |w: &str| {
        let mut v = json(&topolab(&["--json", "verify", "--n", "3", "--workers", w]));
        v["wall_time_ms"] = serde_json::Value::Null;
        v.to_string()
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn mine_exit_codes() {
    let o = topolab(&["mine", "--goal", "sg-union-failure", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("DOUBLEPT3"));
    let o = topolab(&["mine", "--goal", "sg-union-failure", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = topolab(&["mine", "--goal", "no-such-goal", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = topolab(&["mine", "--expr", "sg_closed(A", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mine_json_certificate() {
    let o = topolab(&["--json", "mine", "--goal", "sg-union-failure", "--n", "3"]);
    let v = json(&o);
    assert_eq!(v["revalidated"], true);
    assert_eq!(v["result"]["outcome"], "found");
    assert_eq!(v["result"]["assignment"]["A"], serde_json::json!([0]));
    assert_eq!(v["result"]["assignment"]["B"], serde_json::json!([1]));
}

#[test]
fn mine_custom_and_list() {
    let o = topolab(&["mine", "--expr", "t0 & !t1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = topolab(&["mine", "--expr", "baire_12 & !utterly_12", "--bitop", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = topolab(&["mine", "--list"]);
    assert!(stdout(&o).contains("nested-utterly"));
}

#[test]
fn symbolic_reports() {
    let v = json(&topolab(&["--json", "symbolic", "cofinite", "--report"]));
    assert_eq!(v["sg_compact"], true);
    assert_eq!(v["scattered"], false);
    let v = json(&topolab(&["--json", "symbolic", "opc", "--report"]));
    assert_eq!(v["c2"], true);
    assert_eq!(v["c3"], false);
    assert_eq!(v["cellular_infinite"], true);
    let o = topolab(&["symbolic", "reals", "--report"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bitop_report() {
    let f = file(INDISC2);
    let p = f.path().to_str().unwrap();
    let v = json(&topolab(&["--json", "bitop", p, p, "--report"]));
    assert_eq!(v["baire_12"], true);
    assert_eq!(v["utterly_12"], false);
    let g = file(PP3);
    let o = topolab(&["bitop", p, g.path().to_str().unwrap(), "--report"]);
    assert_eq!(o.status.code(), Some(2));
}
