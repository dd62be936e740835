use std::process::{Command, Output};

use nakayama_core::classifier::REPORT_KEYS;
use serde_json::Value;

fn nakayama(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn analyze_reports_exact_keys() {
    let out = nakayama(&["analyze", "--kupisch", "3,3,4", "--cyclic"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let mut keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    let mut expected = REPORT_KEYS.to_vec();
    expected.sort();
    assert_eq!(keys, expected);
    assert_eq!(report["minimal_ag_n"], 1);
    assert_eq!(report["gldim"], "infinity");

    let report = json(&nakayama(&["analyze", "--kupisch", "3,3,3,3,2,1"]));
    assert_eq!(report["n_auslander_n"], 2);
    assert_eq!(report["gldim"], 3);
    assert_eq!(report["cyclic"], false);
}

#[test]
fn analyze_rejects_inadmissible_series() {
    let out = nakayama(&["analyze", "--kupisch", "3,1,4", "--cyclic"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not admissible"));
    assert_eq!(nakayama(&["analyze", "--kupisch", "3,x"]).status.code(), Some(2));
}

#[test]
fn module_queries() {
    let q = |k: &str, cyc: bool, e: &str, query: &str| {
        let mut args = vec!["module", "--kupisch", k, "--expr", e, "--query", query];
        if cyc {
            args.push("--cyclic");
        }
        let out = nakayama(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        stdout(&out).trim().to_string()
    };
    assert_eq!(q("3,3,4", true, "M(1,2)", "pd"), "2");
    assert_eq!(q("3,3,4", true, "S(2)", "pd"), "\"infinity\"");
    assert_eq!(q("3,3,4", true, "M(1,2)", "gpd"), "2");
    assert_eq!(q("3,3,4", true, "M(1,2)", "envelope"), "\"M(3,3)\"");
    assert_eq!(q("3,3,4", true, "M(1,2)", "in-sub-lambda"), "false");
    assert_eq!(q("3,3,4", true, "M(3,2)", "ext:1:P(1)"), "1");
    assert_eq!(q("3,3,4", true, "M(1,2) + S(3)", "top"), "\"S(1) + S(3)\"");
    assert_eq!(q("3,3,3,3,2,1", false, "M(3,2)", "socle"), "\"S(4)\"");
    assert_eq!(q("3,3,3,3,2,1", false, "M(3,2)", "cover"), "\"M(3,3)\"");
    assert_eq!(q("3,3,3,3,2,1", false, "S(4)", "pd"), "1");
    assert_eq!(q("3,3,3,3,2,1", false, "S(1)", "ext:3:Lambda"), "1");
}

#[test]
fn module_errors_exit_2() {
    let bad = nakayama(&["module", "--kupisch", "3,3,4", "--cyclic", "--expr", "M(1,9)", "--query", "pd"]);
    assert_eq!(bad.status.code(), Some(2));
    let garbage = nakayama(&["module", "--kupisch", "3,3,4", "--cyclic", "--expr", "Q", "--query", "pd"]);
    assert_eq!(garbage.status.code(), Some(2));
    // [2,3,3] cyclic has infinite Gorenstein dimension, so Gpd is undefined
    let not_gor = nakayama(&["module", "--kupisch", "2,3,3", "--cyclic", "--expr", "S(1)", "--query", "gpd"]);
    assert_eq!(not_gor.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&not_gor.stderr).contains("Gorenstein"));
}

#[test]
fn verify_exit_codes() {
    let pass = nakayama(&["verify", "--kupisch", "3,3,4", "--cyclic", "--theorem", "gp-socle-sub", "--n", "1"]);
    assert_eq!(pass.status.code(), Some(0));
    assert_eq!(json(&pass)["status"], "pass");

    let fail = nakayama(&["verify", "--kupisch", "3,3,4", "--cyclic", "--theorem", "gp-socle-sub", "--n", "0"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(!json(&fail)["verdict"]["witnesses"].as_array().unwrap().is_empty());

    let pre = nakayama(&["verify", "--kupisch", "3,3,4", "--cyclic", "--theorem", "prinj", "--n", "0"]);
    assert_eq!(pre.status.code(), Some(2));

    let count = nakayama(&["verify", "--kupisch", "3,3,3,3,2,1", "--theorem", "thm31-count", "--n", "2"]);
    assert_eq!(count.status.code(), Some(0));
    assert_eq!(json(&count)["verdict"]["note"], "4 simples with Gpd <= 2; 4 projective-injectives");

    let pre = nakayama(&["verify", "--kupisch", "2,2,2", "--cyclic", "--theorem", "precluster:3"]);
    assert_eq!(pre.status.code(), Some(0));
    let unknown = nakayama(&["verify", "--kupisch", "2,2,2", "--cyclic", "--theorem", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn sweep_rediscovers_the_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cyclic.jsonl");
    let args = ["sweep", "--max-vertices", "3", "--max-length", "4", "--shapes", "cyclic", "--output"];
    let out = nakayama(&[&args[..], &[path.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> =
        std::fs::read_to_string(&path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let hit = lines.iter().find(|l| l["canonical"] == "[3,3,4]c").expect("[3,3,4]c present");
    assert_eq!(hit["report"]["minimal_ag_n"], 1);
    assert!(hit["minimal_ag_for"].as_array().unwrap().contains(&Value::from(1)));
    let summary = json(&out);
    assert_eq!(summary["summary"]["algebras"], lines.len());

    let path = dir.path().join("linear.jsonl");
    let args = ["sweep", "--max-vertices", "6", "--max-length", "3", "--shapes", "linear", "--output"];
    nakayama(&[&args[..], &[path.to_str().unwrap()]].concat());
    let text = std::fs::read_to_string(&path).unwrap();
    let hit: Value = serde_json::from_str(text.lines().find(|l| l.contains("\"[3,3,3,3,2,1]l\"")).unwrap()).unwrap();
    assert_eq!(hit["report"]["n_auslander_n"], 2);
    assert!(hit["n_auslander_for"].as_array().unwrap().contains(&Value::from(2)));

    let path = dir.path().join("field.jsonl");
    let args = ["sweep", "--max-vertices", "4", "--max-length", "1", "--output"];
    nakayama(&[&args[..], &[path.to_str().unwrap()]].concat());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("{\"canonical\":\"[1]l\""));
}

#[test]
fn sweep_rejects_zero_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.jsonl");
    let out = nakayama(&["sweep", "--max-vertices", "0", "--max-length", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_is_stable_and_guards_the_convention() {
    let first = nakayama(&["reproduce"]);
    assert_eq!(first.status.code(), Some(0));
    assert!(stdout(&first).contains("21/21 values match"));
    let second = nakayama(&["reproduce"]);
    assert_eq!(first.stdout, second.stdout);

    let flipped = nakayama(&["reproduce", "--flip-convention"]);
    assert_eq!(flipped.status.code(), Some(1));
    assert!(stdout(&flipped).contains("first mismatch"));
}

#[test]
fn oracle_commands() {
    let out = nakayama(&["oracle", "--kupisch", "3,3,4", "--cyclic", "--field-p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let cmp = json(&out);
    assert_eq!(cmp["field_p"], 3);
    assert_eq!(cmp["mismatches"], Value::Array(vec![]));

    let tau = nakayama(&["oracle", "--kupisch", "3,3,4", "--cyclic", "--expr", "M(1,2)", "--query", "tau"]);
    assert_eq!(stdout(&tau).trim(), "\"M(2,2)\"");
    let inj = nakayama(&["oracle", "--kupisch", "3,3,4", "--cyclic", "--expr", "M(3,3)", "--query", "injective"]);
    assert_eq!(stdout(&inj).trim(), "true");
    let bad_p = nakayama(&["oracle", "--kupisch", "3,3,4", "--cyclic", "--field-p", "4"]);
    assert_eq!(bad_p.status.code(), Some(2));
}
