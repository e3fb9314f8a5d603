use std::path::PathBuf;
use std::process::{Command, Output};

use demazure::rootsys::{RootSystemData, WeightVec};
use demazure::supports::{concrete_support, VarietyExpr};
use demazure::weyl::WeylElement;
use serde_json::Value;

fn demazure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn assert_golden(args: &[&str], file: &str) {
    let out = demazure(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}");
    assert_eq!(stdout(&out), golden(file), "{args:?} vs {file}");
}

#[test]
fn tables_match_golden_files() {
    assert_golden(&["table", "steinberg", "--p", "3"], "steinberg_p3.txt");
    assert_golden(&["table", "a1", "--p", "3"], "a1_p3.txt");
    assert_golden(&["table", "a2", "--p", "5"], "a2_p5.txt");
    assert_golden(&["table", "a2p2"], "a2p2.txt");
    assert_golden(&["--json", "table", "a2", "--p", "3"], "a2_p3.json");
    assert_golden(
        &["--json", "support", "--type", "A2", "--p", "3", "--w", "1 2", "--lambda", "2,0"],
        "support_s1s2_p3.json",
    );
}

#[test]
fn json_tables_round_trip_to_the_classifier() {
    for args in [
        vec!["--json", "table", "steinberg", "--p", "5"],
        vec!["--json", "table", "a1", "--p", "2"],
        vec!["--json", "table", "a2", "--p", "7"],
        vec!["--json", "table", "a2p2"],
    ] {
        let doc: Value = serde_json::from_str(&stdout(&demazure(&args))).unwrap();
        let p = doc["p"].as_u64().unwrap();
        for row in doc["rows"].as_array().unwrap() {
            let lambda: Vec<i64> = serde_json::from_value(row["lambda"].clone()).unwrap();
            let rs = RootSystemData::parse_type(if lambda.len() == 1 { "A1" } else { "A2" }).unwrap();
            let w = WeylElement::parse(rs.rank, row["w"].as_str().unwrap()).unwrap();
            let variety: VarietyExpr = row["variety"].as_str().unwrap().parse().unwrap();
            let direct = concrete_support(&rs, &w, &WeightVec::new(lambda), p).unwrap().variety;
            assert_eq!(variety, direct, "{args:?} row {row}");
        }
    }
}

#[test]
fn table_rows_match_published_values() {
    let rows = |args: &[&str]| -> Vec<(String, String)> {
        let doc: Value = serde_json::from_str(&stdout(&demazure(args))).unwrap();
        doc["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["w"].as_str().unwrap().to_string(), r["variety"].as_str().unwrap().to_string()))
            .collect()
    };
    let pairs = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect::<Vec<_>>();
    assert_eq!(
        rows(&["--json", "table", "steinberg", "--p", "7"]),
        pairs(&[("e", "u"), ("s1", "u_a"), ("s2", "u_b"), ("s1 s2", "u_a|u_b"), ("s2 s1", "u_a|u_b"), ("w0", "0")])
    );
    assert_eq!(
        rows(&["--json", "table", "a2p2"]),
        pairs(&[
            ("e", "u_a|u_b"),
            ("s1", "u_a"),
            ("s1", "u_a|u_b"),
            ("s2", "u_b"),
            ("s2", "u_a|u_b"),
            ("w0", "u_a|u_b"),
            ("w0", "0"),
        ])
    );
}

#[test]
fn support_examples() {
    let out = demazure(&["support", "--type", "A2", "--p", "3", "--w", "1 2", "--lambda", "2,0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("variety:     u_a\n"), "{text}");
    assert!(text.contains("λ=(np−1,0)"), "{text}");
    assert!(text.contains("saturation:  Omin"), "{text}");

    let text = stdout(&demazure(&["support", "--type", "A1", "--p", "5", "--w", "1", "--lambda", "4"]));
    assert!(text.contains("variety:     0\n"), "{text}");
    let text = stdout(&demazure(&["support", "--type", "A2", "--p", "3", "--w", "e", "--lambda", "0,0"]));
    assert!(text.contains("variety:     u\n"), "{text}");
}

#[test]
fn support_json_schema() {
    let out = demazure(&["--json", "support", "--type", "A2", "--p", "2", "--w", "w0", "--lambda", "1,1"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["query"]["w"], "1 2 1");
    assert_eq!(doc["outcome"]["kind"], "concrete");
    assert_eq!(doc["outcome"]["variety"], "0");
    assert_eq!(doc["saturation"], "0");
    let profile: Value = serde_json::from_str(
        r#"{"lambda":[1,1],"p":2,"phi_lambda_p":[[1,0],[0,1],[1,1]],"regular":false,"j_lambda":[],"conjugation":{"x":"e","I":[1,2]}}"#,
    )
    .unwrap();
    assert_eq!(doc["profile"], profile);
}

#[test]
fn higher_rank_queries() {
    // w_I in A3 has a settled symbolic answer.
    let out = demazure(&["--json", "support", "--type", "A3", "--p", "3", "--w", "1 3", "--lambda", "2,0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["outcome"]["kind"], "symbolic");

    let out = demazure(&["support", "--type", "A3", "--p", "3", "--w", "1 2 3", "--lambda", "1,1,1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("unresolved"));
}

#[test]
fn character_output() {
    let doc = |args: &[&str]| -> Value { serde_json::from_str(&stdout(&demazure(args))).unwrap() };
    let c = doc(&["character", "--type", "A2", "--w", "e", "--lambda", "3,1"]);
    assert_eq!(c["dimension"], 1);
    assert_eq!(c["terms"].as_array().unwrap().len(), 1);
    let c = doc(&["character", "--type", "A2", "--w", "1", "--lambda", "1,0"]);
    assert_eq!(c["terms"].as_array().unwrap().len(), 2);
    let c = doc(&["character", "--type", "A2", "--w", "1 2 1", "--lambda", "1,0"]);
    assert_eq!(c["dimension"], 3);
    let weights: Vec<Vec<i64>> =
        c["terms"].as_array().unwrap().iter().map(|t| serde_json::from_value(t["weight"].clone()).unwrap()).collect();
    let mut sorted = weights.clone();
    sorted.sort();
    assert_eq!(weights, sorted);
}

#[test]
fn bad_input_exits_2() {
    for args in [
        vec!["character", "--type", "A2", "--w", "1", "--lambda", "-1,0"],
        vec!["support", "--type", "A2", "--p", "4", "--w", "e", "--lambda", "0,0"],
        vec!["support", "--type", "A2", "--p", "3", "--w", "1 7", "--lambda", "0,0"],
        vec!["support", "--type", "A2", "--p", "3", "--w", "e", "--lambda", "0"],
        vec!["support", "--type", "B2", "--p", "3", "--w", "e", "--lambda", "0,0"],
        vec!["support", "--type", "A5", "--p", "3", "--w", "e", "--lambda", "0,0,0,0,0"],
        vec!["table", "e8"],
        vec!["table", "a2", "--p", "2"],
        vec!["check", "dimension", "--type", "A3"],
        vec!["frobnicate"],
    ] {
        let out = demazure(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(demazure(&["--help"]).status.code(), Some(0));
}

#[test]
fn checks_report_and_exit() {
    let out = demazure(&["check", "dimension", "--lmax", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"));
    assert_eq!(demazure(&["check", "lemma531", "--type", "A3"]).status.code(), Some(0));
    assert_eq!(demazure(&["check", "words", "--lmax", "4", "--sequential"]).status.code(), Some(0));
    assert_eq!(demazure(&["check", "saturation", "--order", "left-weak"]).status.code(), Some(0));

    // Bruhat pairs s_α < s_α s_β break monotonicity, e.g. p=3, λ=(2,1).
    let out = demazure(&["--json", "check", "saturation", "--lmax", "2", "--primes", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pass"], false);
    assert!(doc["count"].as_u64().unwrap() > 0);
    assert_eq!(doc["counterexamples"].as_array().unwrap().len() as u64, doc["count"].as_u64().unwrap());
}
