use std::process::{Command, Output};

use serde_json::Value;

fn fliess(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fliess"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fliess(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(args: &[&str]) -> i32 {
    fliess(args).status.code().unwrap()
}

#[test]
fn word_products() {
    assert_eq!(stdout(&["shuffle", "01", "1"]), "2*011 + 101");
    assert_eq!(stdout(&["shuffle", "e", "1/2*0"]), "1/2*0");
    assert_eq!(
        stdout(&["prelie-coproduct", "011"]),
        "1 (x) 11 + 2*11 (x) 1 + 111 (x) e"
    );
    assert_eq!(
        stdout(&["kernel-delta", "--degree", "4"]),
        "dimension 1\n111"
    );
}

#[test]
fn composition_respects_truncation() {
    assert_eq!(
        stdout(&["compose", "1*1 + 2*01", "1", "--truncate", "3"]),
        "2*1 + 3*01 + 2*001 + O(len>3)"
    );
    assert_eq!(stdout(&["rcompose", "1", "0"]), "1 + 00");
}

#[test]
fn coproduct_of_a_coordinate() {
    assert_eq!(
        stdout(&["coproduct", "X_01"]),
        "1 (x) X_01 + X_1 (x) X_1 + X_01 (x) 1 + X_11 (x) X_e"
    );
}

#[test]
fn tree_commands() {
    assert_eq!(stdout(&["ptree-enum", "3", "--count"]), "5");
    assert_eq!(
        stdout(&["ptree-enum", "4", "--decorations", "2", "--count"]),
        "167"
    );
    assert_eq!(stdout(&["ptree-shuffle", "{1}", "{2}"]), "{1 2}");
    assert_eq!(stdout(&["ptree-prelie", "{1}", "{2}"]), "{1({2})}");
    assert_eq!(stdout(&["rigidity-delta", "{2({1})}"]), "{2} (x) {1}");
    assert_eq!(stdout(&["psi", "2(1)"]), "{2({1})}");
    assert_eq!(
        stdout(&["phi-pl", "l:1,2"]),
        stdout(&["phi-cpl", "{1({2})}"])
    );
}

#[test]
fn m_basis_commands() {
    assert_eq!(stdout(&["dendriform", "1", "2", "--op", "left"]), "3,1");
    assert_eq!(stdout(&["dendriform", "2", "1", "--op", "right"]), "3,1");
    let words = stdout(&["m-eval", "3,1"]);
    assert_eq!(stdout(&["to-m-basis", &words, "--degree", "4"]), "3,1");
    assert_eq!(code(&["m-prelie", "1,2", "1"]), 2);
}

#[test]
fn dimension_table() {
    let table = stdout(&["dims", "--degree", "10"]);
    let last = table.lines().last().unwrap();
    assert_eq!(last, "10\t55\t384");
    let json: Value = serde_json::from_str(&stdout(&[
        "--json",
        "dims",
        "--degree",
        "10",
        "--decorations",
        "2",
    ]))
    .unwrap();
    assert_eq!(json[9]["forests"], "10702333");
}

#[test]
fn json_uses_exact_strings() {
    let json: Value = serde_json::from_str(&stdout(&["--json", "shuffle", "1/3*0", "1"])).unwrap();
    let terms = json["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().all(|t| t["coeff"] == "1/3"));
    let json: Value =
        serde_json::from_str(&stdout(&["--json", "ptree-shuffle", "{1}", "{2}"])).unwrap();
    assert_eq!(json["terms"][0]["coeff"], "1");
}

#[test]
fn verify_reports_and_exit_codes() {
    let report = stdout(&["verify", "enumeration", "--size", "7"]);
    assert!(report.contains("1,2,5,14,42,134,444"), "{report}");
    assert!(report.ends_with("PASS (6/6 checks passed)"), "{report}");
    let json: Value = serde_json::from_str(&stdout(&[
        "--json",
        "verify",
        "hopf",
        "--size",
        "3",
        "--seed",
        "42",
        "--instances",
        "20",
    ]))
    .unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(
        stdout(&["verify", "prelie", "--seed", "9", "--instances", "10"]),
        stdout(&["verify", "prelie", "--seed", "9", "--instances", "10"])
    );
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(code(&["shuffle", "2", "1"]), 2);
    assert_eq!(code(&["ptree-shuffle", "{1(", "{1}"]), 2);
    assert_eq!(code(&["verify", "bogus"]), 2);
    assert_eq!(code(&["nosuch"]), 2);
    assert_eq!(code(&["kernel-delta"]), 2);
    assert_eq!(code(&["--help"]), 0);
}
