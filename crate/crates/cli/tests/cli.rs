use std::process::{Command, Output};

use serde_json::Value;

fn chopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chopf")).args(args).output().expect("run chopf")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim().to_string()
}

#[test]
fn g_product_over_integers() {
    let out = chopf(&["product", "--algebra", "fqsym-g", "--colors", "int", "G[21;41]", "G[12;31]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let terms: Vec<&str> = text.split(" + ").collect();
    assert_eq!(terms.len(), 6);
    for k in ["G[2134;4131]", "G[3124;4131]", "G[3214;4131]", "G[4123;4131]", "G[4213;4131]", "G[4312;4131]"] {
        assert!(terms.contains(&k), "{k} missing from {text}");
    }
}

#[test]
fn tag_inference_matches_explicit_algebra() {
    let a = chopf(&["product", "F[12;01]", "F[1;1]"]);
    let b = chopf(&["product", "--algebra", "fqsym-f", "F[12;01]", "F[1;1]"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn level2_count() {
    let out = chopf(&["enumerate", "level2-pf", "3", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "27");
}

#[test]
fn pqsym_hopf_suite() {
    let out = chopf(&["verify", "hopf", "--algebra", "pqsym", "--colors", "mod:2", "--max-size", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("ok"));
}

#[test]
fn bad_literal_is_a_usage_error() {
    let out = chopf(&["product", "G[12;01"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
    let out = chopf(&["product", "--algebra", "nope", "G[1;0]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_round_trip() {
    let out = chopf(&["coproduct", "--json", "G[21;10]"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["algebra"], "fqsym-g⊗fqsym-g");
    let out = chopf(&["product", "--json", "--colors", "mod:3", "2*G[21;12]", "G[1;2]"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["colors"]["l"], 3);
    let literal: Vec<String> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let word = |f: &str| t["key"][f].as_array().unwrap().iter().map(|x| x.to_string()).collect::<String>();
            format!("({})*G[{};{}]", t["coeff"].as_str().unwrap(), word("perm"), word("colors"))
        })
        .collect();
    let back = chopf(&["product", "--colors", "mod:3", &literal.join(" + "), "1"]);
    let direct = chopf(&["product", "--colors", "mod:3", "2*G[21;12]", "G[1;2]"]);
    assert!(back.status.success(), "{}", String::from_utf8_lossy(&back.stderr));
    assert_eq!(stdout(&back), stdout(&direct));
}

#[test]
fn conversions_invert() {
    let f = chopf(&["convert", "--to", "F", "G[312;101]"]);
    assert!(f.status.success());
    let g = chopf(&["convert", "--to", "G", &stdout(&f)]);
    assert_eq!(stdout(&g), "G[312;101]");
}

#[test]
fn special_elements() {
    let out = chopf(&["klyachko", "--n", "3", "--multi"]);
    assert!(out.status.success());
    let out = chopf(&["raney", "--n", "4", "--colors", "2"]);
    assert!(out.status.success());
    let out = chopf(&["theta", "--deg", "3", "--lmax", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("ok"));
    let out = chopf(&["check", "sym-hilbert", "--n", "5"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn series_json() {
    let out = chopf(&["series", "pbt-hilbert", "--order", "4", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let c: Vec<&str> = v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(c, ["1", "2", "8", "40", "224"]);
}
