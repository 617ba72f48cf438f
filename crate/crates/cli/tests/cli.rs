use qt_characters::Budget;
use qtchar::fixtures::{check_fixture, parse_fixture, stock_fixtures};
use qtchar::{cmd_kl, cmd_product, cmd_tchar, cmd_verify, CliError, Format, RunConfig, Status, TMode};
use std::process::Command;
use yt_algebra::parse::parse_element;

fn cfg(cartan: &str, format: Format) -> RunConfig {
    RunConfig::new(cartan, Budget::default(), format, TMode::Deformed).unwrap()
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qtchar")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn tchar_counts() {
    for (cartan, seed, n) in [("A2", "Y[1,0]", 3), ("G2", "Y[2,0]", 15), ("B2", "Y[2,0]", 5)] {
        let out = cmd_tchar(&cfg(cartan, Format::Text), seed).unwrap();
        assert_eq!(out.lines().count(), n, "{cartan}");
    }
}

#[test]
fn text_output_round_trips() {
    for (cartan, seed) in [("A1", "Y[0]^2 Y[2]"), ("B2", "Y[2,0] Y[1,5]"), ("G2", "Y[1,0]"), ("C3", "Y[3,0]")] {
        let c = cfg(cartan, Format::Text);
        let out = cmd_tchar(&c, seed).unwrap();
        let back = parse_element(&out, c.algebra()).unwrap();
        assert_eq!(back.to_string(), out);
        let qc = c.engine();
        let seed = qtchar::commands::parse_seed(&c, seed).unwrap();
        assert_eq!(back, qc.t_algorithm(&seed).unwrap());
    }
}

#[test]
fn json_keys_are_sorted_and_stable() {
    let c = cfg("B2", Format::Json);
    let a = cmd_tchar(&c, "Y[1,0]").unwrap();
    assert_eq!(a, cmd_tchar(&c, "Y[1,0]").unwrap());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(v["count"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn dot_output_labels_edges() {
    let out = cmd_tchar(&cfg("A2", Format::Dot), "Y[1,0]").unwrap();
    assert!(out.starts_with("digraph character {"));
    assert!(out.contains("[label=\"1,1\"]"));
    assert!(out.contains("[label=\"2,2\"]"));
}

#[test]
fn kl_and_product_commands() {
    let out = cmd_kl(&cfg("A1", Format::Text), "Y[0]^2 Y[2]").unwrap();
    assert_eq!(out, "t^0 Y[1,0] | t^-2\n");
    let out = cmd_product(&cfg("A1", Format::Text), "X[2]", "X[0]").unwrap();
    assert_eq!(out, "(t - t^-1) 1\n(t^-2) X[1,0] X[1,2]\n");
    let out = cmd_product(&cfg("A1", Format::Text), "X[0]", "X[2]").unwrap();
    assert_eq!(out, "(1) X[1,0] X[1,2]\n");
    let classical = RunConfig::new("A1", Budget::default(), Format::Text, TMode::Classical).unwrap();
    assert_eq!(cmd_product(&classical, "X[2]", "X[0]").unwrap(), "(1) X[1,0] X[1,2]\n");
}

#[test]
fn errors_map_to_exit_codes() {
    let c = cfg("A2", Format::Text);
    assert_eq!(cmd_tchar(&c, "Y[1,0]^-1").unwrap_err().exit_code(), 3);
    assert_eq!(cmd_tchar(&c, "Y[1,0").unwrap_err().exit_code(), 2);
    assert_eq!(cmd_tchar(&c, "Y[3,0]").unwrap_err().exit_code(), 2);
    let tight = RunConfig::new(
        "G2",
        Budget {
            max_monomials: 3,
            max_a_depth: 60,
        },
        Format::Text,
        TMode::Deformed,
    )
    .unwrap();
    assert!(matches!(cmd_tchar(&tight, "Y[2,0]"), Err(CliError::Budget(_))));
    assert!(RunConfig::new("Q7", Budget::default(), Format::Text, TMode::Deformed).is_err());
    assert_eq!(cmd_product(&cfg("A1", Format::Dot), "X[0]", "X[2]").unwrap_err().exit_code(), 2);
}

#[test]
fn binary_exit_codes() {
    assert_eq!(bin(&["--cartan", "A2", "tchar", "Y[1,0]"]).0, 0);
    assert_eq!(bin(&["tchar", "Y[0"]).0, 2);
    assert_eq!(bin(&["tchar", "Y[0]^-1"]).0, 3);
    assert_eq!(bin(&["--cartan", "G2", "--budget-monomials", "3", "tchar", "Y[2,0]"]).0, 4);
    assert_eq!(bin(&["verify", "nonsense"]).0, 2);
    assert_eq!(bin(&["--cartan", "{\"matrix\": [[2, -1], [-1, 3]]}", "tchar", "Y[1,0]"]).0, 3);
    let (code, out) = bin(&["--cartan", "A2", "--format", "json", "verify", "kernels"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"passed\": true"));
}

#[test]
fn fixtures_parse_and_match() {
    let all = stock_fixtures().unwrap();
    assert_eq!(all.len(), 8);
    for f in &all {
        for c in check_fixture(f, Budget::default()).unwrap() {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.detail);
        }
    }
}

#[test]
fn checker_rejects_wrong_fixture() {
    let text = "cartan A2\nseed Y[1,0]\n[monomials]\nY[1,0]\nY[2,3]^-1\n[edges]\n[kernel 1]\nY[1,0] + Y[2,3]^-1\n";
    let f = parse_fixture("bad", text).unwrap();
    let checks = check_fixture(&f, Budget::default()).unwrap();
    assert!(checks.iter().all(|c| c.status == Status::Fail));
    assert!(parse_fixture("bad", "[monomials]\nY[1,0]\n").is_err());
    assert!(parse_fixture("bad", "cartan A1\nseed Y[0]\n[bogus]\n").is_err());
}

#[test]
fn verify_suites_pass() {
    for cartan in ["A1", "A2", "B2", "G2"] {
        for suite in ["kernels", "positivity", "involution", "bicharacters"] {
            let r = cmd_verify(&cfg(cartan, Format::Text), suite);
            assert!(r.is_ok(), "{cartan} {suite}: {:?}", r.err());
        }
    }
    assert!(cmd_verify(&cfg("A1", Format::Text), "appendix").is_ok());
}
