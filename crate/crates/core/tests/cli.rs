//! The binary's interface: exit codes, record counts, export shapes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthoroots")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["--nope"][..],
        &["roots", "show", "--type", "E6"],
        &["roots", "show"],
        &["nroots", "list", "--type", "D6", "--format", "dot"],
        &["exc", "fano", "--type", "E8"],
        &["qpar", "verify", "--type", "D6", "--axioms", "qp9"],
        &["export", "everything", "--type", "D6"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn io_error_exits_1() {
    let o = run(&["export", "hasse", "--type", "D6", "--out", "/nonexistent/dir/h.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/dir/h.txt"));
}

#[test]
fn verify_d6_reports_25_checks() {
    let o = run(&["verify", "--type", "D6", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let recs = v.as_array().unwrap();
    assert!(recs.len() >= 25);
    for r in recs {
        for key in ["check", "type", "parameters", "pass", "expected", "actual", "elapsed"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("D6: "));
}

#[test]
fn nroots_list_e7_has_135_records() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["nroots", "list", "--type", "E7", "--format", "json"])).unwrap();
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 135);
    assert_eq!(recs[0]["components"].as_array().unwrap().len(), 7);
}

#[test]
fn rootsystem_json_schema() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["roots", "show", "--type", "E8", "--format", "json"])).unwrap();
    assert_eq!(v["type"], "E8");
    assert_eq!(v["rank"], 8);
    assert_eq!(v["roots"].as_array().unwrap().len(), 120);
    assert_eq!(v["heights"].as_array().unwrap().len(), 120);
    let e = v["embedding"][0].as_array().unwrap();
    assert!(e.iter().all(|s| s.as_str().unwrap().contains('/')));
}

#[test]
fn hasse_d6_edge_list() {
    let text = stdout(&["export", "hasse", "--type", "D6"]);
    let header = text.lines().next().unwrap();
    let levels: Vec<&str> = header.strip_prefix("# levels: ").unwrap().split(' ').collect();
    assert_eq!(levels.len(), 15);
    for line in text.lines().skip(1) {
        let (u, v) = line.split_once(' ').unwrap();
        assert!(u.parse::<usize>().unwrap() < 15 && v.parse::<usize>().unwrap() < 15);
    }
}

#[test]
fn gamma_e8_counts() {
    let text = stdout(&["export", "gamma", "--type", "E8"]);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# Gamma: 120 vertices, 3780 edges");
    assert_eq!(lines.count(), 3780);
    assert_eq!(stdout(&["exc", "gamma", "--certify-srg"]).trim(), "SRG(120, 63, 30, 36)");
}

#[test]
fn cob_e7_is_15_by_15() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["macd", "cob", "--type", "E7", "--format", "json"])).unwrap();
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 15);
    assert!(m.iter().all(|r| r.as_array().unwrap().len() == 15));
    assert_eq!(v["noncrossing"].as_array().unwrap().len(), 15);
}

#[test]
fn exports_are_byte_identical() {
    for kind in ["rootsystem", "nroots", "hasse", "bases", "cob"] {
        let a = run(&["export", kind, "--type", "E7", "--workers", "1"]).stdout;
        let b = run(&["export", kind, "--type", "E7", "--workers", "4"]).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{kind}");
    }
}

#[test]
fn subcommand_outputs() {
    assert_eq!(stdout(&["special", "wn", "--type", "E7"]).split_whitespace().count(), 7);
    assert_eq!(stdout(&["exc", "fano", "--element", "thetaC"]).trim(), "127 136 145 235 246 347 567");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["macd", "basis", "--type", "E8", "--kind", "noncrossing", "--format", "json"]))
            .unwrap();
    assert_eq!(v["noncrossing"].as_array().unwrap().len(), 50);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["special", "sigma-classes", "--type", "E8", "--format", "json"])).unwrap();
    assert_eq!(v.as_array().unwrap().iter().map(|c| c["members"].as_array().unwrap().len()).sum::<usize>(), 2025);
    assert!(stdout(&["special", "csp", "--type", "D8"]).contains("0 failures"));
    assert!(stdout(&["qpar", "verify", "--type", "E8", "--axioms", "qp1,qp2,levels"]).contains("0 failures"));
}
