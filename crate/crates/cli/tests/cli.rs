use std::process::{Command, Output};

use serde_json::Value;
use zetaforge_cli::OutputRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaforge"))
        .args(args)
        .env_remove("ZETAFORGE_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<OutputRecord> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| OutputRecord::from_json(&serde_json::from_str::<Value>(l).unwrap()).unwrap())
        .collect()
}

fn num(r: &OutputRecord, key: &str) -> f64 {
    r.get(key).unwrap_or_else(|| panic!("missing {key}")).parse().unwrap()
}

#[test]
fn field_info() {
    let out = run(&["field-info", "-d", "-4"]);
    assert!(out.status.success());
    let r = &records(&out)[0];
    assert_eq!(r.get("h"), Some("1"));
    assert_eq!(r.get("w"), Some("4"));
    assert!((num(r, "residue") - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    assert_eq!(r.get("v_K").unwrap().split(' ').count(), 20);

    let r = &records(&run(&["field-info", "-d", "5"]))[0];
    assert!((num(r, "regulator") - 0.481_211_825_1).abs() < 1e-10);

    let out = run(&["field-info", "-d", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("squarefree"));
}

#[test]
fn zeta_routes() {
    let r = &records(&run(&["zeta", "-d", "-7", "-s", "2", "--route", "zagier"]))[0];
    assert!((num(r, "value_re") - 1.894_841_448_97).abs() < 1e-10);
    assert_eq!(r.get("route"), Some("zagier"));

    let closed = &records(&run(&["zeta", "-d", "5", "-s", "4", "--route", "closed"]))[0];
    let factored = &records(&run(&["zeta", "-d", "5", "-s", "4", "--route", "factored"]))[0];
    assert!((num(closed, "value_re") - num(factored, "value_re")).abs() < 1e-9);

    let out = run(&["zeta", "-d", "5", "-s", "2", "--route", "zagier"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_routes_agree() {
    let r = &records(&run(&["zeta", "-d", "-4", "-s", "3", "--all-routes"]))[0];
    let direct = num(r, "direct_value_re");
    let factored = num(r, "factored_value_re");
    let closed = num(r, "closed_value_re");
    assert!((factored - closed).abs() < 1e-12);
    assert!((direct - factored).abs() <= num(r, "direct_err"));
    assert!(num(r, "delta_factored_closed") < 1e-12);
    assert!(r.get("zagier_skipped").is_some());
}

#[test]
fn csv_output() {
    let out = run(&["--csv", "zeta", "-d", "-7", "-s", "2", "--route", "factored"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("route,value_re"));
    assert!(!text.contains('\r'));
}

#[test]
fn verify_wilton() {
    let out = run(&["verify-wilton", "-d", "0", "-u", "2", "-v", "2", "-M", "100,400,1600"]);
    assert!(out.status.success());
    let rs = records(&out);
    assert_eq!(rs.len(), 3);
    let res: Vec<f64> = rs.iter().map(|r| num(r, "residual")).collect();
    assert!(res[0] > res[1] && res[1] > res[2]);
    assert_eq!(rs[2].get("trend"), Some("decreasing"));

    let out = run(&["verify-wilton", "-d", "5", "-u", "2.3", "-v", "2.4", "-M", "50,200"]);
    assert_eq!(records(&out).len(), 2);

    let out = run(&["--csv", "verify-wilton", "-d", "5", "-u", "2.3", "-v", "2.4", "-M", "50,200"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("M,residual,tail_estimate,flags\n"));
    assert_eq!(text.lines().count(), 3);

    let out = run(&["verify-wilton", "-d", "5", "-u", "1", "-v", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("u ≠ 1"));

    let out = run(&["verify-wilton", "-d", "0", "-u", "2", "-v", "2", "-M", "400,100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_anchors_and_failures() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("batch.csv");
    let dest = dir.path().join("out.csv");
    std::fs::write(&spec, "D,s,route\n# anchors\n-7,2,zagier\n-3,2,factored\n").unwrap();
    let out = run(&["table", spec.to_str().unwrap(), "-o", dest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&dest).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "D,s,route,value_re,value_im,err,flags,error");
    assert_eq!(lines.len(), 3);
    let value = |line: &str| line.split(',').nth(3).unwrap().parse::<f64>().unwrap();
    assert!((value(lines[1]) - 1.894_841_448_97).abs() < 1e-10);
    assert!((value(lines[2]) - 1.285_190_955_484_149).abs() < 1e-10);

    let out = run(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "D,s,route,value_re,value_im,err,flags,error\n");

    let out = run(&["table", "--row", "-7,2,zagier", "--row", "5,2,zagier", "--row", "-4,3,closed"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("-7,2,zagier,1.89484144896"));
    assert!(lines[2].ends_with("needs D < 0 and s = 2"));
    assert!(lines[3].starts_with("-4,3,closed,1.16472840390"));
}

#[test]
fn json_round_trip_and_determinism() {
    let args = ["zeta", "-d", "-4", "-s", "3", "--all-routes"];
    let a = records(&run(&args));
    let b = records(&run(&args));
    let strip = |mut r: OutputRecord| {
        r.elapsed_ms = 0;
        r
    };
    assert_eq!(strip(a[0].clone()), strip(b[0].clone()));
    let v = a[0].to_json();
    let again: Value = serde_json::from_str(&OutputRecord::from_json(&v).unwrap().to_json_line()).unwrap();
    let keys = |v: &Value| v.as_object().unwrap().keys().cloned().collect::<Vec<_>>();
    assert_eq!(keys(&v), keys(&again));
    assert_eq!(keys(&v["results"]), keys(&again["results"]));
}

#[test]
fn max_terms_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_zetaforge"))
        .args(["zeta", "-d", "-4", "-s", "3", "--route", "direct"])
        .env("ZETAFORGE_MAX_TERMS", "50")
        .output()
        .unwrap();
    let coarse = num(&records(&out)[0], "err");
    let fine = num(&records(&run(&["zeta", "-d", "-4", "-s", "3", "--route", "direct"]))[0], "err");
    assert!(coarse > fine);
    let out = run(&["--max-terms", "0", "zeta", "-d", "-4", "-s", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
