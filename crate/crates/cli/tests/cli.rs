use std::process::{Command, Output};

use serde_json::Value;

fn lambert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lambert"))
        .args(args)
        .env_remove("LAMBERT_TABLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn rows(out: &Output) -> Vec<Value> {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

fn one(args: &[&str]) -> Value {
    let mut r = rows(&lambert(args));
    assert_eq!(r.len(), 1);
    r.remove(0)
}

fn f(v: &Value, key: &str) -> f64 {
    v[key].as_f64().unwrap_or_else(|| panic!("{key} missing in {v}"))
}

fn error_of(out: &Output) -> Value {
    let line = String::from_utf8_lossy(&out.stderr);
    serde_json::from_str(line.trim()).expect("structured error on stderr")
}

#[test]
fn eval_report_fields() {
    let v = one(&["eval", "--coeff", "one", "--x", "0.5"]);
    for key in ["value", "terms_used", "error_estimate", "stop_reason", "engine", "point"] {
        assert!(v.get(key).is_some(), "{key} missing");
    }
    assert_eq!(v["stop_reason"], "tolerance_met");
}

#[test]
fn eval_clausen_matches_naive() {
    let c = one(&["eval", "--coeff", "one", "--x", "0.5", "--engine", "clausen"]);
    let n = one(&["eval", "--coeff", "one", "--x", "0.5"]);
    assert!((f(&c, "value") - f(&n, "value")).abs() < 1e-11);
}

#[test]
fn eval_mobius_gives_x() {
    let v = one(&["eval", "--coeff", "mobius", "--x", "0.3"]);
    assert!((f(&v, "value") - 0.3).abs() <= 1e-12);
}

#[test]
fn eval_outside_disc_is_domain_error() {
    let out = lambert(&["eval", "--coeff", "one", "--x", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(error_of(&out)["error"]["kind"], "domain");
}

#[test]
fn eval_complex_point() {
    let v = one(&["eval", "--x", "0.5", "--im", "0.3", "--engine", "power"]);
    let n = one(&["eval", "--x", "0.5", "--im", "0.3"]);
    assert_eq!(v["point"]["im"], 0.3);
    let dre = f(&v["value"], "re") - f(&n["value"], "re");
    let dim = f(&v["value"], "im") - f(&n["value"], "im");
    assert!(dre.hypot(dim) < 1e-11);
}

#[test]
fn eval_engine_restrictions() {
    let out = lambert(&["eval", "--coeff", "mobius", "--x", "0.3", "--engine", "clausen"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lambert(&["eval", "--x", "0.3", "--im", "0.1", "--engine", "eisenstein-cf"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["error"]["kind"], "usage");
}

#[test]
fn strict_term_cap_exits_3() {
    let out = lambert(&["eval", "--x", "0.999", "--term-cap", "100", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_of(&out)["error"]["kind"], "term_cap");
    let out = lambert(&["eval", "--x", "0.999", "--term-cap", "100"]);
    assert_eq!(one_from(&out)["stop_reason"], "term_cap");
}

fn one_from(out: &Output) -> Value {
    rows(out).remove(0)
}

#[test]
fn bad_flags_are_usage_errors() {
    for args in [
        &["--tolerance", "1e-20", "eval", "--x", "0.1"][..],
        &["--tolerance", "0.5", "eval", "--x", "0.1"][..],
        &["--term-cap", "0", "eval", "--x", "0.1"][..],
        &["eval", "--coeff", "sigma", "--x", "0.1"][..],
        &["scan", "--kind", "nonsense"][..],
    ] {
        let out = lambert(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_of(&out)["error"]["kind"], "usage", "{args:?}");
    }
}

#[test]
fn scan_wigert_has_six_rows() {
    let r = rows(&lambert(&[
        "scan", "--kind", "wigert", "--order", "2", "--z-start", "0.2", "--halvings", "5",
    ]));
    assert_eq!(r.len(), 6);
    let zs: Vec<f64> = r.iter().map(|v| f(v, "z")).collect();
    assert_eq!(zs, vec![0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625]);
}

#[test]
fn scan_wigert_slope_is_twice_order() {
    let r = rows(&lambert(&[
        "scan", "--kind", "wigert", "--order", "2", "--z-start", "0.2", "--halvings", "5",
    ]));
    let slope = f(&r[0], "slope");
    assert!((slope - 4.0).abs() <= 0.4, "slope {slope}");
}

#[test]
fn scan_mertens2_margins_positive() {
    let r = rows(&lambert(&["scan", "--kind", "mertens2", "--xs", "1000,10000"]));
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|v| f(v, "margin") > 0.0));
}

#[test]
fn scan_partition_flags() {
    let v = one(&["scan", "--kind", "partition", "--x", "0.5"]);
    assert_eq!(v["lhs_below_mid"], true);
    assert_eq!(v["mid_below_rhs"], true);
}

#[test]
fn every_scan_kind_runs() {
    for kind in [
        "wigert", "schlomilch", "voronoi", "tauber-logd", "tauber-h", "partition",
        "singularity", "mertens1", "mertens2",
    ] {
        let r = rows(&lambert(&["scan", "--kind", kind]));
        assert!(!r.is_empty(), "{kind}");
    }
}

#[test]
fn scan_voronoi_residuals() {
    for v in rows(&lambert(&["scan", "--kind", "voronoi"])) {
        assert!(f(&v, "residual") < 1e-7, "{v}");
    }
}

#[test]
fn scan_singularity_bounds_hold() {
    let r = rows(&lambert(&["scan", "--kind", "singularity", "--random", "4", "--seed", "11"]));
    assert_eq!(r.len(), (3 + 4) * 3);
    for v in &r {
        assert!(f(v, "major_margin") >= 0.0 && f(v, "minor_margin") > 0.0, "{v}");
    }
}

#[test]
fn scan_rejects_bad_grids() {
    let out = lambert(&["scan", "--kind", "mertens1", "--xs", "0.01,0.1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lambert(&["scan", "--kind", "schlomilch", "--xs", "0.9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lambert(&["scan", "--kind", "singularity", "--q", "4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_output_has_header() {
    let out = lambert(&["--format", "csv", "scan", "--kind", "mertens2", "--xs", "1000,10000"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,reciprocal_sum,delta,bound,margin");
    assert_eq!(lines.len(), 3);
}

#[test]
fn bench_clausen_beats_naive_near_one() {
    let r = rows(&lambert(&["bench", "--engines", "clausen,naive", "--xs", "0.9"]));
    let terms = |e: &str| {
        r.iter().find(|v| v["engine"] == e).unwrap()["terms_used"].as_u64().unwrap()
    };
    assert!(terms("clausen") < terms("naive"));
    let winner: Vec<&Value> = r.iter().filter(|v| v["winner"] == true).collect();
    assert_eq!(winner.len(), 1);
    assert_eq!(winner[0]["engine"], "clausen");
}

#[test]
fn bench_all_engines_meet_tolerance_at_small_x() {
    let r = rows(&lambert(&[
        "bench", "--engines", "naive,power,clausen,eisenstein-q,eisenstein-cf", "--xs", "0.1",
    ]));
    assert_eq!(r.len(), 5);
    for v in &r {
        assert_eq!(v["meets_tolerance"], true, "{v}");
        assert!(f(v, "achieved_error") <= 1e-12);
    }
}

#[test]
fn bench_needs_two_engines() {
    let out = lambert(&["bench", "--engines", "naive"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["error"]["kind"], "usage");
}

#[test]
fn constants_agree_and_round_trip() {
    let out = lambert(&["constants"]);
    let v = one_from(&out);
    assert!((f(&v, "H_mobius") - f(&v, "H_direct")).abs() <= 1e-8);
    assert!(f(&v, "agreement") <= 1e-8);
    assert!((f(&v, "two_gamma") - 1.154_431_329_8).abs() < 1e-10);
    assert!(v["provenance"]["H_direct"].is_string());
    let line = String::from_utf8(out.stdout).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), line.trim_end());
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        &["scan", "--kind", "singularity", "--random", "3", "--seed", "5"][..],
        &["eval", "--coeff", "mangoldt", "--x", "-0.7"][..],
        &["constants"][..],
    ] {
        let a = lambert(args);
        let b = lambert(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn table_limit_from_environment() {
    let run = |env: &str, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_lambert"));
        c.env("LAMBERT_TABLE_LIMIT", env).args(extra);
        c.args(["scan", "--kind", "tauber-h", "--x", "5000"]);
        c.output().unwrap()
    };
    let small = run("1000", &[]);
    assert_eq!(small.status.code(), Some(2));
    assert_eq!(error_of(&small)["error"]["kind"], "out_of_range");
    assert!(run("20000", &[]).status.success());
    assert!(run("1000", &["--table-limit", "20000"]).status.success());
}
