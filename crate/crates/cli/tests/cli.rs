use std::process::{Command, Output};

use serde_json::Value;

fn grothlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grothlab")).args(args).env_remove("GROTHLAB_THREADS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = grothlab(&full);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).unwrap())
}

#[test]
fn expand_small_cases() {
    let o = grothlab(&["expand", "g", "--shape", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");

    let o = grothlab(&["expand", "G", "--shape", "2,1", "--n", "2", "--route", "schur"]);
    assert_eq!(stdout(&o).trim(), "s[2,1] + (-t1)*s[2,2]");

    let o = grothlab(&["expand", "s", "--shape", "1", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "x1 + x2");
}

#[test]
fn expand_routes_agree() {
    let poly = |route: &str| json(&["expand", "g", "--shape", "2,2,1", "--n", "3", "--route", route]).1["polynomial"].clone();
    let reference = poly("rpp");
    for r in ["schur", "jt_h", "jt_e", "multi_schur"] {
        assert_eq!(poly(r), reference, "route {r}");
    }
    let (code, v) = json(&["expand", "G", "--shape", "2,1", "--n", "2", "--route", "schur"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "grothlab/1");
    assert!(v["schur_expansion"]["text"].is_string());
}

#[test]
fn verify_examples_pass() {
    for args in [&["verify", "all", "--box", "3x3", "--n", "2"][..], &["verify", "ybe", "--model", "nilp"], &["verify", "cauchy", "--m", "3", "--l", "2", "--n", "2"]] {
        let o = grothlab(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn ybe_reports_every_labeling() {
    let (code, v) = json(&["ybe", "--model", "all"]);
    assert_eq!(code, 0);
    let models = v["models"].as_array().unwrap();
    assert_eq!(models.len(), 5);
    for m in &models[..4] {
        assert_eq!(m["detail"]["cases"].as_array().unwrap().len(), 64);
        assert!(m["tables"]["r"].is_object() || m["tables"]["r"].is_array());
    }
    // The perturbed control passes by failing.
    assert_eq!(models[4]["model"], "perturbed");
    assert!(models[4]["detail"]["failing_boundary"].is_string());
}

#[test]
fn exit_codes() {
    assert_eq!(grothlab(&["bogus"]).status.code(), Some(2));
    assert_eq!(grothlab(&["expand", "q", "--shape", "1"]).status.code(), Some(2));
    assert_eq!(grothlab(&["expand", "g", "--shape", "1,x"]).status.code(), Some(2));
    assert_eq!(grothlab(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(grothlab(&["lpp", "exact", "--shape", "1", "--t", "3/2", "--x", "1/2"]).status.code(), Some(2));
    assert_eq!(grothlab(&["lpp", "exact", "--shape", "1", "--t", "1/2", "--x", "0"]).status.code(), Some(2));
    let (code, v) = json(&["lpp", "mc", "--shape", "1", "--t", "1/2", "--x", "1/2", "--trials", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(v["within_4_sigma"], true);
}

#[test]
fn lpp_exact_values() {
    let (code, v) = json(&["lpp", "exact", "--shape", "", "--t", "1/2", "--x", "1/3,1/4"]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"], "35/48");

    let (code, v) = json(&["lpp", "exact", "--shape", "2,1", "--t", "1/2,1/3", "--x", "1/4,1/5", "--bruteforce"]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"], v["bruteforce"]);

    let (code, v) = json(&["lpp", "cdf", "--m", "1", "--t", "1/2,1/3", "--x", "1/4,1/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
}

#[test]
fn lpp_phi_and_tasep() {
    let (code, v) = json(&["lpp", "tasep", "--rpp", "1,1,4/1,3,4/3,3", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["holds"], true);

    let (code, v) = json(&["lpp", "phi", "--rpp", "1,1,4/1,3,4/3,3", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["g"], serde_json::json!([3, 3, 2]));
}

#[test]
fn json_is_deterministic() {
    let args = ["--format", "json", "lpp", "mc", "--shape", "2,1", "--t", "1/2,1/3", "--x", "1/4,1/5", "--trials", "5000", "--seed", "7"];
    let a = grothlab(&args);
    let b = grothlab(&args);
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_grothlab")).args(args).env("GROTHLAB_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, single.stdout);

    let sweep = ["--format", "json", "verify", "routes", "--box", "2x2", "--n", "2"];
    let single = Command::new(env!("CARGO_BIN_EXE_grothlab")).args(sweep).env("GROTHLAB_THREADS", "1").output().unwrap();
    assert_eq!(grothlab(&sweep).stdout, single.stdout);
}
