use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectjack")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn singular_verify_small_family() {
    let out = run(&["singular", "verify", "--m", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["members"].as_array().unwrap().len(), 2);
    assert_eq!(doc["passed"], Value::Bool(true));
    assert_eq!(doc["kappa"], "1/3");
}

#[test]
fn certificate_file_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = run(&["singular", "verify", "--m", "1", "--k", "2", "--n", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let cert: rectjack::singular::SingularCertificate = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert.kappa, rectjack::field::rational(2, 3));
    cert.reverify().unwrap();
}

#[test]
fn example_n5_reports_monomial_count() {
    let out = run(&["example", "n5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["first"]["num_monomials"], 100);
    assert_eq!(doc["combination_singular"], Value::Bool(true));
}

#[test]
fn uniq_check_prints_verdict_and_size() {
    let out = run(&["uniq", "check", "--m", "1", "--k", "2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("Unique"), "{text}");
    assert!(text.contains("enumerated 6 pairs"), "{text}");

    let out = run(&["uniq", "check", "--m", "2", "--k", "2", "--s", "1", "--variant", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "unique");
}

#[test]
fn brickmap_reads_a_tableau_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    fs::write(&path, "[[18,17,13,14,10,8,7,6,3],[16,15,12,11,9,5,4,2,1]]").unwrap();
    let out = run(&["brickmap", "--tableau-json", path.to_str().unwrap(), "--m", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    let beta: Vec<u64> = doc["beta"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(beta, vec![2, 2, 2, 2, 1, 2, 2, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0]);
    assert_eq!(doc["tableau"][0], serde_json::json!([18, 17, 14]));
    assert_eq!(doc["fundamental_equation"], Value::Bool(true));
}

#[test]
fn norms_and_mu() {
    let out = run(&["norms", "--m", "2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"].as_array().unwrap().len(), 14);

    let a = run(&["mu", "verify", "--m", "1", "--k", "2", "--degree", "2", "--trials", "5", "--seed", "9"]);
    let b = run(&["mu", "verify", "--m", "1", "--k", "2", "--degree", "2", "--trials", "5", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 9);
}

#[test]
fn jack_construct_generic_and_specialized() {
    let out = run(&["jack", "construct", "--alpha", "1,0", "--tableau-contents", "-1,0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["num_terms"], 2);
    let out = run(&["jack", "construct", "--alpha", "1,0", "--tableau-contents", "-1,0", "--kappa", "1/3"]);
    let doc = json(&out);
    assert_eq!(doc["spectral"], serde_json::json!(["2", "0"]));
    // kappa = 0 is a pole of every spectral entry with alpha_i > 0
    let out = run(&["jack", "construct", "--alpha", "1,0", "--tableau-contents", "-1,0", "--kappa", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], Value::Bool(false));
}

#[test]
fn apply_operator_from_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_rectjack"))
        .args(["apply-operator", "--op", "dunkl", "--index", "1", "--kappa", "1/3", "--input", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"[{"exp":[1,0],"tableau":[-1,0],"coeff":"1"}]"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!([{"exp": [0, 0], "tableau": [-1, 0], "coeff": "2/3"}]));
}

#[test]
fn usage_errors_exit_2_and_name_the_flag() {
    let out = run(&["jack", "construct", "--alpha", "1,0", "--tableau-contents", "-1,0", "--kappa", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--kappa"), "{}", stderr(&out));

    let out = run(&["singular", "verify", "--m", "1", "--k", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--bogus"));

    let out = run(&["jack", "construct", "--alpha", "1,x", "--tableau-contents", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--alpha"));

    let out = run(&["singular", "verify", "--m", "1", "--k", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["uniq", "check", "--m", "1", "--k", "2", "--variant", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_output_is_stable() {
    let a = run(&["singular", "verify", "--m", "1", "--k", "2", "--format", "text"]);
    let b = run(&["singular", "verify", "--m", "1", "--k", "2", "--format", "text"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().trim_end().ends_with("PASSED"));
}
