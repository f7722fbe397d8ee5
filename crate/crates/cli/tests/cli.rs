use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn eirep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eirep")).args(args).output().expect("binary runs")
}

fn bundle_into(dir: &Path) {
    let out = eirep(&["bundle", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn bundle_is_byte_stable() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    bundle_into(a.path());
    bundle_into(b.path());
    let mut names: Vec<_> = std::fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    let cases = names.iter().filter(|n| n.to_string_lossy().starts_with("case")).count();
    assert_eq!(cases, 5);
    for n in names {
        let x = std::fs::read(a.path().join(&n)).unwrap();
        let y = std::fs::read(b.path().join(&n)).unwrap();
        assert_eq!(x, y, "{n:?}");
    }
}

#[test]
fn case1_validates_and_is_ei() {
    let d = tempfile::tempdir().unwrap();
    bundle_into(d.path());
    let f = d.path().join("case1.json");
    let out = eirep(&["ei", f.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["result"]["ei"], true);
    assert!(eirep(&["validate", f.to_str().unwrap()]).status.success());
}

#[test]
fn kronecker_count() {
    let d = tempfile::tempdir().unwrap();
    bundle_into(d.path());
    let f = d.path().join("kronecker.json");
    let out = eirep(&["oracle-count", f.to_str().unwrap(), "--dim", "1,1", "--char", "2", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["result"]["indecomposable_classes"], 3);
    assert_eq!(v["field"]["p"], 2);
    assert_eq!(v["seed"], 0);
    assert!(v["version"].is_string());
}

#[test]
fn classify_reports() {
    let d = tempfile::tempdir().unwrap();
    bundle_into(d.path());
    let path = |n: &str| d.path().join(n).to_str().unwrap().to_string();
    let out = eirep(&["classify", &path("case5.json"), "--char", "2", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["result"]["verdict"], "infinite");
    let rules: Vec<&str> = v["result"]["supporting"].as_array().unwrap().iter().map(|c| c["rule"].as_str().unwrap()).collect();
    assert!(rules.contains(&"string"));

    let out = eirep(&["classify", &path("z2_z3_three.json"), "--char", "0", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["result"]["verdict"], "finite");
    assert_eq!(v["field"]["coprime_auto"], true);
    assert_ne!(v["field"]["p"].as_u64().unwrap() % 2, 0);
    assert_ne!(v["field"]["p"].as_u64().unwrap() % 3, 0);
}

#[test]
fn unknown_is_not_an_error() {
    let d = tempfile::tempdir().unwrap();
    bundle_into(d.path());
    let f = d.path().join("diamond.json");
    let out = eirep(&["classify", f.to_str().unwrap(), "--char", "2", "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["result"]["verdict"], "unknown");
}

#[test]
fn quotients_of_c_and_c_prime_agree() {
    let d = tempfile::tempdir().unwrap();
    bundle_into(d.path());
    let shape = |n: &str| {
        let out = eirep(&["endotrivialize", d.path().join(n).to_str().unwrap(), "--json"]);
        let q = json_of(&out)["result"]["quotient"].clone();
        (q["objects"].as_array().unwrap().len(), q["morphisms"].as_array().unwrap().len())
    };
    assert_eq!(shape("c.json"), (2, 3));
    assert_eq!(shape("c_prime.json"), (2, 3));
}

#[test]
fn batch_output_is_ordered_and_deterministic() {
    let d = tempfile::tempdir().unwrap();
    bundle_into(d.path());
    let dir = d.path().to_str().unwrap();
    let a = eirep(&["quiver", dir, "--char", "3", "--json"]);
    let b = eirep(&["quiver", dir, "--char", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    let inputs: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["input"].as_str().unwrap()).collect();
    let mut sorted = inputs.clone();
    sorted.sort();
    assert_eq!(inputs, sorted);
}

#[test]
fn errors_exit_nonzero_with_position() {
    let d = tempfile::tempdir().unwrap();
    let f = d.path().join("bad.json");
    std::fs::write(&f, "{\"objects\": [\n").unwrap();
    let out = eirep(&["validate", f.to_str().unwrap()]);
    assert!(!out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("line 2"), "{text}");
    let missing = eirep(&["oracle-count", f.to_str().unwrap(), "--char", "2"]);
    assert!(!missing.status.success());
}
