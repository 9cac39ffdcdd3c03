use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn caloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_caloop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

const Z8: &str = "order 8
0 1 2 3 4 5 6 7
1 2 3 4 5 6 7 0
2 3 4 5 6 7 0 1
3 4 5 6 7 0 1 2
4 5 6 7 0 1 2 3
5 6 7 0 1 2 3 4
6 7 0 1 2 3 4 5
7 0 1 2 3 4 5 6
";

#[test]
fn classify_p3_writes_seven_entries() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("r.json");
    let o = caloop(&["classify", "--p", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = json(&out);
    assert_eq!(r["entries"].as_array().unwrap().len(), 7);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["group_quotient"]["isomorphic_to"], "Z3xZ9");
}

#[test]
fn classify_p2_contains_exceptional_loop() {
    let o = caloop(&["classify", "--p", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = r["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"exceptional-8"));
}

#[test]
fn classify_rejects_composite() {
    let o = caloop(&["classify", "--p", "4"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("4 is not prime"), "{}", stderr(&o));
}

#[test]
fn classify_is_deterministic() {
    let a = caloop(&["classify", "--p", "3", "--seed", "7"]);
    let b = caloop(&["classify", "--p", "3", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_count_does_not_change_output() {
    let one = Command::new(env!("CARGO_BIN_EXE_caloop"))
        .args(["classify", "--p", "2"])
        .env("CALOOP_THREADS", "1")
        .output()
        .unwrap();
    let three = caloop(&["classify", "--p", "2", "--threads", "3"]);
    assert!(one.status.success() && three.status.success());
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn orbit_dumps() {
    for (p, count, total) in [(2, 4, 15), (3, 5, 40), (5, 5, 156)] {
        let o = caloop(&["orbits", "--p", &p.to_string()]);
        assert!(o.status.success(), "{}", stderr(&o));
        let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(r["orbits"].as_array().unwrap().len(), count);
        assert_eq!(r["total_subspaces"], total);
    }
    let o = caloop(&["orbits", "--p", "3"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut sizes: Vec<u64> = r["orbits"].as_array().unwrap().iter().map(|o| o["size"].as_u64().unwrap()).collect();
    sizes.sort();
    assert_eq!(sizes, [4, 4, 8, 12, 12]);
}

#[test]
fn verify_exceptional_loop() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("e8.txt");
    let o = caloop(&["export", "--p", "2", "--which", "exceptional-8", "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = caloop(&["verify", "--table", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("commutative automorphic, center size 1"), "{}", stdout(&o));
}

#[test]
fn verify_cyclic_group() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z8.txt", Z8);
    let o = caloop(&["verify", "--table", &path]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("group"), "{}", stdout(&o));
}

#[test]
fn verify_reports_parse_errors_with_lines() {
    let dir = TempDir::new().unwrap();
    let broken = Z8.replace("2 3 4 5 6 7 0 1", "2 3 4 5 6 7 0 0");
    let path = write(&dir, "bad.txt", &broken);
    let o = caloop(&["verify", "--table", &path]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("line 4") || err.contains("not a Latin square"), "{err}");
}

#[test]
fn verify_fails_on_non_commutative_table() {
    let dir = TempDir::new().unwrap();
    // S3 with the identity first.
    let s3 = "order 6\n0 1 2 3 4 5\n1 0 4 5 2 3\n2 5 0 4 3 1\n3 4 5 0 1 2\n4 3 1 2 5 0\n5 2 3 1 0 4\n";
    let path = write(&dir, "s3.txt", s3);
    let o = caloop(&["verify", "--table", &path, "--check", "loop,comm"]);
    assert!(!o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("commutative: no"));
}

#[test]
fn iso_exit_codes() {
    let dir = TempDir::new().unwrap();
    let q2 = dir.path().join("q2.txt");
    let q3 = dir.path().join("q3.txt");
    for (which, path) in [("Q2", &q2), ("Q3", &q3)] {
        assert!(caloop(&["export", "--p", "3", "--which", which, "--out", path.to_str().unwrap()]).status.success());
    }
    let (a, b) = (q2.to_str().unwrap(), q3.to_str().unwrap());
    assert_eq!(caloop(&["iso", "--a", a, "--b", a]).status.code(), Some(0));
    assert_eq!(caloop(&["iso", "--a", a, "--b", b]).status.code(), Some(1));
    assert_eq!(caloop(&["iso", "--a", a, "--b", "/nonexistent"]).status.code(), Some(2));
}

#[test]
fn export_rejects_o5_at_p2() {
    let o = caloop(&["export", "--p", "2", "--which", "Q5"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("O5 undefined for p=2"));
}
