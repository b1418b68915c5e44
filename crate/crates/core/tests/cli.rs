mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ramiq::io::{example, JsonReport, CORPUS};
use ramiq::chi_g;

use common::temp_path;

fn ramiq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramiq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn shipped(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(format!("{name}.json"))
}

struct TempFile(PathBuf);

impl TempFile {
    fn new(tag: &str, contents: &str) -> Self {
        let path = temp_path(tag);
        std::fs::write(&path, contents).unwrap();
        TempFile(path)
    }

    fn arg(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

#[test]
fn compute_antipode() {
    let o = ramiq(&["compute", shipped("p1_antipode").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("multiplicities: trivial: 1, sign: 0"), "{}", stdout(&o));
}

#[test]
fn trace_table_for_genus_two() {
    let o = ramiq(&["compute", shipped("genus2_hyperelliptic").to_str().unwrap(), "--trace-check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("class 1 (g = 1): trace -3 | fixed points -3 | ok"), "{out}");
    assert!(!out.contains("MISMATCH") && !out.contains("NON-INTEGRAL"));
}

#[test]
fn non_closed_stabilizer_exits_one() {
    let source = example_text("p1_antipode").replace("\"n\": 2", "\"n\": 3");
    let f = TempFile::new("nonclosed", &source);
    let o = ramiq(&["compute", f.arg()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("not a group"), "{err}");
    // anchored at the first stratum's id line
    assert!(err.contains(&format!("{}:7:", f.arg())), "{err}");
}

#[test]
fn unknown_keys_are_reported_with_a_line() {
    let source = example_text("p1_antipode").replace("\"rank\": 1, \"degree\": 0}", "\"rank\": 1, \"degree\": 0, \"extra\": 1}");
    let f = TempFile::new("unknown", &source);
    let o = ramiq(&["check", f.arg()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(&format!("{}:4:", f.arg())), "{}", stderr(&o));
}

#[test]
fn check_accepts_the_corpus() {
    for (name, _) in CORPUS {
        let o = ramiq(&["check", shipped(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
    }
}

#[test]
fn check_rejects_a_non_orthogonal_table() {
    let source = example_text("s3_projective_line").replace("{\"0\": 1, \"1\": 1, \"3\": -1}", "{\"0\": 1, \"1\": 1, \"3\": 1}");
    let f = TempFile::new("table", &source);
    let o = ramiq(&["check", f.arg()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("invalid character table"), "{}", stderr(&o));
}

#[test]
fn check_rejects_a_trivial_normal_character() {
    let source = example_text("p1_antipode").replacen("\"1\": [2, 1]}, \"multiplicity\"", "\"1\": [1, 0]}, \"multiplicity\"", 1);
    let f = TempFile::new("trivial-normal", &source);
    let o = ramiq(&["check", f.arg()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("invalid stratum P0"), "{}", stderr(&o));
}

#[test]
fn missing_files_exit_one() {
    let o = ramiq(&["compute", "/nonexistent/scenario.json"]);
    assert_eq!(o.status.code(), Some(1));
}

fn example_text(name: &str) -> String {
    let o = ramiq(&["example", name]);
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

#[test]
fn examples_round_trip_through_compute() {
    for (name, _) in CORPUS {
        let f = TempFile::new(name, &example_text(name));
        let o = ramiq(&["compute", f.arg(), "--closed-form-compare", "--trace-check"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert!(!stdout(&o).contains("NONZERO"));
    }
}

#[test]
fn unknown_example_lists_names() {
    let o = ramiq(&["example", "k3_surface"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    for (name, _) in CORPUS {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn json_output_reparses_to_the_same_multiplicities() {
    for (name, _) in CORPUS {
        let o = ramiq(&["compute", shipped(name).to_str().unwrap(), "--format", "json", "--closed-form-compare"]);
        assert_eq!(o.status.code(), Some(0));
        let parsed: JsonReport = serde_json::from_str(&stdout(&o)).unwrap();
        let report = chi_g(&example(name).unwrap()).unwrap();
        let ms: Vec<_> = parsed.multiplicities().unwrap().into_iter().map(|(_, m)| m).collect();
        assert_eq!(ms, report.multiplicities, "{name}");
        assert_eq!(parsed.chi_g, report.chi_g.values(), "{name}");
        assert!(parsed.closed_form_deltas.unwrap().iter().all(|d| d.zero));
    }
}

#[test]
fn deleted_stratum_exits_two_and_names_the_class() {
    let mut doc: serde_json::Value = serde_json::from_str(&example_text("genus2_hyperelliptic")).unwrap();
    doc["strata"].as_array_mut().unwrap().pop();
    let f = TempFile::new("deleted", &doc.to_string());
    let o = ramiq(&["compute", f.arg(), "--trace-check"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("trace -5/2 | fixed points -5/2 | NON-INTEGRAL"), "{}", stdout(&o));
    assert!(stderr(&o).contains("conjugacy classes [1]"), "{}", stderr(&o));
}
