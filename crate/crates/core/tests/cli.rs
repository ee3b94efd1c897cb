//! The `fusionkit` binary: exit codes, JSON output and catalog round trips.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use fusionkit::catalog;

fn fusionkit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(args)
        .env_remove("FUSIONKIT_TOL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fusionkit");
    let mut pipe = child.stdin.take().unwrap();
    // Children that fail early never read their input.
    let _ = pipe.write_all(stdin.unwrap_or("").as_bytes());
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn emit(name: &str) -> String {
    let o = fusionkit(&["catalog", "emit", name], None);
    assert_eq!(
        code(&o),
        0,
        "emit {name}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

const INVALID: &str = r#"{"name":"bad","rank":2,"labels":["1","x"],"unit":0,"dual":[0,1],
"N":[[[1,0],[0,1]],[[0,1],[2,1]]]}"#;

#[test]
fn every_catalog_ring_survives_emit_then_suite() {
    for name in catalog::ring_names() {
        let json = emit(&name);
        let o = fusionkit(&["suite", "--json", "-"], Some(&json));
        let expected = if catalog::list()
            .iter()
            .any(|l| l.name == name && l.obstructed)
        {
            1
        } else {
            0
        };
        assert_eq!(code(&o), expected, "{name}: {}", stdout(&o));
        let report: serde_json::Value =
            serde_json::from_str(&stdout(&o)).expect("suite --json is JSON");
        let aggregate = report["aggregate"].as_str().unwrap();
        assert_eq!(
            aggregate == "fail",
            expected == 1,
            "{name}: aggregate {aggregate}"
        );
    }
}

#[test]
fn emitted_data_round_trips_through_each_verb() {
    for name in catalog::modular_names() {
        let o = fusionkit(&["modular", "-"], Some(&emit(&name)));
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
    for name in catalog::center_names() {
        let o = fusionkit(&["classeq", "--json", "-"], Some(&emit(&name)));
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
    for name in catalog::module_names() {
        let o = fusionkit(&["module", "-"], Some(&emit(&name)));
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
}

#[test]
fn validate_and_fpdim() {
    let fib = emit("fibonacci");
    let o = fusionkit(&["validate", "-"], Some(&fib));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("valid"));

    let o = fusionkit(&["fpdim", "-"], Some(&fib));
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("x^2 - x - 1"), "{text}");
    assert!(text.contains("1.61803398874989"), "{text}");

    let o = fusionkit(&["validate", "--json", "-"], Some(INVALID));
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let axioms: Vec<&str> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|x| x["axiom"].as_str())
        .collect();
    assert!(axioms.contains(&"duality"), "{axioms:?}");
}

#[test]
fn files_on_disk_are_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ising.json");
    std::fs::write(&path, emit("ising")).unwrap();
    let o = fusionkit(&["suite", "--prime", "2", path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("prime_square_test"));
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(
        code(&fusionkit(&["validate", "/definitely/not/here.json"], None)),
        2
    );
    assert_eq!(code(&fusionkit(&["validate", "-"], Some("{\"rank\":"))), 2);
    assert_eq!(code(&fusionkit(&["frobnicate"], None)), 2);
    assert_eq!(
        code(&fusionkit(
            &["suite", "--check", "no_such_check", "-"],
            None
        )),
        2
    );
    assert_eq!(
        code(&fusionkit(&["catalog", "emit", "no-such-entry"], None)),
        2
    );
    assert_eq!(
        code(&fusionkit(
            &["--tol", "0.5", "validate", "-"],
            Some(INVALID)
        )),
        2
    );

    let o = Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(["validate", "-"])
        .env("FUSIONKIT_TOL", "abc")
        .stdin(Stdio::null())
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn help_and_version_exit_zero() {
    let o = fusionkit(&["--help"], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("suite"));
    assert_eq!(code(&fusionkit(&["--version"], None)), 0);
}

#[test]
fn catalog_listing_is_json() {
    let o = fusionkit(&["catalog", "list", "--json"], None);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|e| e["name"].as_str())
        .collect();
    for want in [
        "fibonacci",
        "ising",
        "yang-lee",
        "rep_s3_double",
        "ising-pair",
    ] {
        assert!(names.contains(&want), "missing {want}");
    }
}
