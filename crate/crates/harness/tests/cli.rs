use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gpc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpc")).args(args).output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gpc-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, file: &str, text: &str) -> String {
    let path = dir.join(file);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

const CYCLE4: &str = "vertices: 1 2 3 4\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 4\narrow a4: 4 -> 1\nrelations: a4*a1, a1*a2, a2*a3, a3*a4\n";

#[test]
fn example_report_passes_and_is_json() {
    let out = gpc(&["example25", "--n", "5", "--t", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["modules"].as_array().unwrap().len(), 5);
    assert_eq!(v["theorems"]["simples_first_nonzero_self_ext"]["verdict"], "pass");
    assert_eq!(v["algebra"]["dim"], 10);
    assert_eq!(v["timing"], serde_json::json!({}));
    let s1 = &v["modules"][0];
    assert_eq!(s1["self_orthogonality"]["verdict"], "nonzero");
    assert_eq!(s1["self_orthogonality"]["degree"], 5);
    assert_eq!(s1["gorenstein_projective"]["module"]["repeat"], serde_json::json!([0, 5]));
}

#[test]
fn example_default_t_and_preconditions() {
    assert_eq!(gpc(&["example25", "--n", "6"]).status.code(), Some(0));
    let bad = gpc(&["example25", "--n", "4", "--t", "3"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("precondition"));
    assert_eq!(gpc(&["example25", "--n", "2"]).status.code(), Some(3));
}

#[test]
fn timing_only_on_request() {
    let out = gpc(&["example25", "--n", "4", "--json", "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["timing"].as_object().unwrap().contains_key("simples"));
}

#[test]
fn single_module_commands() {
    let dir = scratch("single");
    let alg = write(&dir, "c4.alg", CYCLE4);
    let s1 = write(&dir, "s1.mod", "module over c4.alg\ndims: 1 0 0 0\n");
    let p1 = write(&dir, "p1.mod", "module over c4.alg\ndims: 1 1 0 0\narrow a1: [[1]]\n");

    let out = gpc(&["ext", &alg, &p1, &s1, "--upto", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "Ext^1: 0\nExt^2: 0\nExt^3: 0\nExt^4: 0\n");

    let out = gpc(&["ext", &alg, &s1, &s1, "--upto", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["modules"][0]["extra"]["ext_dims"], serde_json::json!([0, 0, 0, 1]));

    let out = gpc(&["gp", &alg, &s1, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["modules"][0]["gorenstein_projective"]["verdict"], "certified");

    let out = gpc(&["selforth", &alg, &s1, "--bound", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("unknown beyond 3"));
    let out = gpc(&["selforth", &alg, &s1]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("nonzero at 4"));

    let out = gpc(&["resolve", &alg, &s1, "--length", "3"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("P_0 = P(1)"));
    assert!(text.contains("exact and minimal: true"));

    let out = gpc(&["transpose", &alg, &s1]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("dims: 0 1 0 0"));
    let out = gpc(&["star", &alg, &p1]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("dims: 1 0 0 1"));

    let out = gpc(&["build", &alg]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("dim 8"));
    assert!(text.contains("self-injective: true"));
}

#[test]
fn sweeps_exit_codes() {
    let dir = scratch("sweeps");
    let alg = write(&dir, "c4.alg", CYCLE4);
    for cmd in ["gpc-check", "symmetry", "prop34", "prop37"] {
        let out = gpc(&[cmd, &alg]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
    }
    let kronecker = write(&dir, "kr.alg", "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
    let out = gpc(&["gpc-check", &kronecker]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Nakayama"));
}

#[test]
fn char_flag_overrides_file() {
    let dir = scratch("char");
    let alg = write(&dir, "c4.alg", &format!("{CYCLE4}char: 5\n"));
    let v: serde_json::Value = serde_json::from_slice(&gpc(&["build", &alg, "--json"]).stdout).unwrap();
    assert_eq!(v["algebra"]["characteristic"], 5);
    let v: serde_json::Value =
        serde_json::from_slice(&gpc(&["build", &alg, "--json", "--char", "3"]).stdout).unwrap();
    assert_eq!(v["algebra"]["characteristic"], 3);
    assert_eq!(gpc(&["build", &alg, "--char", "4"]).status.code(), Some(3));
}

#[test]
fn input_errors_exit_three() {
    let dir = scratch("errors");
    let bad = write(&dir, "bad.alg", "vertices: 1 2\narrow a: 1 -> 3\n");
    assert_eq!(gpc(&["build", &bad]).status.code(), Some(3));
    let loop_alg = write(&dir, "loop.alg", "vertices: 1\narrow x: 1 -> 1\n");
    let out = gpc(&["build", &loop_alg]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("admissible"));
    let parse = write(&dir, "parse.alg", "vertices: 1 2\narrow a: 1 -> 2\nrelations: a*q\n");
    let out = gpc(&["build", &parse]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 14"));
    assert_eq!(gpc(&["build", "/nonexistent/x.alg"]).status.code(), Some(3));
    assert_eq!(gpc(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(gpc(&["--help"]).status.code(), Some(0));
}

#[test]
fn fuzz_is_deterministic() {
    let a = gpc(&["fuzz", "--seed", "3", "--count", "20", "--max-vertices", "5", "--json"]);
    let b = gpc(&["fuzz", "--seed", "3", "--count", "20", "--max-vertices", "5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["theorems"]["gorenstein_projective_conjecture"]["summary"]["violations"], 0);
    assert_eq!(v["algebra"]["parameters"]["seed"], 3);
}

#[test]
fn fuzz_out_dir_and_replay() {
    let dir = scratch("fuzz");
    let out_dir = dir.join("violations");
    let out = gpc(&["fuzz", "--seed", "1", "--count", "5", "--out-dir", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out_dir.is_dir());
    assert_eq!(std::fs::read_dir(&out_dir).unwrap().count(), 0);

    for f in gorenstein_harness::fuzz::generate(1, 5, 6, 2).unwrap() {
        let text = gorenstein_core::format::write_algebra(&f.algebra);
        let alg = write(&dir, &f.file_name(1), &text);
        let v: serde_json::Value = serde_json::from_slice(&gpc(&["gpc-check", &alg, "--json"]).stdout).unwrap();
        assert_eq!(v["theorems"]["gorenstein_projective_conjecture"]["verdict"], "pass");
        assert_eq!(v["algebra"]["dim"], f.algebra.dim());
    }
}
