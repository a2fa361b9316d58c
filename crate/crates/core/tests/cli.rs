//! End-to-end tests of the `auslab` binary: the exact command surface, the
//! exit-code contract, and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_auslab"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("auslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const F2: &str = "p 2\ndim 1\nunit 1\nmult 0 0 1\n";

#[test]
fn validate_exit_codes() {
    let good = write_temp("good.alg", F2);
    let out = run(&["validate", good.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    // deliberately non-associative: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
    let bad = write_temp(
        "bad.alg",
        "p 2\ndim 3\nunit 1 0 0\n\
         mult 0 0 1 0 0\nmult 0 1 0 1 0\nmult 0 2 0 0 1\n\
         mult 1 0 0 1 0\nmult 2 0 0 0 1\n\
         mult 1 1 0 0 1\nmult 2 1 0 1 0\n",
    );
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("associativity"),
        "diagnostic names the axiom: {stderr}"
    );

    // parse error: missing unit line
    let missing = write_temp("missing.alg", "p 2\ndim 1\nmult 0 0 1\n");
    let out = run(&["validate", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    // nonexistent file
    let out = run(&["validate", "/nonexistent/file.alg"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn analyze_output_rows() {
    let f2 = write_temp("f2.alg", F2);
    let out = run(&["analyze", f2.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout, "0\t0\t1\n1\t-inf\t0\n2\t-inf\t0\n");
}

#[test]
fn analyze_strict_censoring() {
    // the local algebra with square-zero radical censors at any cap
    let lrsz = "p 2\ndim 3\nunit 1 0 0\nmult 0 0 1 0 0\nmult 0 1 0 1 0\nmult 0 2 0 0 1\nmult 1 0 0 1 0\nmult 2 0 0 0 1\n";
    let path = write_temp("lrsz.alg", lrsz);
    let out = run(&[
        "analyze",
        path.to_str().unwrap(),
        "--max-degree",
        "0",
        "--cap",
        "4",
        "--strict",
    ]);
    assert_eq!(code(&out), 3);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains(">=4"));
}

#[test]
fn tri_roundtrip_and_analyze() {
    let f2 = write_temp("f2b.alg", F2);
    let t2 = write_temp("t2.alg", "");
    let out = run(&[
        "tri",
        f2.to_str().unwrap(),
        "--t",
        "2",
        "-o",
        t2.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    // the written file loads, validates, and re-serializes identically
    let text = std::fs::read_to_string(&t2).unwrap();
    let out = run(&["validate", t2.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let t2again = write_temp("t2again.alg", "");
    let out = run(&[
        "tri",
        f2.to_str().unwrap(),
        "--t",
        "2",
        "-o",
        t2again.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&t2again).unwrap(), text);
    // t = 3 on a 2-dimensional input has dimension 12
    let dual = write_temp(
        "dual.alg",
        "p 2\ndim 2\nunit 1 0\nmult 0 0 1 0\nmult 0 1 0 1\nmult 1 0 0 1\n",
    );
    let t3 = write_temp("t3.alg", "");
    let out = run(&[
        "tri",
        dual.to_str().unwrap(),
        "--t",
        "3",
        "-o",
        t3.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(std::fs::read_to_string(&t3).unwrap().contains("dim 12"));
    // analyze the generated T_2(F_2)
    let out = run(&["analyze", t2.to_str().unwrap(), "--max-degree", "2"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout, "0\t0\t4\n1\t1\t1\n2\t-inf\t0\n");
}

#[test]
fn check_exit_codes() {
    let f2 = write_temp("f2c.alg", F2);
    let t2 = write_temp("t2c.alg", "");
    run(&[
        "tri",
        f2.to_str().unwrap(),
        "--t",
        "2",
        "-o",
        t2.to_str().unwrap(),
    ]);
    let t2 = t2.to_str().unwrap();

    let out = run(&["check", t2, "gnk", "--n", "2", "--k", "0"]);
    assert_eq!(code(&out), 0);
    let out = run(&["check", t2, "lnop", "--l", "1", "--n", "2"]);
    assert_eq!(code(&out), 1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("violated_index\t1"));
    let out = run(&["check", t2, "dominant", "--max", "2"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("dominant\t0,1"));
    // bad input
    let out = run(&["check", t2, "gnk", "--n", "2"]);
    assert_eq!(code(&out), 2);
    let out = run(&["check", t2, "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_exit_codes() {
    let f2 = write_temp("f2d.alg", F2);
    let f2 = f2.to_str().unwrap();
    let out = run(&["verify", f2, "thm36", "--t", "2", "--max-degree", "3"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict\tverified"));
    let out = run(&["verify", f2, "thm37", "--n", "2", "--k", "0", "--t", "3"]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", f2, "cor38", "--l", "1", "--n", "2", "--t", "2"]);
    assert_eq!(code(&out), 0);

    // dual numbers with thm37 per the documented examples
    let dual = write_temp(
        "duald.alg",
        "p 2\ndim 2\nunit 1 0\nmult 0 0 1 0\nmult 0 1 0 1\nmult 1 0 0 1\n",
    );
    let out = run(&[
        "verify",
        dual.to_str().unwrap(),
        "thm37",
        "--n",
        "2",
        "--k",
        "0",
        "--t",
        "3",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_reports_are_deterministic() {
    let f2 = write_temp("f2e.alg", F2);
    let f2 = f2.to_str().unwrap();
    let a = run(&["verify", f2, "thm36", "--t", "2", "--max-degree", "2"]);
    let b = run(&["verify", f2, "thm36", "--t", "2", "--max-degree", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corpus_filter_and_parallel_determinism() {
    let out = run(&["corpus", "run", "--filter", "f*"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("f2\tpass"));
    assert!(!stdout.contains("t2-f2"));

    let serial = run(&["corpus", "run", "--filter", "trunc*", "--jobs", "1"]);
    let parallel = run(&["corpus", "run", "--filter", "trunc*", "--jobs", "4"]);
    let strip = |o: &Output| {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&serial), strip(&parallel));
    assert_eq!(code(&serial), 0);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["corpus", "walk"])), 2);
    assert_eq!(code(&run(&["analyze"])), 2);
}
