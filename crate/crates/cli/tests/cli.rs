use std::process::Command;

use paradef::{matrix_consequence, parse_sequent, LogicId};
use paradef_cli::{run_args, EXIT_INVALID, EXIT_RESOURCE, EXIT_USAGE, EXIT_VALID};

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

fn run_with_input(args: &[&str], input: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("paradef").chain(args.iter().copied());
    let code = run_args(argv, &mut input.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Output {
    run_with_input(args, "")
}

#[test]
fn check_explosion() {
    let bdl = run(&["check", "--logic", "bdl", "--witness", "p, ~p |- q"]);
    assert_eq!(bdl.code, EXIT_INVALID);
    assert!(bdl.stdout.starts_with("INVALID\n"));
    assert!(bdl.stdout.contains("countermodel: p=b, q=n"));

    let cl = run(&["check", "--logic", "cl", "p, ~p |- q"]);
    assert_eq!(cl.code, EXIT_VALID);
    assert_eq!(cl.stdout, "VALID\n");
}

#[test]
fn witness_for_valid_sequent_is_a_proof() {
    let o = run(&["check", "--logic", "bdl", "--witness", "p & q |- p"]);
    assert_eq!(o.code, EXIT_VALID);
    assert_eq!(
        o.stdout,
        "VALID\np & q |- p    by L& on p & q\n  p, q |- p    closed: overlap on p\n"
    );
}

#[test]
fn json_carries_the_same_verdicts() {
    for logic in ["cl", "lp", "k3", "bdl"] {
        for s in [
            "p, ~p |- q",
            "|- p | ~p",
            "p -> q, p |- q",
            "~(p -> q) |- p & ~q",
        ] {
            let text = run(&["check", "--logic", logic, s]);
            let json = run(&[
                "--format",
                "json",
                "check",
                "--logic",
                logic,
                "--witness",
                s,
            ]);
            assert_eq!(text.code, json.code, "{logic} {s}");
            let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
            assert_eq!(v["valid"], text.stdout == "VALID\n");
            assert_eq!(v["valid"].as_bool().unwrap(), v.get("proof").is_some());
            assert_eq!(v["sequent"], parse_sequent(s).unwrap().to_string());
        }
    }
}

#[test]
fn classify_table() {
    let o = run(&["classify", "|- p | ~p"]);
    assert_eq!(o.code, EXIT_VALID);
    assert_eq!(o.stdout, "CL   ✓\nLP   ✓\nK3   ✗\nBDL  ✗\n");
    let j = run(&["--format", "json", "classify", "p, ~p |- q"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["valid"]["CL"], true);
    assert_eq!(v["valid"]["K3"], true);
    assert_eq!(v["valid"]["LP"], false);
    assert_eq!(v["valid"]["BDL"], false);
}

#[test]
fn truth_table() {
    let o = run(&["table", "--logic", "lp", "p & ~p"]);
    assert_eq!(o.code, EXIT_VALID);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(
        lines[3].starts_with("b ") && lines[3].ends_with('*'),
        "{}",
        o.stdout
    );
    let j = run(&["--format", "json", "table", "--logic", "bdl", "p"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn embed_prints_translation_and_verdicts() {
    let o = run(&["embed", "|- p | ~p"]);
    assert_eq!(o.code, EXIT_VALID);
    assert_eq!(
        o.stdout,
        "translation: |- p | p_neg\nBDL: INVALID\nCL:  INVALID\n"
    );
    let bad = run(&["embed", "p_neg |- p"]);
    assert_eq!(bad.code, EXIT_USAGE);
    assert!(bad.stderr.contains("p_neg"));
}

#[test]
fn diff_only_emits_separating_sequents() {
    let o = run(&[
        "--format",
        "json",
        "diff",
        "--atoms",
        "1",
        "--depth",
        "1",
        "--per-side",
        "2",
    ]);
    assert_eq!(o.code, EXIT_VALID, "{}", o.stderr);
    let mut count = 0;
    for line in o.stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let s = parse_sequent(v["sequent"].as_str().unwrap()).unwrap();
        assert!(matrix_consequence(LogicId::Cl, &s).unwrap());
        assert!(!matrix_consequence(LogicId::Bdl, &s).unwrap());
        count += 1;
    }
    assert!(count > 0);

    let text = run(&[
        "diff", "--from", "k3", "--to", "bdl", "--atoms", "1", "--depth", "1",
    ]);
    assert_eq!(text.code, EXIT_VALID);
    assert!(text
        .stdout
        .lines()
        .last()
        .unwrap()
        .contains("valid in K3 and invalid in BDL"));
}

#[test]
fn selftest_counts() {
    let o = run(&[
        "selftest",
        "--atoms",
        "1",
        "--depth",
        "1",
        "--per-side",
        "1",
    ]);
    assert_eq!(o.code, EXIT_VALID);
    assert!(o.stdout.contains("sequents: 289"));
    assert!(o.stdout.ends_with("PASS\n"));

    let sampled = run(&[
        "--seed", "7", "--format", "json", "selftest", "--depth", "2", "--sample", "200",
    ]);
    assert_eq!(sampled.code, EXIT_VALID);
    let v: serde_json::Value = serde_json::from_str(&sampled.stdout).unwrap();
    assert_eq!(v["sequents"], 200);
    let again = run(&[
        "--seed", "7", "--format", "json", "selftest", "--depth", "2", "--sample", "200",
    ]);
    assert_eq!(again.stdout, sampled.stdout);
}

#[test]
fn errors_map_to_exit_codes() {
    let parse = run(&["check", "--logic", "cl", "p & |- q"]);
    assert_eq!(parse.code, EXIT_USAGE);
    assert!(parse.stderr.contains("byte 4"), "{}", parse.stderr);

    assert_eq!(run(&["check", "--logic", "xx", "p |- p"]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);

    let wide = run(&["--max-atoms", "2", "table", "--logic", "cl", "p & q & r"]);
    assert_eq!(wide.code, EXIT_RESOURCE);
    assert!(wide.stderr.contains('3'));

    let big = run(&[
        "selftest",
        "--atoms",
        "2",
        "--depth",
        "2",
        "--per-side",
        "2",
    ]);
    assert_eq!(big.code, EXIT_RESOURCE);
    assert!(big.stderr.contains("cap"));

    assert_eq!(
        run(&["--max-atoms", "1", "diff", "--atoms", "2"]).code,
        EXIT_RESOURCE
    );
}

#[test]
fn sequent_from_stdin() {
    let o = run_with_input(&["check", "--logic", "lp", "-"], "|- p | ~p\n");
    assert_eq!(o.code, EXIT_VALID);
}

#[test]
fn binary_exit_codes_and_env_cap() {
    let bin = env!("CARGO_BIN_EXE_paradef");
    let out = Command::new(bin)
        .args(["check", "--logic", "bdl", "--witness", "p, ~p |- q"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("p=b, q=n"));

    let out = Command::new(bin)
        .args(["table", "--logic", "cl", "p | q"])
        .env("PARADEF_MAX_ATOMS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

struct ClosedAfter(usize);

impl std::io::Write for ClosedAfter {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        if self.0 == 0 {
            return Err(std::io::ErrorKind::BrokenPipe.into());
        }
        self.0 -= 1;
        Ok(buf.len())
    }

    fn flush(&mut self) -> std::io::Result<()> {
        Ok(())
    }
}

#[test]
fn closed_stdout_ends_quietly() {
    let mut err = Vec::new();
    let argv = ["paradef", "diff", "--from", "cl", "--to", "bdl"];
    let code = run_args(argv, &mut "".as_bytes(), &mut ClosedAfter(3), &mut err);
    assert_eq!(code, EXIT_VALID);
    assert!(err.is_empty());
}
