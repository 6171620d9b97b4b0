//! End-to-end checks of the binary: exit codes, witnesses, piping, and the
//! round-trip guarantee on emitted tables.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_permsg"))
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("permsg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const CHAIN3: &str = "# three-element chain semilattice\n3\n0 0 0\n0 1 1\n0 1 2\n";
const Z2: &str = "2\n0 1\n1 0\n";

#[test]
fn permutable_reports_the_chain_witness_and_exit_one() {
    let path = fixture("chain3.sgp", CHAIN3);
    let out = run(&["permutable", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("permutable: no"));
    assert!(text.contains("pair (2, 0)"), "unexpected output: {text}");
}

#[test]
fn classify_cyclic_nilpotent_exits_zero() {
    let out = run_with_stdin(
        &["classify", "-"],
        b"4\n1 2 3 3\n2 3 3 3\n3 3 3 3\n3 3 3 3\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ArchCyclicNilpotent"));
}

#[test]
fn construct1_pipes_into_permutable() {
    let z2 = fixture("z2.sgp", Z2);
    let built = run(&[
        "construct1",
        "--group",
        z2.to_str().unwrap(),
        "--subgroup",
        "0",
    ]);
    assert_eq!(built.status.code(), Some(0));
    let checked = run_with_stdin(&["permutable", "-"], &built.stdout);
    assert_eq!(checked.status.code(), Some(0));
    assert!(stdout(&checked).contains("permutable: yes"));
}

#[test]
fn check_distinguishes_failure_kinds() {
    let ok = run_with_stdin(&["check", "-"], Z2.as_bytes());
    assert_eq!(ok.status.code(), Some(0));

    let non_associative = run_with_stdin(&["check", "-"], b"2\n1 0\n0 0\n");
    assert_eq!(non_associative.status.code(), Some(1));
    assert!(stdout(&non_associative).contains("not associative"));

    let garbage = run_with_stdin(&["check", "-"], b"2\n0 1\n");
    assert_eq!(garbage.status.code(), Some(2));

    let missing = run(&["check", "/no/such/file.sgp"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn emitted_tables_reparse_equal() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["cyclic-nilpotent", "--order", "5"],
        vec!["group-zero", "--group", "Z2PATH"],
        vec![
            "rees", "--group", "Z2PATH", "--I", "2", "--J", "2", "--P", "0", "0", "0", "1",
        ],
    ];
    let z2 = fixture("z2.sgp", Z2);
    for args in commands {
        let args: Vec<&str> = args
            .iter()
            .map(|a| {
                if *a == "Z2PATH" {
                    z2.to_str().unwrap()
                } else {
                    *a
                }
            })
            .collect();
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let emitted = stdout(&out);
        let parsed = permsg::sgp::parse_text(&emitted).unwrap();
        let again = permsg::sgp::parse_text(&permsg::sgp::format_text(&parsed)).unwrap();
        assert_eq!(parsed, again);
        // and the emitted table is accepted by `check`
        let checked = run_with_stdin(&["check", "-"], emitted.as_bytes());
        assert_eq!(checked.status.code(), Some(0));
    }
}

#[test]
fn rees_decompose_round_trip_via_pipe() {
    let z2 = fixture("z2.sgp", Z2);
    let built = run(&[
        "rees",
        "--group",
        z2.to_str().unwrap(),
        "--I",
        "2",
        "--J",
        "2",
        "--P",
        "0",
        "1",
        "1",
        "1",
    ]);
    let decomposed = run_with_stdin(&["--json", "rees-decompose", "-"], &built.stdout);
    assert_eq!(decomposed.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&decomposed)).unwrap();
    assert_eq!(v["i_size"], 2);
    assert_eq!(v["j_size"], 2);

    let not_simple = run_with_stdin(&["rees-decompose", "-"], CHAIN3.as_bytes());
    assert_eq!(not_simple.status.code(), Some(1));
}

#[test]
fn theorem_checks_exit_on_agreement() {
    let z2 = fixture("z2.sgp", Z2);
    let built = run(&[
        "construct1",
        "--group",
        z2.to_str().unwrap(),
        "--subgroup",
        "0",
    ]);
    let t2 = run_with_stdin(&["theorem2", "-"], &built.stdout);
    assert_eq!(t2.status.code(), Some(0));
    assert!(stdout(&t2).contains("agreement: yes"));

    // wrong shape is an input error
    let mismatch = run_with_stdin(&["theorem2", "-"], CHAIN3.as_bytes());
    assert_eq!(mismatch.status.code(), Some(2));

    let gz = run(&["group-zero", "--group", z2.to_str().unwrap()]);
    let t3 = run_with_stdin(&["theorem3", "-"], &gz.stdout);
    assert_eq!(t3.status.code(), Some(0));
}

#[test]
fn gset_command_reports_orbits_and_stabilizer() {
    let z2 = fixture("z2.sgp", Z2);
    let action = fixture("regular.gst", "2 2\n0 1\n1 0\n");
    let out = run(&[
        "gset",
        "--group",
        z2.to_str().unwrap(),
        action.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("transitive: yes"));
    assert!(text.contains("congruences: 2"));
}

#[test]
fn enumerate_counts_and_verifies() {
    let out = run(&["enumerate", "--order", "3", "--verify", "lemma2,lemma8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("113 tables"));
    assert!(text.contains("check lemma2: 0 failures / 113 checked"));

    let unknown = run(&["enumerate", "--order", "2", "--verify", "lemma99"]);
    assert_eq!(unknown.status.code(), Some(2));

    let capped = run(&["enumerate", "--order", "9"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn json_output_is_structured() {
    let path = fixture("chain3.sgp", CHAIN3);
    let out = run(&["--json", "permutable", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["permutable"], false);
    assert_eq!(v["lattice_size"], 4);
    assert_eq!(v["witness"]["pair"], serde_json::json!([2, 0]));

    let json_input = run_with_stdin(
        &["--json", "check", "-"],
        br#"{"order": 2, "table": [[0, 1], [1, 0]]}"#,
    );
    assert_eq!(json_input.status.code(), Some(0));
}

#[test]
fn structure_report_commands_smoke() {
    let out = run_with_stdin(&["green", "-"], CHAIN3.as_bytes());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("H:"));

    let out = run_with_stdin(&["ideals", "-"], CHAIN3.as_bytes());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("chain: yes"));

    let out = run_with_stdin(&["kernel", "-"], CHAIN3.as_bytes());
    assert!(stdout(&out).contains("kernel: {0}"));

    // a chain is a semilattice of singletons, all archimedean
    let out = run_with_stdin(&["decompose", "-"], CHAIN3.as_bytes());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all archimedean: yes"));

    let out = run_with_stdin(&["congruences", "-"], CHAIN3.as_bytes());
    assert!(stdout(&out).contains("congruences: 4"));

    let out = run(&["enumerate", "--list-checks"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lemma2:"));

    let out = run(&["cyclic-nilpotent", "--order", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_subgroup_is_a_usage_error() {
    let z2 = fixture("z2.sgp", Z2);
    let out = run(&[
        "construct1",
        "--group",
        z2.to_str().unwrap(),
        "--subgroup",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
