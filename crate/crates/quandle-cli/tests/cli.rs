//! End-to-end tests of the `quandle` binary.

use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quandle"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

const ELLIPTIC12: &str = r#"{"base":"sphere","target":{"kind":"torus"},
  "cycles":[[1,0],[0,1],[1,0],[0,1],[1,0],[0,1],[1,0],[0,1],[1,0],[0,1],[1,0],[0,1]]}"#;

#[test]
fn torus_op_example() {
    let (code, out, _) = run(&["torus-op", "rt", "[1,0]", "[0,1]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[1,-1]");
    let (_, oracle, _) = run(&["torus-op", "oracle", "[1,0]", "[0,1]"]);
    assert_eq!(oracle.trim(), "[1,-1]");
    let (_, back, _) = run(&["torus-op", "lt", "[1,-1]", "[0,1]"]);
    assert_eq!(back.trim(), "[1,0]");
}

#[test]
fn axioms_pass_and_fail() {
    let (code, out, _) = run(&["axioms", "dihedral:3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "pass");

    // doctored table: R_3 with entry [0][1] overwritten to 0
    let doctored = r#"{"size":3,"rt":[[0,0,1],[2,1,0],[1,0,2]]}"#;
    let f = write_temp(doctored);
    let (code, out, _) = run(&["axioms", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("fail"));
    assert!(out.contains("violated") || out.contains("collides"));

    let (code, out, _) = run(&["--json", "axioms", "torus", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"pass\":true"));
    let (code, out, _) = run(&["axioms", "alternating:Z/5:2", "--samples", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "pass");
}

#[test]
fn exit_codes() {
    // input error: malformed slope
    let (code, _, err) = run(&["torus-op", "rt", "[0,0]", "[0,1]"]);
    assert_eq!(code, 2, "stderr: {err}");
    assert!(err.starts_with("error: input error:"));

    // domain error: sphere check over a disk base
    let f = write_temp(r#"{"base":"disk","target":{"kind":"torus"},"cycles":[[1,0]]}"#);
    let (code, _, err) = run(&["monodromy", "check", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: domain error:"));

    // resource error: hom-count cap exceeded
    let (code, _, err) = run(&["hom-count", "dihedral:5", "dihedral:5", "--cap", "2"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error: resource error:"));

    // unknown subcommand is rejected before any computation
    let (code, _, _) = run(&["frobnicate"]);
    assert_ne!(code, 0);
}

#[test]
fn hom_count_values() {
    let (code, out, _) = run(&["hom-count", "dihedral:3", "dihedral:3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "9");
    let (_, out, _) = run(&["--json", "hom-count", "trivial:1", "dihedral:5"]);
    assert!(out.contains("\"count\":5"));
    let (_, out, _) = run(&["--json", "hom-count", "dihedral:3", "trivial:1", "--list"]);
    assert!(out.contains("\"count\":1"));
    assert!(out.contains("\"maps\":[[0,0,0]]"));
}

#[test]
fn hq_and_reduce() {
    let (code, out, _) = run(&["reduce", r#"{"ring":"Z","genus":2,"coords":[-1,0,2,0]}"#]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"coords":[1,0,-2,0],"genus":2,"ring":"Z"}"#
    );
    let (_, out, _) = run(&["reduce", r#"{"ring":"Z/5","genus":1,"coords":[4,0]}"#]);
    assert_eq!(out.trim(), r#"{"coords":[1,0],"genus":1,"ring":"Z/5"}"#);
    let (_, out, _) = run(&[
        "hq-op",
        "rt",
        r#"{"ring":"Z","genus":1,"coords":[1,0]}"#,
        r#"{"ring":"Z","genus":1,"coords":[0,1]}"#,
    ]);
    assert_eq!(out.trim(), r#"{"coords":[1,1],"genus":1,"ring":"Z"}"#);
    // ring mismatch is an input error
    let (code, _, _) = run(&[
        "hq-op",
        "rt",
        r#"{"ring":"Z","genus":1,"coords":[1,0]}"#,
        r#"{"ring":"Z/5","genus":1,"coords":[0,1]}"#,
    ]);
    assert_eq!(code, 2);
}

#[test]
fn monodromy_check_and_move_roundtrip() {
    let f = write_temp(ELLIPTIC12);
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["monodromy", "check", path]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "pass");

    let (_, moved, _) = run(&["--json", "monodromy", "move", path, "--index", "3"]);
    let g = write_temp(moved.trim());
    let (_, back, _) = run(&[
        "--json",
        "monodromy",
        "move",
        g.path().to_str().unwrap(),
        "--index",
        "3",
        "--backward",
    ]);
    let (_, orig, _) = run(&["--json", "monodromy", "move", path, "--index", "0"]);
    let h = write_temp(orig.trim());
    let (_, orig_undone, _) = run(&[
        "--json",
        "monodromy",
        "move",
        h.path().to_str().unwrap(),
        "--index",
        "0",
        "--backward",
    ]);
    // forward then backward restores the datum, as re-emitted JSON
    assert_eq!(back.trim(), orig_undone.trim());
    // the moved tuple still passes the sphere check
    let (_, still, _) = run(&["monodromy", "check", g.path().to_str().unwrap()]);
    assert_eq!(still.trim(), "pass");
}

#[test]
fn monodromy_canonical_and_eval() {
    let f = write_temp(
        r#"{"base":"disk","target":{"kind":"finite","quandle":"genus2-17"},"cycles":[3,2]}"#,
    );
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["--json", "monodromy", "canonical", path]);
    assert_eq!(code, 0);
    let canon = out.trim().to_string();
    // a scrambled version of the same tuple canonicalizes identically
    let g = write_temp(
        r#"{"base":"disk","target":{"kind":"finite","quandle":"genus2-17"},"cycles":[2,7]}"#,
    );
    let (_, out2, _) = run(&["--json", "monodromy", "canonical", g.path().to_str().unwrap()]);
    assert_eq!(out2.trim(), canon);

    let (_, ev, _) = run(&["--json", "monodromy", "eval", path, "s0 ^ [g1+]"]);
    assert!(ev.contains("\"value\":"), "{ev}");
    let (code, _, err) = run(&["monodromy", "eval", path, "s5"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn qhomology_output() {
    let (code, out, _) = run(&["qhomology", "dihedral:3", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Z");
    let (_, out, _) = run(&["qhomology", "dihedral:3", "2"]);
    assert_eq!(out.trim(), "0");
    let (_, out, _) = run(&["--json", "qhomology", "dihedral:3", "3"]);
    assert_eq!(
        out.trim(),
        r#"{"complex":"quandle","degree":3,"display":"Z/3","free_rank":0,"torsion":[3]}"#
    );
}

#[test]
fn quotient_commands() {
    let (code, out, _) = run(&["quotient", "involutory", "dihedral:5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "size 5");
    let (_, out, _) = run(&["quotient", "involutory", "alexander:7:2"]);
    assert_eq!(out.trim(), "size 1");
    let (_, out, _) = run(&["quotient", "abelian", "alexander:7:2"]);
    assert_eq!(out.trim(), "size 7");
    let (_, out, _) = run(&["--json", "quotient", "pairs", "dihedral:3", "[[0,1]]"]);
    assert!(out.contains("\"size\":1"));
}

#[test]
fn json_roundtrip_quandle() {
    // a quandle emitted by the CLI is re-readable as input
    let (_, out, _) = run(&["--json", "quotient", "pairs", "dihedral:5", "[]"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let q = serde_json::to_string(&v["quandle"]).unwrap();
    let f = write_temp(&q);
    let (code, out, _) = run(&["axioms", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "pass");
}

#[test]
fn json_output_is_deterministic() {
    let f = write_temp(ELLIPTIC12);
    let path = f.path().to_str().unwrap();
    for args in [
        vec!["--json", "qhomology", "dihedral:3", "3"],
        vec!["--json", "monodromy", "invariants", path],
        vec!["--json", "hom-count", "dihedral:3", "dihedral:3", "--list"],
        vec!["--json", "axioms", "genus2-17"],
    ] {
        let first = run(&args);
        for _ in 0..4 {
            assert_eq!(run(&args), first, "args: {args:?}");
        }
        assert_eq!(first.0, 0);
        // exactly one line of valid JSON
        let line = first.1.trim();
        assert_eq!(first.1, format!("{line}\n"));
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}
