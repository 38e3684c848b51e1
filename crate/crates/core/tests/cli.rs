use std::path::Path;

use syspres::cli::{run, EXIT_FAIL, EXIT_INVALID, EXIT_PASS};
use syspres::corpus::corpus_entry;
use syspres::ProductTable;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["syspres"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_corpus(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.txt"));
    std::fs::write(&path, corpus_entry(name).unwrap().item.to_text()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn f2xf2_fails_condition_five() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_corpus(dir.path(), "f2xf2");
    let (code, out, _) = invoke(&["check", &f, "--link-oracle", "--order-checker"]);
    assert_eq!(code, EXIT_FAIL, "{out}");
    assert!(out.contains("condition 5: FAIL"));
    assert!(out.contains("CONDITION_4=PASS"));
    assert!(out.contains("LINK_ORACLE=FAIL"));
}

#[test]
fn garside_emit_then_check_passes() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("g.txt");
    let f = f.to_str().unwrap();
    let (code, _, _) = invoke(&["garside", "2x3", "--emit", f]);
    assert_eq!(code, EXIT_PASS);
    let (code, out, _) = invoke(&["check", f, "--link-oracle", "--order-checker"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    let reparsed = ProductTable::parse(&std::fs::read_to_string(f).unwrap()).unwrap();
    assert_eq!(reparsed.len(), 5);
}

#[test]
fn garside_specs() {
    for spec in ["1x2;1x3", "3x3"] {
        let (code, out, _) = invoke(&["garside", spec, "--check", "--classify-roundtrip"]);
        assert_eq!(code, EXIT_PASS, "{spec}: {out}");
        assert!(out.contains("ROUNDTRIP=PASS"));
    }
    assert_eq!(invoke(&["garside", "0x2"]).0, EXIT_INVALID);
    assert_eq!(invoke(&["garside", "2x"]).0, EXIT_INVALID);
}

#[test]
fn invalid_tables() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.txt");
    std::fs::write(&f, "generators: a b\nproduct: a b = c\n").unwrap();
    let (code, _, err) = invoke(&["check", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("line 2"), "{err}");
    std::fs::write(&f, "generators: a b p c q\nproduct: a b = p\nproduct: p c = q\n").unwrap();
    let (code, _, err) = invoke(&["check", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("not restricted triangular"), "{err}");
    assert_eq!(invoke(&["check", "/nonexistent/table.txt"]).0, EXIT_INVALID);
}

#[test]
fn artin_commands() {
    let dir = tempfile::tempdir().unwrap();
    let edge = dir.path().join("edge.txt");
    std::fs::write(&edge, "vertex: v w\nedge: v w label=4 orient=w\n").unwrap();
    let dual = dir.path().join("dual.txt");
    let (code, out, _) = invoke(&[
        "artin",
        edge.to_str().unwrap(),
        "--check",
        "--emit-dual",
        dual.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_PASS, "{out}");
    let emitted = ProductTable::parse(&std::fs::read_to_string(&dual).unwrap()).unwrap();
    let garside = syspres::garside::garside_table(&"4x2".parse().unwrap());
    assert!(syspres::table::find_isomorphism(&emitted, &garside).is_some());

    let f = write_corpus(dir.path(), "artin-triangle");
    assert_eq!(invoke(&["artin", &f, "--check"]).0, EXIT_PASS);
    let f = write_corpus(dir.path(), "artin-undirected-triangle");
    let (code, _, err) = invoke(&["artin", &f]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("3-cycle"));
    let f = write_corpus(dir.path(), "artin-misdirected");
    let (_, out, _) = invoke(&["artin", &f, "--check"]);
    assert!(out.contains("warning: misdirected 4-cycle"), "{out}");
}

#[test]
fn classify_command() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("g.txt");
    invoke(&["garside", "1x2;1x3;1x4", "--emit", f.to_str().unwrap()]);
    let (code, out, _) = invoke(&["classify", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("spec: 1x2;1x3;1x4"), "{out}");
    let f = write_corpus(dir.path(), "shared-divisor");
    let (code, out, _) = invoke(&["classify", &f]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("not systolic Garside"));
}

#[test]
fn counterexamples_and_corpus() {
    let (code, out, _) = invoke(&["counterexamples", "--verify"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    for i in 1..=5 {
        assert!(out.contains(&format!("R{i}=PASS")));
    }
    let (code, out, _) = invoke(&["counterexamples", "--verify", "--index", "3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("fails condition 3") && !out.contains("R1"));
    assert_eq!(invoke(&["counterexamples", "--index", "6"]).0, EXIT_INVALID);
    let (code, out, _) = invoke(&["corpus", "list"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("garside-2x3;3x2"));
    assert_eq!(invoke(&["corpus", "show", "nope"]).0, EXIT_INVALID);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_corpus(dir.path(), "free-r3");
    let a = invoke(&["check", &f, "--witnesses", "--link-oracle", "--order-checker"]);
    let b = invoke(&[
        "check",
        &f,
        "--witnesses",
        "--link-oracle",
        "--order-checker",
        "--jobs",
        "4",
    ]);
    assert_eq!(a, b);
    assert_eq!(a.0, EXIT_FAIL);
}

#[test]
fn link_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_corpus(dir.path(), "garside-2x2");
    let link = dir.path().join("l.txt");
    let dot = dir.path().join("l.dot");
    let (code, _, _) = invoke(&[
        "check",
        &f,
        "--emit-link",
        link.to_str().unwrap(),
        "--emit-dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_PASS);
    let text = std::fs::read_to_string(link).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("edge:")).count(), 6);
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("digraph"));
}
