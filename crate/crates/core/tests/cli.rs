use std::io::Write;
use std::process::Command;

use spfd::cli::run;
use spfd::fixtures;
use spfd::io::{emit_edge_list, parse_edge_list};
use tempfile::NamedTempFile;

fn spfd(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spfd").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn input(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const GRID: &str = "strong(path(3), path(3))";

#[test]
fn factor_grid() {
    let (code, text, _) = spfd(&["generate", GRID]);
    assert_eq!(code, 0);
    let f = input(&text);
    for cmd in ["factor", "factor-local"] {
        let (code, out, err) = spfd(&[cmd, "--in", path(&f)]);
        assert_eq!(code, 0, "{cmd}: {err}");
        assert!(
            out.starts_with("9 vertices, 20 edges, 2 prime factors"),
            "{out}"
        );
    }
    let (code, out, _) = spfd(&["factor", "--in", path(&f), "--json"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["factors"].as_array().unwrap().len(), 2);
    assert_eq!(json["prime"], false);
}

#[test]
fn dot_output_colors_two_factors() {
    let (_, text, _) = spfd(&["generate", GRID]);
    let f = input(&text);
    let (code, out, _) = spfd(&[
        "factor-local",
        "--in",
        path(&f),
        "--out",
        "dot",
        "--seed",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("graph"));
    let classes: std::collections::BTreeSet<&str> = out
        .lines()
        .filter_map(|l| l.split("class=\"").nth(1))
        .map(|rest| rest.split('"').next().unwrap())
        .collect();
    assert_eq!(classes.len(), 2);
    assert_eq!(out.matches("penwidth=2").count(), 12);
    assert_eq!(out.matches("style=dashed").count(), 8);
}

#[test]
fn oracle_on_cycle() {
    let f = input("0 1\n1 2\n2 3\n3 0\n");
    let (code, out, _) = spfd(&["oracle", "--in", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "prime");
}

#[test]
fn approx_on_perturbed_product() {
    let f = input(&emit_edge_list(&fixtures::perturbed_path_product()));
    let (code, out, err) = spfd(&[
        "approx",
        "--in",
        path(&f),
        "-P",
        "1",
        "--strategy",
        "maximal",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("2 candidate factors"), "{out}");
    assert!(out.contains("candidate 0: 5 vertices") || out.contains("candidate 1: 5 vertices"));
    assert!(out.contains("8 vertices"));
}

#[test]
fn perturb_reports_distance() {
    let (_, text, _) = spfd(&["generate", GRID]);
    let f = input(&text);
    let (code, out, _) = spfd(&[
        "perturb",
        "--in",
        path(&f),
        "--edit",
        "del 0 4",
        "--edit",
        "add 0 8",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("# deleted edge 0 4"));
    assert!(out.contains("# net distance 2"));
    let g = parse_edge_list(&out).unwrap();
    assert_eq!(g.m(), 20);
    let (code, _, err) = spfd(&["perturb", "--in", path(&f), "--edit", "del 0 8"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn backbone_and_quotient() {
    let f = input("a b\nb c\na c\nc d\n");
    let (code, out, _) = spfd(&["backbone", "--in", path(&f), "--json"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(json.is_object());
    let (code, out, _) = spfd(&["quotient", "--in", path(&f)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3 classes from 4 vertices"), "{out}");
}

#[test]
fn exit_codes() {
    let f = input("0 1\n1 1\n");
    let (code, _, err) = spfd(&["factor", "--in", path(&f)]);
    assert_eq!(code, 2);
    assert!(err.contains("self-loop"), "{err}");

    let (code, _, _) = spfd(&["factor", "--bogus"]);
    assert_eq!(code, 1);
    let (code, out, _) = spfd(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("factor-local"));

    let f = input("0 1\n2 3\n");
    let (code, _, _) = spfd(&["factor", "--in", path(&f)]);
    assert_eq!(code, 1);

    let (code, _, _) = spfd(&["generate", "cycle(2)"]);
    assert_eq!(code, 1);
}

#[test]
fn selftest_small() {
    let (code, out, _) = spfd(&["selftest", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("agree"));
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spfd"))
        .args(["factor", "--graph6"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Cl\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("1 prime factor"));
}
