#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chevalley::document::Document;
use chevalley::text::{format_matrix, parse_matrix, parse_poly_matrix, parse_polynomial};
use chevalley::{exp_nilpotent_factor, matrix_power, SquareMatrix};
use common::{fixture_dir, worked_example};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chevalley"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn chevalley")
}

fn fixture(name: &str) -> String {
    fixture_dir().join(name).to_string_lossy().into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path: PathBuf = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn decompose_output_is_deterministic_and_reparses() {
    let u = fixture("u_paper_15x15.txt");
    let first = run(&["decompose", &u]);
    let second = run(&["decompose", &u]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let doc = Document::parse(&stdout(&first)).unwrap();
    let ex = worked_example();
    assert_eq!(parse_matrix(doc.require("d").unwrap()).unwrap(), ex.d);
    assert_eq!(parse_matrix(doc.require("n").unwrap()).unwrap(), ex.n);
    assert_eq!(parse_polynomial(doc.require("h").unwrap()).unwrap(), ex.h2);
    assert_eq!(parse_polynomial(doc.require("p_tilde").unwrap()).unwrap(), ex.p_tilde);
    assert_eq!(doc.require("iterations").unwrap(), "2");
    assert!(doc.require("verification").unwrap().contains("overall=pass"));
}

#[test]
fn emitted_intermediates_start_at_x_and_end_at_h2() {
    let out = run(&["decompose", &fixture("u_paper_15x15.txt"), "--emit-intermediates"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(doc.require("h_0").unwrap(), "0, 1");
    assert!(doc.get("h_1").is_some());
    assert!(doc.get("h_3").is_none());
    let h2 = parse_polynomial(doc.require("h_2").unwrap()).unwrap();
    assert_eq!(h2, worked_example().h2);
    assert!(doc.get("q").is_some());
}

#[test]
fn poly_reports_separable_data() {
    let out = run(&["poly", &fixture("u_paper_15x15.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(doc.require("p_tilde").unwrap(), "43486, -5634, -1873, -245, -9, 1");
    assert_eq!(doc.require("multiplicity").unwrap(), "3");
    assert_eq!(doc.require("iteration_bound").unwrap(), "2");
    assert_eq!(
        parse_polynomial(doc.require("annihilator").unwrap()).unwrap(),
        worked_example().p
    );
}

#[test]
fn supplied_annihilator() {
    let dir = tempfile::tempdir().unwrap();
    let u = write(dir.path(), "u.txt", "[[2, 1, 0], [0, 2, 0], [0, 0, 5]]");
    // (x-2)^2 (x-5)
    let good = write(dir.path(), "good.txt", "-20, 24, -9, 1");
    let out = run(&["decompose", &u, "--annihilator", &good]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(
        parse_matrix(doc.require("d").unwrap()).unwrap(),
        parse_matrix("[[2, 0, 0], [0, 2, 0], [0, 0, 5]]").unwrap()
    );
    let bad = write(dir.path(), "bad.txt", "-10, 7, -1");
    assert_eq!(run(&["decompose", &u, "--annihilator", &bad]).status.code(), Some(3));
    let garbage = write(dir.path(), "garbage.txt", "1, two");
    assert_eq!(run(&["poly", &u, "--annihilator", &garbage]).status.code(), Some(2));
}

#[test]
fn power_command() {
    let dir = tempfile::tempdir().unwrap();
    let text = "[[1, 1], [0, 1/2]]";
    let u = write(dir.path(), "u.txt", text);
    let out = run(&["power", &u, "5"]);
    assert_eq!(out.status.code(), Some(0));
    let m = parse_matrix(&stdout(&out)).unwrap();
    assert_eq!(m, matrix_power(&parse_matrix(text).unwrap(), 5).unwrap());
    assert_eq!(stdout(&out), format!("{}\n", format_matrix(&m)));
    assert_eq!(run(&["power", &u, "--", "-1"]).status.code(), Some(2));
}

#[test]
fn multiplicative_command() {
    let dir = tempfile::tempdir().unwrap();
    let u = write(dir.path(), "u.txt", "[[4, 1], [0, 4]]");
    let out = run(&["multiplicative", &u]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::parse(&stdout(&out)).unwrap();
    assert_eq!(
        parse_matrix(doc.require("v").unwrap()).unwrap(),
        parse_matrix("[[1, 1/4], [0, 1]]").unwrap()
    );
    let singular = write(dir.path(), "s.txt", "[[0, 1], [0, 0]]");
    assert_eq!(run(&["multiplicative", &singular]).status.code(), Some(3));
}

#[test]
fn exp_nilpotent_command() {
    let dir = tempfile::tempdir().unwrap();
    let n = write(dir.path(), "n.txt", "[[0, 1, 0], [0, 0, 1], [0, 0, 0]]");
    let out = run(&["exp-nilpotent", &n]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[\n  [1, t, 1/2*t^2],\n  [0, 1, t],\n  [0, 0, 1]\n]\n");
    let parsed = parse_poly_matrix(&stdout(&out)).unwrap();
    let expected = exp_nilpotent_factor(&parse_matrix("[[0, 1, 0], [0, 0, 1], [0, 0, 0]]").unwrap()).unwrap();
    assert_eq!(parsed, expected);

    let out = run(&["exp-nilpotent", &fixture("n_paper_15x15.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = parse_poly_matrix(&stdout(&out)).unwrap();
    assert_eq!(parsed.eval(&common::int(0)), SquareMatrix::identity(15));

    assert_eq!(run(&["exp-nilpotent", &fixture("u_paper_15x15.txt")]).status.code(), Some(3));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("dec.txt");
    let out = run(&["decompose", &fixture("u_paper_15x15.txt"), "-o", dest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let on_stdout = run(&["decompose", &fixture("u_paper_15x15.txt")]).stdout;
    assert_eq!(std::fs::read(&dest).unwrap(), on_stdout);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "/nonexistent/u.txt"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
