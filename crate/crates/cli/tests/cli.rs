//! End-to-end CLI tests against checked-in golden files, plus exit-code
//! behavior.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoorbit"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

fn check_golden(args: &[&str], name: &str, expected_code: i32) {
    let output = run(args);
    let stdout = String::from_utf8(output.stdout).expect("utf-8 output");
    assert_eq!(stdout, golden(name), "stdout mismatch for {args:?}");
    assert_eq!(output.status.code(), Some(expected_code), "{args:?}");
    // Determinism: a second run is byte-identical.
    let again = run(args);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), stdout);
}

#[test]
fn classify_golden() {
    check_golden(
        &["classify", "--catalog", "cuboctahedron"],
        "classify_cuboctahedron.txt",
        0,
    );
    check_golden(
        &["classify", "--catalog", "icosidodecahedron"],
        "classify_icosidodecahedron.txt",
        0,
    );
    check_golden(
        &[
            "--format",
            "json",
            "classify",
            "--catalog",
            "rhombic-dodecahedron",
        ],
        "classify_rhombic_dodecahedron.json",
        0,
    );
    check_golden(&["classify", "--catalog", "cube(3)"], "classify_cube.txt", 0);
}

#[test]
fn analyze_golden() {
    check_golden(
        &["analyze", "--catalog", "rhombic-triacontahedron"],
        "analyze_rhombic_triacontahedron.txt",
        0,
    );
    check_golden(
        &["--format", "json", "analyze", "--catalog", "cuboctahedron"],
        "analyze_cuboctahedron.json",
        0,
    );
}

#[test]
fn growth_golden() {
    check_golden(&["tiling", "growth", "--n", "1"], "growth_n1.txt", 0);
    check_golden(&["tiling", "growth", "--n", "4"], "growth_n4.txt", 0);
    check_golden(
        &["--format", "json", "tiling", "growth", "--n", "2"],
        "growth_n2.json",
        0,
    );
}

#[test]
fn crossing_golden() {
    check_golden(
        &["tiling", "crossing", "--u", "1", "--U", "10"],
        "crossing_1_10.txt",
        0,
    );
}

#[test]
fn solve_planar_golden() {
    check_golden(&["tiling", "solve-planar"], "solve_planar.txt", 0);
}

#[test]
fn quotient_golden() {
    check_golden(
        &[
            "tiling",
            "quotient",
            "--family",
            "trihexagonal",
            "--k",
            "3",
            "--analyze",
        ],
        "quotient_trihex_k3.txt",
        0,
    );
    check_golden(
        &[
            "tiling",
            "quotient",
            "--family",
            "rhombic-dodecahedral",
            "--k",
            "2",
            "--analyze",
        ],
        "quotient_rhombic_dodecahedral_k2.txt",
        0,
    );
}

#[test]
fn emit_golden() {
    check_golden(&["catalog", "emit", "polygon(3)"], "emit_polygon3.json", 0);
}

#[test]
fn validate_broken_input_exits_one() {
    check_golden(
        &["validate", "tests/fixtures/broken-tetrahedron.json"],
        "validate_broken.txt",
        1,
    );
}

#[test]
fn emitted_lattices_validate() {
    let emitted = run(&["catalog", "emit", "icosahedron"]);
    let dir = std::env::temp_dir().join("twoorbit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("icosahedron.json");
    std::fs::write(&path, &emitted.stdout).unwrap();
    let validated = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(validated.status.code(), Some(0));
    let text = String::from_utf8(validated.stdout).unwrap();
    assert!(text.contains("all axioms hold"), "{text}");
}

#[test]
fn classify_from_an_emitted_file() {
    let emitted = run(&["catalog", "emit", "icosidodecahedron"]);
    let dir = std::env::temp_dir().join("twoorbit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("icosidodecahedron.json");
    std::fs::write(&path, &emitted.stdout).unwrap();
    let classified = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(classified.status.code(), Some(0));
    let text = String::from_utf8(classified.stdout).unwrap();
    assert!(text.contains("icosidodecahedron-type (H3)"), "{text}");
    assert!(text.contains("class: 2_{0,1}"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(run(&["validate"]).status.code(), Some(2));
    assert_eq!(
        run(&["tiling", "growth", "--n", "1", "--bogus"]).status.code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_one_with_messages() {
    let missing = run(&["validate", "/definitely/missing.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8(missing.stderr)
        .unwrap()
        .contains("missing.json"));

    let bad_key = run(&["classify", "--catalog", "megahedron"]);
    assert_eq!(bad_key.status.code(), Some(1));
    assert!(String::from_utf8(bad_key.stderr)
        .unwrap()
        .contains("megahedron"));

    let bad_period = run(&["tiling", "quotient", "--family", "trihexagonal", "--k", "1"]);
    assert_eq!(bad_period.status.code(), Some(1));
}

#[test]
fn classify_catalog_list_is_stable() {
    let listing = run(&["catalog", "list"]);
    assert_eq!(listing.status.code(), Some(0));
    let text = String::from_utf8(listing.stdout).unwrap();
    assert!(text.lines().count() >= 20);
    assert!(text.contains("rhombic-triacontahedron"));
}
