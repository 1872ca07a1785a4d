//! End-to-end runs of the binary: exit codes and output shapes.

use std::path::Path;
use std::process::{Command, Output};

use vtcensus::groups::{resolve_group, Catalog};
use vtcensus::{SimplicialComplex, VertexSet};

fn vtcensus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vtcensus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_torus(path: &Path) {
    let g = resolve_group("t7n4", &Catalog::builtin()).unwrap();
    let m =
        SimplicialComplex::from_orbits(&g, &[VertexSet::from_vertices(&[1, 2, 4])]).unwrap();
    std::fs::write(path, m.to_file_string()).unwrap();
}

#[test]
fn verify_pipeline_on_the_torus() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("torus.txt");
    write_torus(&file);
    let out = vtcensus(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2-manifold, chi = 0, orientable"), "{text}");
    assert!(text.contains("T^2"), "{text}");
}

#[test]
fn reference_feeds_reduce() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.txt");
    let out = vtcensus(&["reference", "cyclic", "4", "8"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&file, out.stdout).unwrap();
    let out = vtcensus(&["reduce", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("boundary of the simplex"));
}

#[test]
fn verify_rejects_a_fat_ridge() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "5 2\n1 2 3\n1 2 4\n1 2 5\n").unwrap();
    let out = vtcensus(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not a pseudomanifold: ridge {1,2} lies in 3 facets"));
}

#[test]
fn missing_file_is_bad_input() {
    let out = vtcensus(&["verify", "/no/such/file.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compare_tells_complexes_apart() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    std::fs::write(&a, stdout(&vtcensus(&["reference", "simplex", "2"]))).unwrap();
    std::fs::write(&b, stdout(&vtcensus(&["reference", "cross", "2"]))).unwrap();
    let out = vtcensus(&["compare", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("isomorphic"));
    let out = vtcensus(&["compare", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("not isomorphic"));
}

#[test]
fn sweep_then_report() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    let out = vtcensus(&["sweep", "--n", "4..5", "--out", store.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("1/0"));

    // A second run finds nothing new.
    let out = vtcensus(&["sweep", "--n", "4..5", "--out", store.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("records added: 0"));

    let out = vtcensus(&["report", "--style", "orbits", "--out", store.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("simplex boundary"));
}

#[test]
fn orbits_match_the_known_counts() {
    let out = vtcensus(&["orbits", "--group", "Z15", "-k", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("335 orbits"), "{text}");
    assert!(text.contains("333 of size 15, 2 of size 5"), "{text}");
}

#[test]
fn unknown_group_is_bad_input() {
    let out = vtcensus(&["orbits", "--group", "t9n1", "-k", "3"]);
    assert_eq!(out.status.code(), Some(1));
}
