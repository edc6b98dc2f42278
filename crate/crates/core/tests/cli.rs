use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use two_loop::knotio::{builtin, parse_record, serialize_record};
use two_loop::tables;

fn two_loop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_two-loop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn write_builtin(dir: &Path, name: &str, file: &str) -> String {
    let path = dir.join(file);
    fs::write(&path, serialize_record(&builtin(name).unwrap())).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn torus_queries() {
    let out = two_loop(&["torus", "3", "2", "--what", "v3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
    let out = two_loop(&["torus", "7", "2", "--what", "theta-hat"]);
    assert_eq!(stdout(&out), "3t^5 + 5t^3 + 6t + 6t^-1 + 5t^-3 + 3t^-5\n");
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["torus", "4", "2", "--what", "v3"][..],
        &["torus", "3", "2"],
        &["table", "3", "2", "--layout", "spiral"],
        &["cable", "x.knot", "2", "4"],
        &["verify", "--pmax", "0", "--qmax", "4"],
        &[],
    ] {
        let out = two_loop(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn table_grid_is_the_golden_file() {
    let out = two_loop(&["table", "7", "2", "--layout", "grid"]);
    assert_eq!(stdout(&out), tables::GOLDEN_GRID_7_2);
}

#[test]
fn table_domain_blocks() {
    let out = two_loop(&["table", "5", "3", "--layout", "domain"]);
    let golden = tables::golden_domain_blocks();
    let (_, block) = golden
        .iter()
        .find(|(t, _)| t.to_string() == "(5,3)")
        .unwrap();
    assert_eq!(stdout(&out), block);
}

#[test]
fn output_is_deterministic() {
    let a = two_loop(&["table", "7", "4", "--layout", "grid"]);
    let b = two_loop(&["table", "7", "4", "--layout", "grid"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cable_of_unknot_is_the_torus_record() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_builtin(dir.path(), "unknot", "unknot.knot");
    let output = dir.path().join("t32.knot");
    let out = two_loop(&["cable", &input, "3", "2", "-o", output.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let written = fs::read_to_string(&output).unwrap();
    assert_eq!(written, serialize_record(&builtin("torus:3:2").unwrap()));
}

#[test]
fn trivial_cable_keeps_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_builtin(dir.path(), "torus:3:2", "t32.knot");
    let output = dir.path().join("same.knot");
    let out = two_loop(&["cable", &input, "1", "5", "-o", output.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let back = parse_record(&fs::read_to_string(&output).unwrap()).unwrap();
    assert!(back.same_invariants(&builtin("torus:3:2").unwrap()));
}

#[test]
fn cable_summary_reports_v3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_builtin(dir.path(), "torus:3:2", "t32.knot");
    let output = dir.path().join("cable.knot");
    let out = two_loop(&["cable", &input, "2", "3", "-o", output.to_str().unwrap()]);
    assert_eq!(stdout(&out), "T(3,2)^(2,3): v2 = -5, v3 = 8\n");
}

#[test]
fn cable_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_builtin(dir.path(), "unknot", "u.knot");
    let out = two_loop(&["cable", &input, "5", "2"]);
    assert_eq!(
        stdout(&out),
        serialize_record(&builtin("torus:5:2").unwrap())
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "T(5,2): v2 = -3, v3 = 5\n"
    );
}

#[test]
fn bad_input_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.knot");
    let out = two_loop(&["cable", missing.to_str().unwrap(), "2", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let bad = dir.path().join("bad.knot");
    fs::write(&bad, "knot \"x\"\nalexander:\n  1 1\ntheta:\nend\n").unwrap();
    let out = two_loop(&["cable", bad.to_str().unwrap(), "2", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alexander not symmetric"));

    fs::write(&bad, "knot \"x\"\nalexandr:\n").unwrap();
    let out = two_loop(&["cable", bad.to_str().unwrap(), "2", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.knot:2:1:"), "{err}");
}

#[test]
fn verify_reports() {
    let out = two_loop(&["verify", "--pmax", "7", "--qmax", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS golden domain (7,4)"));
    assert!(!text.contains("FAIL"));

    let out = two_loop(&["verify", "--pmax", "2", "--qmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("0 pairs"));
}
