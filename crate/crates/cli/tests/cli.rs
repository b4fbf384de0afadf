use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lspline_cli::io::{read_table, TABLE_HEADER};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lspline"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const DEMO_CSV: &str = "t,z\n0,0\n0.1667,-0.8875\n0.3333,0.8877\n0.5,-0.0663\n0.6667,-0.8046\n0.8333,0.9106\n1,-0.1324\n";

#[test]
fn interp_clamped_writes_samples() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.csv", DEMO_CSV);
    let out = dir.path().join("out.csv");
    let svg = dir.path().join("plot.svg");
    let o = run(&[
        "interp", "--input", input.to_str().unwrap(), "--output", out.to_str().unwrap(),
        "--svg", svg.to_str().unwrap(), "--xi", "5", "--boundary", "clamped",
        "--left-deriv", "25", "--right-deriv", "25",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some(TABLE_HEADER));
    assert_eq!(text.lines().count(), 501);
    let table = read_table(&out).unwrap();
    assert_eq!(table.len(), 500);
    assert!((table.deriv1[0] - 25.0).abs() < 1e-9);
    assert!((table.value[499] + 0.1324).abs() < 1e-11);
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.starts_with("<svg") && svg.matches("<circle").count() == 7);
}

#[test]
fn interp_natural_with_sample_count() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.csv", "# comment\n0,1\n1,2\n2.5,0\n");
    let out = dir.path().join("out.csv");
    let o = run(&[
        "interp", "--input", input.to_str().unwrap(), "--output", out.to_str().unwrap(),
        "--xi", "0", "--boundary", "natural", "--samples", "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let table = read_table(&out).unwrap();
    assert_eq!(table.len(), 11);
    assert_eq!(table.t[10], 2.5);
    assert!(table.deriv2[0].abs() < 1e-12 && table.deriv2[10].abs() < 1e-12);
}

#[test]
fn conflicting_flags_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.csv", DEMO_CSV);
    let o = run(&[
        "interp", "--input", input.to_str().unwrap(), "--output", "/dev/null",
        "--xi", "1", "--boundary", "natural", "--left-deriv", "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("--left-deriv") && err.contains("--boundary"), "{err}");

    let o = run(&["interp", "--input", input.to_str().unwrap(), "--output", "/dev/null", "--xi", "1", "--boundary", "clamped"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--left-deriv"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["interp", "--xi", "1"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn non_increasing_knots_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.csv", "t,z\n0,0\n0.5,1\n0.4,2\n1,0\n");
    let o = run(&[
        "interp", "--input", input.to_str().unwrap(), "--output", "/dev/null",
        "--xi", "1", "--boundary", "natural",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn missing_input_exit_3() {
    let o = run(&[
        "interp", "--input", "/nonexistent/in.csv", "--output", "/dev/null",
        "--xi", "1", "--boundary", "natural",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn negative_tension_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.csv", DEMO_CSV);
    let o = run(&[
        "interp", "--input", input.to_str().unwrap(), "--output", "/dev/null",
        "--xi=-1", "--boundary", "natural",
    ]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn overflowing_knot_spacing_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.csv", "-1.5e308,0\n1.5e308,1\n");
    let o = run(&[
        "interp", "--input", input.to_str().unwrap(), "--output", "/dev/null",
        "--xi", "1", "--boundary", "natural",
    ]);
    assert_eq!(o.status.code(), Some(4), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn demo_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        let o = run(&["demo", "--out", d.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    for f in ["lspline.csv", "linear.csv", "figure.svg"] {
        let x = std::fs::read(a.join(f)).unwrap();
        let y = std::fs::read(b.join(f)).unwrap();
        assert!(!x.is_empty());
        assert_eq!(x, y, "{f} differs");
    }
    let table = read_table(&a.join("lspline.csv")).unwrap();
    assert_eq!(table.len(), 500);
    assert!((table.deriv1[0] - 25.0).abs() < 1e-9);
    let linear = std::fs::read_to_string(a.join("linear.csv")).unwrap();
    assert!(linear.starts_with("t,value\n"));
}
