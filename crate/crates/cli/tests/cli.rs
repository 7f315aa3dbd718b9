//! End-to-end tests of the `frieze` binary: every subcommand, the exit-code
//! contract (0 ok / 1 usage / 2 verification failure), and JSON round trips.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(args)
        .output()
        .expect("spawn frieze");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn frieze");
    child
        .stdin
        .take()
        .expect("stdin")
        .write_all(input.as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("wait");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = run(&full);
    assert_eq!(code, 0, "generate {args:?} failed: {stderr}");
    stdout
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&["generate", "--help"]).0, 0);
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, stderr) = run(&["generate", "--type", "F4", "--period", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("F4"), "stderr: {stderr}");

    // unknown subcommand and missing required flag are clap errors
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["generate", "--period", "1"]).0, 1);

    // a family that needs parameters rejects their absence
    let (code, _, stderr) = run(&["generate", "--type", "D4", "--period", "2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("xp"), "stderr: {stderr}");

    // 2-periodic friezes on these types are all constant, so there is
    // nothing to parametrize
    assert_eq!(run(&["generate", "--type", "E6", "--period", "2"]).0, 1);
    assert_eq!(run(&["generate", "--type", "A4", "--period", "2", "--param", "x=2"]).0, 1);
}

#[test]
fn generate_then_verify_round_trips_every_family() {
    let cases: &[&[&str]] = &[
        &["--type", "A3", "--period", "1"],
        &["--type", "A3", "--period", "2", "--param", "x=3/2"],
        &["--type", "A7", "--period", "2", "--param", "x=1.3", "--backend", "float"],
        &["--type", "D4", "--period", "1"],
        &["--type", "D5", "--period", "1"],
        &["--type", "D10", "--period", "1"],
        &["--type", "D5", "--period", "2", "--param", "x=7/4"],
        &["--type", "D6", "--period", "2", "--param", "xp=5/4", "--param", "xm=4/5"],
        &["--type", "D7", "--period", "2", "--param", "x=1.7", "--backend", "float"],
        &["--type", "E6", "--period", "1"],
        &["--type", "E7", "--period", "1"],
        &["--type", "E8", "--period", "1"],
        &["--type", "E7", "--period", "2", "--param", "x1=1"],
        &["--type", "E7", "--period", "2", "--param", "x1=0.7", "--backend", "float"],
        &["--type", "E8", "--period", "4", "--param", "s=3/2"],
        &["--type", "E8", "--period", "4", "--param", "s=0.6", "--backend", "float"],
        &["--type", "E8", "--period", "4", "--param", "s=3", "--translated"],
    ];
    for args in cases {
        let json = generate(args);
        let (code, stdout, stderr) = run_with_stdin(&["verify", "-", "--tol", "1e-9"], &json);
        assert_eq!(code, 0, "verify of generate {args:?} failed: {stdout}{stderr}");
        assert!(stdout.contains("PASS"), "stdout: {stdout}");
    }
}

#[test]
fn exact_rational_parameters_verify_to_exact_zero() {
    let json = generate(&["--type", "E8", "--period", "4", "--param", "s=22/7"]);
    let (code, stdout, _) = run_with_stdin(&["verify", "-", "--format", "json"], &json);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).expect("verify JSON");
    assert_eq!(report["exactZero"], Value::Bool(true));
    assert_eq!(report["maxAbsResidual"].as_f64(), Some(0.0));
}

#[test]
fn integer_parameter_gives_positive_integer_frieze() {
    let json = generate(&["--type", "E8", "--period", "4", "--param", "s=2"]);
    let parsed: Value = serde_json::from_str(&json).expect("JSON");
    assert_eq!(parsed["backend"], "exact:Q");
    // the central vertex alternates 29, 29, 41, 41 at this parameter
    let central: Vec<&str> = parsed["values"]["X"]
        .as_array()
        .expect("X values")
        .iter()
        .map(|v| v["coeffs"][0].as_str().expect("coeff"))
        .collect();
    assert_eq!(central, ["29", "29", "41", "41"]);
    // every entry across the frieze is a positive integer
    for (_, occurrences) in parsed["values"].as_object().expect("values").iter() {
        for v in occurrences.as_array().expect("array") {
            assert_eq!(v["field"], "Q");
            let c = v["coeffs"][0].as_str().expect("coeff");
            assert!(!c.contains('/') && !c.starts_with('-'), "non-integer entry {c}");
        }
    }
}

#[test]
fn translated_family_is_a_different_but_valid_frieze() {
    let plain = generate(&["--type", "E8", "--period", "4", "--param", "s=2"]);
    let shifted = generate(&["--type", "E8", "--period", "4", "--param", "s=2", "--translated"]);
    assert_ne!(plain, shifted);
    let (code, _, _) = run_with_stdin(&["verify", "-"], &shifted);
    assert_eq!(code, 0);
    // translating twice swaps the parameter s=2 with t=2/s=1
    let other = generate(&["--type", "E8", "--period", "4", "--param", "s=1"]);
    let a: Value = serde_json::from_str(&plain).unwrap();
    let b: Value = serde_json::from_str(&other).unwrap();
    let x_a = a["values"]["X"].as_array().unwrap();
    let x_b = b["values"]["X"].as_array().unwrap();
    assert_eq!(x_a[2], x_b[0]);
    assert_eq!(x_a[3], x_b[1]);
}

#[test]
fn corrupted_entry_fails_verification_with_exit_two() {
    let json = generate(&["--type", "D4", "--period", "1", "--backend", "float"]);
    let mut parsed: Value = serde_json::from_str(&json).expect("JSON");
    let entry = &mut parsed["values"]["2"][0];
    let perturbed = entry.as_f64().expect("float entry") * 1.1;
    *entry = Value::from(perturbed);

    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&parsed).unwrap()).expect("write");

    let (code, stdout, _) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2, "stdout: {stdout}");
    assert!(stdout.contains("FAIL"));

    let (code, stdout, _) =
        run(&["verify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 2);
    let report: Value = serde_json::from_str(&stdout).expect("verify JSON");
    assert_eq!(report["pass"], Value::Bool(false));
    assert_eq!(report["worst"]["vertex"], "2");
}

#[test]
fn verify_rejects_garbage_with_exit_one() {
    let (code, _, stderr) = run_with_stdin(&["verify", "-"], "not json");
    assert_eq!(code, 1);
    assert!(stderr.contains("error"), "stderr: {stderr}");

    let (code, _, _) =
        run_with_stdin(&["verify", "-"], r#"{"type":"B3","period":1,"backend":"float","values":{}}"#);
    assert_eq!(code, 1);
}

#[test]
fn exact_backend_refused_when_entries_are_not_closed_form() {
    // the constant A5 frieze needs quantum integers at level 8, beyond the
    // supported exact fields
    let (code, _, stderr) = run(&["generate", "--type", "A5", "--period", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("float"), "stderr should point at --backend float: {stderr}");
    let (code, _, _) =
        run(&["generate", "--type", "A5", "--period", "1", "--backend", "float"]);
    assert_eq!(code, 0);
}

#[test]
fn render_reformats_between_text_json_and_csv() {
    let json = generate(&["--type", "D6", "--period", "2", "--param", "xp=5/4", "--param", "xm=4/5"]);

    let (code, text, _) = run_with_stdin(&["render", "-", "--format", "text"], &json);
    assert_eq!(code, 0);
    assert!(text.contains("D6 frieze, period 2, backend exact:"));
    assert!(text.contains("decimal:"));

    let (code, csv, _) = run_with_stdin(&["render", "-", "--format", "csv"], &json);
    assert_eq!(code, 0);
    assert!(csv.starts_with("vertex,occurrence,value"));
    // rank 6, period 2: one row per vertex and occurrence plus the header
    assert_eq!(csv.lines().count(), 1 + 6 * 2);

    // JSON rendering of a parsed frieze reproduces the generator output
    let (code, round, _) = run_with_stdin(&["render", "-", "--format", "json"], &json);
    assert_eq!(code, 0);
    let before: Value = serde_json::from_str(&json).unwrap();
    let after: Value = serde_json::from_str(&round).unwrap();
    assert_eq!(before, after);
}

#[test]
fn text_grid_staggers_columns_by_parity() {
    let (code, text, _) = run(&["generate", "--type", "D4", "--period", "1", "--format", "text"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "D4 frieze, period 1, backend exact:Q");
    assert_eq!(lines[1], "1 |   2");
    assert_eq!(lines[2], "2 | 3");
    assert_eq!(lines[3], "+ |   2");
    assert_eq!(lines[4], "- |   2");
}

#[test]
fn solve_converges_on_the_two_parameter_family() {
    let (code, stdout, stderr) = run(&[
        "solve", "--type", "D4", "--period", "2", "--trials", "10", "--seed", "42",
        "--format", "json",
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let report: Value = serde_json::from_str(&stdout).expect("solve JSON");
    assert_eq!(report["converged"].as_u64(), Some(10));
    for trial in report["results"].as_array().expect("results") {
        assert_eq!(trial["converged"], Value::Bool(true));
        assert!(trial["residualInf"].as_f64().expect("residual") <= 1e-11);
        assert_eq!(trial["tangentDimension"].as_u64(), Some(2));
    }
}

#[test]
fn solve_is_deterministic_for_a_fixed_seed() {
    let args = ["solve", "--type", "A5", "--period", "1", "--trials", "5", "--seed", "7",
        "--format", "json"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn spectrum_reports_eigenvalue_multiplicities() {
    let (code, stdout, _) = run(&["spectrum", "--type", "D6", "--format", "json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).expect("spectrum JSON");
    assert_eq!(report["minusOneMultiplicity"].as_u64(), Some(2));
    assert_eq!(report["minusOneAmbiguous"], Value::Bool(false));
    assert_eq!(report["orderFourMultiplicity"].as_u64(), Some(0));

    let (code, stdout, _) = run(&["spectrum", "--type", "E8", "--format", "json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).expect("spectrum JSON");
    assert_eq!(report["minusOneMultiplicity"].as_u64(), Some(0));
    assert_eq!(report["orderFourMultiplicity"].as_u64(), Some(2));
}

#[test]
fn classify_reports_the_constant_collapse() {
    let (code, stdout, _) = run(&[
        "classify", "--type", "A4", "--period", "2", "--trials", "20", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).expect("classify JSON");
    assert_eq!(report["converged"].as_u64(), Some(20));
    assert_eq!(report["fractionConstant"].as_f64(), Some(1.0));
    assert_eq!(report["tangentHistogram"]["0"].as_u64(), Some(20));
    assert_eq!(report["familyParams"].as_u64(), Some(0));
}
