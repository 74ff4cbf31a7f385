use std::path::Path;
use std::process::{Command, Output};

fn qbrach(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbrach"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

fn norm(row: &[f64]) -> f64 {
    row[9..12].iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[test]
fn verify_succeeds_and_is_deterministic() {
    let a = qbrach(&["--command", "verify"]);
    let b = qbrach(&["--command", "verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["summary"]["unexpected"], 0);
    assert_eq!(report["config"]["R"], 1.0);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gates.json");
    let out = qbrach(&["--command", "gates", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read(&path).unwrap(),
        qbrach(&["--command", "gates"]).stdout
    );
}

#[test]
fn trajectory_csv_shape() {
    let out = qbrach(&["--command", "trajectory", "--samples", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "t,re_u11,im_u11,re_u12,im_u12,re_u21,im_u21,re_u22,im_u22,bx,by,bz"
    );
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 13);
    // First row is t = s, so U = I and the state sits at the north pole.
    let expected = [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0];
    assert!(
        rows[0]
            .iter()
            .zip(expected)
            .all(|(a, b)| (a - b).abs() < 1e-15),
        "{:?}",
        rows[0]
    );
}

#[test]
fn unitary_family_stays_on_sphere() {
    let out = qbrach(&["--command", "trajectory", "--family", "T", "--t-end", "5"]);
    for row in csv_rows(&stdout(&out)) {
        assert!((norm(&row) - 1.0).abs() < 1e-12, "t = {}", row[0]);
    }
}

#[test]
fn hyperbolic_family_leaves_sphere() {
    let out = qbrach(&[
        "--command",
        "trajectory",
        "--family",
        "hyperbolic",
        "--t-end",
        "3",
    ]);
    let norms: Vec<f64> = csv_rows(&stdout(&out)).iter().map(|r| norm(r)).collect();
    assert!((norms[0] - 1.0).abs() < 1e-15);
    assert!(norms.windows(2).all(|w| w[1] < w[0]), "{norms:?}");
}

#[test]
fn text_format_for_gates() {
    let out = qbrach(&["--command", "gates", "--format", "text"]);
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("Pauli-Z") && l.contains("eigenframe")));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        &["--samples", "1"][..],
        &["--t-end", "-1"],
        &["--command", "trajectory", "--family", "W"],
        &["--command", "bogus"],
        &["--tol", "nan"],
    ] {
        let out = qbrach(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    let err =
        String::from_utf8(qbrach(&["--command", "trajectory", "--family", "W"]).stderr).unwrap();
    assert!(
        err.contains("unknown family `W`") && err.contains("hyperbolic"),
        "{err}"
    );
}

#[test]
fn loose_tolerance_flags_misclassified_claims() {
    // Deviating claims now fall under tolerance and no longer match their
    // recorded expectation.
    let out = qbrach(&["--tol", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["summary"]["unexpected"].as_u64().unwrap() > 0);
}

#[test]
fn unwritable_output_is_reported() {
    let out = qbrach(&["--out", "/nonexistent-dir/report.json"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(!Path::new("/nonexistent-dir/report.json").exists());
}
