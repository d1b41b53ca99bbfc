use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mwc-verify"))
}

fn write(dir: &Path, text: &str) -> std::path::PathBuf {
    let p = dir.join("scenario.toml");
    std::fs::write(&p, text).unwrap();
    p
}

fn scenario(checks: &str, n: usize) -> String {
    format!(
        "seed = 4\nchecks = [{checks}]\n[grid]\ndim = 2\nn = {n}\nhalf_extent = 5.0\n[field]\nkind = \"constant\"\nb = 1.0\n[report]\ntimings = false\n"
    )
}

fn verify(dir: &Path, text: &str, extra: &[&str]) -> Output {
    let cfg = write(dir, text);
    let out = dir.join("out");
    bin().arg("verify").arg("--config").arg(&cfg).arg("--out").arg(&out).args(extra).output().unwrap()
}

#[test]
fn list_checks_names_every_check() {
    let out = bin().arg("list-checks").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for c in mwc_harness::catalog() {
        assert!(text.contains(c.id), "{}", c.id);
    }
}

#[test]
fn passing_run_exits_zero_and_writes_both_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(dir.path(), &scenario(r#""gauge_covariance", "window_idempotency""#, 6), &["--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("out/report.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
    let jsonl = std::fs::read_to_string(dir.path().join("out/report.jsonl")).unwrap();
    assert_eq!(jsonl.lines().count(), 2);
}

#[test]
fn failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(dir.path(), &scenario(r#""gauge_covariance""#, 6), &["--tolerance-scale", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let csv = std::fs::read_to_string(dir.path().join("out/report.csv")).unwrap();
    assert!(csv.lines().nth(1).unwrap().contains(",false,"));
}

#[test]
fn empty_check_list_exits_zero_with_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(dir.path(), &scenario("", 6), &[]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("out/report.csv")).unwrap();
    assert_eq!(csv, "id,residual,tolerance,pass,seconds\n");
}

#[test]
fn validation_errors_exit_two_and_explain() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(dir.path(), &scenario(r#""weyl_product_rule", "not_a_check""#, 6), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not_a_check"));
    assert!(!dir.path().join("out").exists());

    let out = verify(dir.path(), &scenario(r#""reproducing_kernel""#, 32), &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("predicted peak memory"), "{err}");

    let out = bin().arg("verify").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let text = scenario(r#""gauge_covariance", "calibration_stability""#, 6);
    let read = |dir: &Path| std::fs::read(dir.join("out/report.jsonl")).unwrap();
    verify(dir.path(), &text, &["--seed", "11"]);
    let first = (read(dir.path()), std::fs::read(dir.path().join("out/report.csv")).unwrap());
    verify(dir.path(), &text, &["--seed", "11"]);
    assert_eq!(first.0, read(dir.path()));
    assert_eq!(first.1, std::fs::read(dir.path().join("out/report.csv")).unwrap());
}

#[test]
fn calibrate_prints_constants() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), &scenario("", 6));
    let out = bin().args(["calibrate", "--samples", "4", "--config"]).arg(&cfg).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let kappa = v["kappa"].as_f64().unwrap();
    assert!((kappa - (2.0 * std::f64::consts::PI).powi(-2)).abs() < 1e-12);
    assert!((v["kappa_prime"].as_f64().unwrap() - (2.0 * std::f64::consts::PI).recip()).abs() < 1e-12);
    assert!(v["fourier"].as_f64().unwrap() > 0.0);
}
