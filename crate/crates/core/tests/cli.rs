use std::process::Command;

use schur_commutators::ReportFile;

fn commschur() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_commschur"));
    cmd.env_remove("COMMSCHUR_WORKERS");
    cmd
}

fn verify(args: &[&str]) -> (i32, String) {
    let out = commschur().arg("verify").args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn abs_first_campaign_passes_and_is_reproducible() {
    let args = ["--theorem", "AbsFirst", "--trials", "200", "--dim", "2-16", "--seed", "42"];
    let (code, first) = verify(&args);
    assert_eq!(code, 0);
    let a = ReportFile::from_json(&first).unwrap();
    assert_eq!(a.summary.passed, 200);
    let (_, second) = verify(&args);
    let b = ReportFile::from_json(&second).unwrap();
    assert_eq!(
        serde_json::to_string(&a.records).unwrap(),
        serde_json::to_string(&b.records).unwrap()
    );
    assert_eq!(a.summary.max_slack_ratio, b.summary.max_slack_ratio);
}

#[test]
fn worker_count_does_not_change_records() {
    let base = ["--theorem", "all", "--trials", "4", "--dim", "2-8", "--seed", "5"];
    let (_, one) = verify(&[&base[..], &["--workers", "1"]].concat());
    let (_, many) = verify(&[&base[..], &["--workers", "6"]].concat());
    let one = ReportFile::from_json(&one).unwrap();
    let many = ReportFile::from_json(&many).unwrap();
    assert_eq!(one.records, many.records);
}

#[test]
fn configuration_errors_exit_with_two() {
    let (code, _) = verify(&["--theorem", "Lp", "--p", "2.5"]);
    assert_eq!(code, 2);
    let (code, _) = verify(&["--theorem", "NoSuchTheorem"]);
    assert_eq!(code, 2);
    let (code, _) = verify(&["--theorem", "AbsFirst", "--dim", "1-4"]);
    assert_eq!(code, 2);
    let (code, _) = verify(&["--theorem", "GBeta", "--kernel-frac", "1.5"]);
    assert_eq!(code, 2);
    let out = commschur().arg("verify").arg("--bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_trials_is_a_vacuous_pass() {
    let (code, text) = verify(&["--theorem", "HoldThm", "--trials", "0"]);
    assert_eq!(code, 0);
    let report = ReportFile::from_json(&text).unwrap();
    assert!(report.records.is_empty());
    assert_eq!(report.summary.trials, 0);
}

#[test]
fn headroom_tolerance_reports_violations() {
    // A relative tolerance of -0.999 demands slack ratios below 1e-3.
    let (code, text) = verify(&["--theorem", "AbsFirst", "--trials", "20", "--tol=-0.999"]);
    assert_eq!(code, 1);
    let report = ReportFile::from_json(&text).unwrap();
    assert!(report.summary.failed > 0);
    assert_eq!(report.summary.failed + report.summary.passed, 20);
    let (code, _) = verify(&["--theorem", "AbsFirst", "--trials", "3", "--tol=-1"]);
    assert_eq!(code, 2);
}

#[test]
fn csv_and_json_files() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let common = ["--theorem", "GBeta", "--trials", "5", "--dim", "2-6", "--seed", "3"];
    let (code, _) = verify(&[&common[..], &["--out", json.to_str().unwrap()]].concat());
    assert_eq!(code, 0);
    let (code, _) = verify(&[&common[..], &["--out", csv.to_str().unwrap(), "--format", "csv"]].concat());
    assert_eq!(code, 0);
    let report = ReportFile::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.records.len(), 5);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.starts_with("theorem_id,"));
}

#[test]
fn constants_table() {
    let out = commschur()
        .args(["constants", "--holder", "1,0,1", "--n", "2", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("holder_row_norm_factor,A=0;B=1;alpha=1;n=2,2\n"));
    let line = text.lines().find(|l| l.starts_with("abs_higher_y_coefficient")).unwrap();
    let value: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
    assert!((value - 7.2552).abs() < 1e-4);
    assert!(text.contains("log_interp_optimized_constant,,12.9266"));
}

#[test]
fn fourier_demo() {
    let out = commschur()
        .args(["fourier", "--M", "16", "--g", "abs", "--trials", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], true);
    let bad = commschur().args(["fourier", "--g", "nonsense"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
