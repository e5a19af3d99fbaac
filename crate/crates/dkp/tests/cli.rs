use std::process::{Command, Output};

fn dkp(args: &[&str], out_dir: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dkp"));
    cmd.args(args).env_remove("DKP_OUTPUT_DIR");
    if let Some(d) = out_dir {
        cmd.env("DKP_OUTPUT_DIR", d);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn algebra_suite_passes() {
    let out = dkp(&["verify", "algebra"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "algebra");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("trilinear/cyclic/")).count(), 64);
    for c in checks {
        for key in ["name", "residual", "tolerance", "pass"] {
            assert!(c.get(key).is_some());
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dkp(&["verify", "nothing"], None).status.code(), Some(2));
    assert_eq!(dkp(&["verify", "algebra", "--unknown"], None).status.code(), Some(2));
    assert_eq!(dkp(&["solve", "minimal", "--kappa", "1/3", "--epsilon", "1", "--mass", "1"], None).status.code(), Some(2));
    // j = 2 is not minimal for kappa = 1.
    let out = dkp(&["verify", "parity", "--kappa", "1", "--j", "1", "--epsilon", "1.3", "--mass", "1", "--case", "b"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn minimal_solution_reports_rate() {
    let out = dkp(&["solve", "minimal", "--kappa", "1", "--epsilon", "0.6", "--mass", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rate: f64 = v["summary"]["rate"].as_str().unwrap().parse().unwrap();
    assert!((rate - 0.8).abs() < 1e-12);
    assert_eq!(v["summary"]["behaviour"], "decaying");
    assert!(String::from_utf8_lossy(&out.stderr).contains("rate 0.8"));
}

#[test]
fn parity_case_b_has_dimension_zero() {
    let out = dkp(&["verify", "parity", "--kappa", "1", "--j", "2", "--epsilon", "1.3", "--mass", "1", "--case", "b"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["dimension"], "0");
    assert_eq!(v["summary"]["cascade"], "f5,f8,f2,f9");
    assert_eq!(v["summary"]["pass"], "true");
}

#[test]
fn matrices_follow_schema() {
    let out = dkp(&["show", "matrices", "--basis", "cyclic"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 10);
    assert_eq!(list[0]["basis"], "cyclic");
    assert_eq!(list[0]["name"], "beta0");
    // Row 2, column 5 of beta0 is +i.
    assert_eq!(list[0]["rows"][1][4]["im"].as_f64(), Some(1.0));
    let csv = dkp(&["show", "matrices", "--basis", "cartesian", "--format", "csv"], None);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("basis,name,row,col,re,im"));
    assert_eq!(text.lines().count(), 1 + 10 * 100);
}

#[test]
fn radial_csv_goes_to_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = dkp(
        &["solve", "radial", "--kappa", "1", "--j", "2", "--epsilon", "1.3", "--mass", "1", "--r0", "0.5", "--r1", "3", "--steps", "100"],
        Some(dir.path()),
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("radial.csv")).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 21);
    assert_eq!(header[0], "r");
    assert_eq!(header[20], "im_f10");
    assert_eq!(lines.count(), 101);
}

#[test]
fn explicit_out_overrides_directory() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("sub").join("g.json");
    let out = dkp(&["verify", "gauge", "--trials", "5", "--out", target.to_str().unwrap()], Some(dir.path()));
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["config"]["trials"], "5");
    assert!(!dir.path().join("gauge.json").exists());
}
