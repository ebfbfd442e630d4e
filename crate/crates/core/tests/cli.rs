use std::f64::consts::FRAC_PI_2;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squeeze-net"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("UTF-8 output")
}

/// Header and numeric rows, comment lines dropped.
fn table(out: &Output) -> (Vec<String>, Vec<Vec<f64>>) {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(out);
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn csv_is_lf_terminated_and_deterministic() {
    let args = [
        "photocurrent",
        "--g",
        "0.3",
        "--tmag",
        "0.4,0.9",
        "--grid",
        "17",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains('\r'));
    assert!(text
        .starts_with("g,tmag,theta_t,phi_s,n_s1_closed,n_s2_closed,n_s1_pipeline,n_s2_pipeline\n"));
    assert!(text.contains("\n# max_abs_discrepancy,"));
    let (_, rows) = table(&a);
    assert_eq!(rows.len(), 34);
}

#[test]
fn full_transmission_darkens_one_port() {
    let phi = format!("{FRAC_PI_2}");
    let (h, rows) = table(&run(&[
        "photocurrent",
        "--g",
        "0.8",
        "--tmag",
        "1",
        "--phi-s",
        &phi,
    ]));
    assert!(rows[0][col(&h, "n_s1_closed")].abs() < 1e-12);
    assert!(rows[0][col(&h, "n_s1_pipeline")].abs() < 1e-12);
}

#[test]
fn opaque_object_gives_flat_lines() {
    let (h, rows) = table(&run(&[
        "photocurrent",
        "--g",
        "0.6",
        "--tmag",
        "0",
        "--grid",
        "9",
    ]));
    let flat = 0.6f64.sinh().powi(2);
    for r in rows {
        for c in [
            "n_s1_closed",
            "n_s2_closed",
            "n_s1_pipeline",
            "n_s2_pipeline",
        ] {
            assert!((r[col(&h, c)] - flat).abs() < 1e-12);
        }
    }
}

#[test]
fn oracle_columns_track_the_pipeline() {
    let out = run(&[
        "photocurrent",
        "--g",
        "0.2",
        "--tmag",
        "0.7",
        "--theta-t",
        "0.3",
        "--phi-s",
        "0,2",
        "--oracle",
    ]);
    let (h, rows) = table(&out);
    for r in rows {
        assert!((r[col(&h, "n_s1_oracle")] - r[col(&h, "n_s1_closed")]).abs() < 1e-6);
        assert!((r[col(&h, "n_s2_oracle")] - r[col(&h, "n_s2_closed")]).abs() < 1e-6);
    }
}

#[test]
fn coherence_rows_respect_bounds() {
    let (h, rows) = table(&run(&["coherence"]));
    assert_eq!(rows.len(), 4 * 101);
    let (gc, gw, fl) = (
        col(&h, "gamma_closed"),
        col(&h, "gamma_wiseman"),
        col(&h, "floor"),
    );
    for r in &rows {
        assert!(r[gc] >= r[fl] - 1e-12);
        assert!(r[gc] <= r[gw] + 1e-12);
        if r[col(&h, "tmag")] == 1.0 {
            assert!((r[gc] - 1.0).abs() < 1e-12 && (r[gw] - 1.0).abs() < 1e-12);
        }
    }
    let g = format!("{}", 4.48f64.ln());
    let (h, rows) = table(&run(&["coherence", "--g", &g]));
    let gc = col(&h, "gamma_closed");
    assert!(rows.windows(2).all(|w| w[1][gc] >= w[0][gc]));
}

#[test]
fn coherence_rejects_non_positive_gain() {
    let out = run(&["coherence", "--g", "-0.99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even in g"));
}

#[test]
fn qfi_leading_term_limits() {
    let (h, rows) = table(&run(&[
        "qfi", "--g", "0.5", "--tmag", "0", "--grid", "5", "--beta", "1.3",
    ]));
    assert!(rows.iter().all(|r| r[col(&h, "qfi_leading")] == 0.0));

    let g: f64 = 0.7;
    let beta: f64 = 1.4;
    let theta = format!("{FRAC_PI_2}");
    let out = run(&[
        "qfi", "--g", "0.7", "--tmag", "1", "--theta", &theta, "--beta", "1.4",
    ]);
    let (h, rows) = table(&out);
    let s = 2f64.sqrt() * g;
    let want = 0.5 * beta * beta * (s.cosh() - 1.0).powi(2) * (1.0 + (2.0 * s).exp());
    assert!((rows[0][col(&h, "qfi_leading")] - want).abs() < 1e-12 * want);
}

#[test]
fn covariance_dump_is_json() {
    let out = run(&[
        "covariance",
        "--g",
        "0.4",
        "--tmag",
        "0.5",
        "--theta-t",
        "0.2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rec = &v["records"][0];
    assert_eq!(rec["pre"]["M"], 4);
    assert_eq!(rec["post"]["cov"].as_array().unwrap().len(), 8);
    assert_eq!(rec["closed_form"].as_array().unwrap().len(), 8);
    assert!(rec["max_abs_discrepancy"].as_f64().unwrap() >= 0.0);
    assert_eq!(
        run(&["covariance", "--format", "csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_report_and_exit_code_agree() {
    let out = run(&["verify"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let passed = v["passed"].as_bool().unwrap();
    assert_eq!(out.status.code(), Some(if passed { 0 } else { 1 }));
    let checks = v["checks"].as_array().unwrap();
    for id in ["6", "7d"] {
        let c = checks.iter().find(|c| c["id"] == id).unwrap();
        assert_eq!(c["status"], "skipped");
    }
    let s = checks.iter().find(|c| c["id"] == "S").unwrap();
    assert_eq!(s["status"], "pass");
}

#[test]
fn wrong_convention_fails_the_structure_check() {
    let out = run(&["verify", "--debug-wrong-convention"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let s = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "S")
        .unwrap()
        .clone();
    assert_eq!(s["status"], "fail");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["photocurrent", "--nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["photocurrent", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["photocurrent", "--tmag", "1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["qfi", "--beta", "-1"]).status.code(), Some(2));
}

#[test]
fn config_file_and_out_path() {
    let dir = std::env::temp_dir().join(format!("squeeze-net-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("sweep.toml");
    let dest = dir.join("out.json");
    std::fs::write(
        &cfg,
        format!(
            "g = 0.5\ntmag = [0.2, 0.8]\ngrid = 3\nformat = \"json\"\nout = {:?}\n",
            dest
        ),
    )
    .unwrap();
    let out = run(&[
        "photocurrent",
        "--config",
        cfg.to_str().unwrap(),
        "--tmag",
        "0.3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&dest).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["tmag"] == 0.3 && r["g"] == 0.5));
    std::fs::remove_dir_all(&dir).ok();
}
