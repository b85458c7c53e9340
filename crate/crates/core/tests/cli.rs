use std::process::{Command, Output};

use hfnorm::matrices::{build_r_circulant, RCirculantSpec, RowKind};
use hfnorm::multiplier::Multiplier;
use hfnorm::norms::frobenius_norm;
use serde_json::Value;

fn hfnorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfnorm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn build_then_frobenius_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let p = path.to_str().unwrap();
    for (kind, k, r) in [
        ("harmonic", "1", "2"),
        ("hyperharmonic", "3", "1+i"),
        ("fib-harmonic", "1", "-1/3"),
    ] {
        let out = hfnorm(&[
            "build", "--kind", kind, "--n", "9", "--k", k, "--r", r, "--output", p,
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let norm = hfnorm(&["norm", "--input", p, "--method", "frobenius"]);
        assert!(norm.status.success());
        let row_kind = match kind {
            "harmonic" => RowKind::HarmonicFib,
            "hyperharmonic" => RowKind::HyperharmonicFib { level: 3 },
            _ => RowKind::FibTimesHarmonic,
        };
        let r: Multiplier = r.parse().unwrap();
        let m = build_r_circulant(&RCirculantSpec::new(9, r.value(), row_kind).unwrap()).unwrap();
        let expected = frobenius_norm(&m).unwrap().value;
        assert_eq!(json(&norm)["value"].as_f64().unwrap(), expected, "{kind}");
    }
}

#[test]
fn norm_methods_agree_on_a_circulant() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    assert!(
        hfnorm(&["build", "--kind", "harmonic", "--n", "12", "--output", p])
            .status
            .success()
    );
    let values: Vec<f64> = ["dft", "power", "jacobi"]
        .iter()
        .map(|m| {
            json(&hfnorm(&["norm", "--input", p, "--method", m]))["value"]
                .as_f64()
                .unwrap()
        })
        .collect();
    for v in &values[1..] {
        assert!((v - values[0]).abs() <= 1e-9 * values[0]);
    }
}

#[test]
fn dft_rejects_non_circulant() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    assert!(
        hfnorm(&["build", "--kind", "harmonic", "--n", "5", "--r", "2", "--output", p])
            .status
            .success()
    );
    let out = hfnorm(&["norm", "--input", p, "--method", "dft"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("circulant"));
}

#[test]
fn hyperharmonic_sequence_example() {
    let out = hfnorm(&["seq", "--kind", "hyperharmonic", "--k", "2", "--n", "4"]);
    assert!(out.status.success());
    let values: Vec<String> = json(&out)["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|q| {
            format!(
                "{}/{}",
                q["num"].as_str().unwrap(),
                q["den"].as_str().unwrap()
            )
        })
        .collect();
    assert_eq!(values, ["0/1", "1/1", "3/1", "11/2", "25/3"]);
}

#[test]
fn full_table_json() {
    let out = hfnorm(&["seq", "--n-max", "5", "--k-max", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["fib"], serde_json::json!(["0", "1", "1", "2", "3", "5"]));
    assert!(v["hyper"][0][0].is_null());
    assert_eq!(v["hyper"][1][4]["num"], "17");
    assert_eq!(v["hyper"][1][4]["den"], "6");
}

#[test]
fn verify_single_theorem() {
    let out = hfnorm(&["verify", "--theorem", "3.3", "--n-max", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 16);
    assert!(reports
        .iter()
        .all(|r| r["passed"] == true && r["theorem_id"] == "T3_3" && r["seed"] == 42));
}

#[test]
fn verify_csv_and_custom_grid() {
    let out = hfnorm(&[
        "verify",
        "--theorem",
        "3.5",
        "--n-max",
        "4",
        "--k-max",
        "1",
        "--r-grid",
        "-2,1/3i",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("theorem_id,n,k,r,r_label,seed,case,closed_form"));
    assert_eq!(lines.count(), 8);
    assert!(text.contains("T3_5,4,1,-2+0i,-2,42"));
}

#[test]
fn verify_exact_limit_is_usage_error() {
    let out = hfnorm(&["verify", "--theorem", "3.1", "--n-max", "65"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("64"));
}

#[test]
fn bad_thread_count_is_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_hfnorm"))
        .args(["verify", "--theorem", "3.1", "--n-max", "2"])
        .env("HFNORM_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hfnorm"))
            .args(["verify", "--theorem", "3.8,3.9,l2.2", "--n-max", "16"])
            .env("HFNORM_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn jacobi_on_zero_scalar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.json");
    std::fs::write(&path, r#"{"rows":1,"cols":1,"entries":[[0.0,0.0]]}"#).unwrap();
    let out = hfnorm(&[
        "norm",
        "--input",
        path.to_str().unwrap(),
        "--method",
        "jacobi",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"].as_f64(), Some(0.0));
}

#[test]
fn malformed_matrix_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        "{\"rows\": 2,\n \"cols\": 2,\n \"entries\": [[1, 0], [2 0]]}",
    )
    .unwrap();
    let out = hfnorm(&[
        "norm",
        "--input",
        path.to_str().unwrap(),
        "--method",
        "frobenius",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");

    std::fs::write(&path, r#"{"rows":2,"cols":2,"entries":[[1,0]]}"#).unwrap();
    assert_eq!(
        hfnorm(&[
            "norm",
            "--input",
            path.to_str().unwrap(),
            "--method",
            "frobenius"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        hfnorm(&[
            "norm",
            "--input",
            "/nonexistent.json",
            "--method",
            "frobenius"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn oracle_scope_names_the_limit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let p = path.to_str().unwrap();
    assert!(
        hfnorm(&["build", "--kind", "harmonic", "--n", "65", "--output", p])
            .status
            .success()
    );
    let out = hfnorm(&["norm", "--input", p, "--method", "jacobi"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("64"));
}

#[test]
fn bench_rows() {
    let out = hfnorm(&["bench", "--n-list", "64,2048"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["n", "method", "millis", "value"]);
    let keys: Vec<(&str, &str)> = rows[1..].iter().map(|r| (r[0], r[1])).collect();
    assert_eq!(keys, [("64", "dft"), ("64", "jacobi"), ("2048", "dft")]);
    let a: f64 = rows[1][3].parse().unwrap();
    let b: f64 = rows[2][3].parse().unwrap();
    assert!((a - b).abs() <= 1e-9 * a);
}

#[test]
fn bench_values_repeat_exactly() {
    let value = || {
        let out = hfnorm(&["bench", "--n-list", "64"]);
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(value(), value());
}

#[test]
fn bounds_subcommand() {
    let out = hfnorm(&["bounds", "--n", "16", "--k", "2", "--r", "1/4@45"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["theorem_id"], "T3_8ii");
    assert!(v[0]["lower"].as_f64().unwrap() <= v[0]["independent"].as_f64().unwrap());
}
