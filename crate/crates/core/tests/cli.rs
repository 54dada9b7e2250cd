use std::process::{Command, Output};

use xop_zeros::lab::Report;
use xop_zeros::zeros::ZeroSet;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xop-zeros"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn zeros_json_round_trips_bit_exactly() {
    let o = run(&["zeros", "--family", "x1-jacobi", "--n", "2", "--alpha", "1", "--beta", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let set: ZeroSet = serde_json::from_str(&text).unwrap();
    assert!((set.regular[0] - 0.381966).abs() < 1e-6);
    assert!((set.exceptional[0] - 2.618034).abs() < 1e-6);
    assert_eq!(serde_json::to_string_pretty(&set).unwrap() + "\n", text);

    let direct = xop_zeros::zeros::find_zeros_x1_jacobi(2, &xop_zeros::xop::JacobiParams::new(1.0, 3.0).unwrap()).unwrap();
    assert_eq!(set, direct);
}

#[test]
fn zeros_schema_fields() {
    let o = run(&["zeros", "--family", "xm-laguerre-i", "--m", "4", "--n", "6", "--alpha", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["family", "m", "n", "alpha", "regular", "exceptional", "residuals", "tolerance"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["family"], "xm-laguerre-i");
    assert!(v.get("beta").is_none());
    let exc: Vec<f64> = serde_json::from_value(v["exceptional"].clone()).unwrap();
    for (a, b) in exc.iter().zip([-10.6643, -5.47132, -2.36155, -0.62239]) {
        assert!((a - b).abs() < 5e-5);
    }
}

#[test]
fn zeros_first_degree_laguerre() {
    let o = run(&["zeros", "--family", "x1-laguerre", "--n", "1", "--alpha", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "kind,value,residual\nexceptional,-2,0\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "thm1", "--alpha", "1", "--beta", "3", "--n-max", "12"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let t1 = run(&["table"]);
    let t2 = run(&["table"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn table_defaults() {
    let o = run(&["table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["k", "n=6", "n=10", "n=14", "limit"]);
    let rows: Vec<Vec<f64>> = rdr
        .records()
        .map(|r| r.unwrap().iter().map(|s| s.parse().unwrap()).collect())
        .collect();
    assert!((rows[0][1] + 0.62239).abs() < 5e-5);
    assert!((rows[3][3] + 10.2244).abs() < 5e-5);
    assert!((rows[1][4] + 1.74576).abs() < 5e-5);
}

#[test]
fn verify_report_schema_and_exit_codes() {
    let o = run(&["verify", "--suite", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.suite, "identities");
    assert!(r.all_passed && r.checks.iter().all(|c| c.passed));

    let o = run(&["verify", "--suite", "open-problem", "--m", "4", "--alpha", "1", "--n", "6,10,14"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.checks.len(), 1);
    assert!(r.checks[0].passed);

    // exploratory findings do not gate
    let o = run(&["verify", "--suite", "remark", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[FINDING]"));
}

#[test]
fn failed_check_exits_one() {
    // the Hermite limit misses the default cap at α = 1e4
    let o = run(&["limit", "--target", "hermite", "--n", "2", "--alphas", "1e2,1e3,1e4"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][0]["decreasing"], true);
    assert_eq!(v["passed"], false);

    let o = run(&["limit", "--target", "laguerre", "--n", "4", "--alpha", "1", "--betas", "1e2,1e3,1e4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["limit", "--target", "laguerre"],
        vec!["zeros", "--family", "x1-jacobi", "--n", "2", "--alpha", "1", "--beta", "1"],
        vec!["zeros", "--family", "x1-laguerre", "--n", "2"],
        vec!["zeros", "--family", "xm-laguerre-i", "--m", "4", "--n", "4", "--alpha", "1"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "open-problem", "--m", "1", "--n", "3,4"],
        vec!["table", "--tol", "1e-20"],
        vec!["oracle", "--family", "x1-laguerre", "--n", "11", "--alpha", "1"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("xop-zeros-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let o = run(&["table", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["m"], 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn oracle_command() {
    let o = run(&["oracle", "--family", "x1-jacobi", "--n", "6", "--alpha", "0.5", "--beta", "2.5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["max_abs_diff"].as_f64().unwrap() < 1e-8);
}
