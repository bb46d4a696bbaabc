//! End-to-end checks of the `gic` binary: flag handling, exit codes,
//! output formats and the documented CSV schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = gic(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("gic-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn classify_reports_regime() {
    let out = stdout_of(&[
        "classify", "--p1", "1", "--p2", "1", "--a12", "2", "--a21", "0.4",
    ]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p1,p2,a12,a21,kind,symmetric,description"
    );
    assert!(lines.next().unwrap().contains("Mixed"));

    let out = stdout_of(&["classify", "--p", "100", "--a", "0.5"]);
    assert!(out.contains("Weak"));
    assert!(out.contains("true"));
}

#[test]
fn classify_in_db() {
    // 20 dB -> P = 100
    let out = stdout_of(&["classify", "--p-db", "20", "--a", "0.5"]);
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("100.000000,100.000000,"));
}

#[test]
fn corners_weak_reference_row() {
    let out = stdout_of(&["corners", "--p", "100", "--a", "0.5"]);
    let row = out.lines().nth(1).unwrap();
    assert!(row.contains("0.290097"));
    assert!(row.contains("0.317310"));
    assert!(row.contains("etw"));
}

#[test]
fn corners_one_sided() {
    let out = stdout_of(&["corners", "--p", "100", "--a12", "0", "--a21", "0.5"]);
    let row = out.lines().nth(1).unwrap();
    assert!(row.contains("0.782990"));
    assert!(row.contains("0.496420"));
}

#[test]
fn domain_errors_exit_2() {
    // excess-rate bounds need a weak symmetric channel
    let out = gic(&["delta", "--p", "100", "--a", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    // missing gain
    let out = gic(&["classify", "--p", "100"]);
    assert_eq!(out.status.code(), Some(2));

    // nonsense power
    let out = gic(&["classify", "--p", "-3", "--a", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sumrate_symmetric_row() {
    let out = stdout_of(&[
        "sumrate", "--p", "20", "--a", "0.05", "--grid", "21", "--refine", "1",
    ]);
    let header = out.lines().next().unwrap();
    assert!(header.starts_with("p,a,etw_upper"));
    let row = out.lines().nth(1).unwrap();
    // TIN-exact sub-class: best upper and lower coincide at log2(11)
    assert!(row.contains("3.459432"));
    assert!(row.contains("true"));
}

#[test]
fn sumrate_sweep_schema() {
    let out = stdout_of(&[
        "sumrate",
        "--p",
        "10",
        "--a",
        "0.5",
        "--sweep-a",
        "0.2:0.4:0.1",
        "--grid",
        "11",
        "--refine",
        "1",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p,a,upper,lower,active_term");
    assert_eq!(lines.len(), 4); // header + 3 sweep points
    assert!(lines[1].starts_with("10.000000,0.200000,"));
}

#[test]
fn asymptotics_closed_forms_and_probe() {
    let out = stdout_of(&["asymptotics", "--alpha", "0.6667"]);
    let row = out.lines().nth(1).unwrap();
    let slope: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!((slope - 0.1667).abs() < 1e-3);

    let out = stdout_of(&["asymptotics", "--alpha", "1.5", "--probe-p", "10,100"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "alpha,p,upper_norm,lower_norm,delta_slope");
    assert!(lines[1].contains("0.000000"));
}

#[test]
fn figure_fig1_threshold_curve() {
    let out = stdout_of(&["figure", "fig1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "a,p_threshold_db");
    assert_eq!(lines.len(), 1 + 491);
    let at_02 = lines.iter().find(|l| l.starts_with("0.200000,")).unwrap();
    assert_eq!(*at_02, "0.200000,14.428782");
}

#[test]
fn figure_fig2_region_and_corners() {
    let out = stdout_of(&["figure", "fig2", "--p", "100", "--a", "0.5"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "kind,r1,r2");
    let corners: Vec<&&str> = lines.iter().filter(|l| l.starts_with("corner,")).collect();
    assert_eq!(corners.len(), 2);
    assert_eq!(*corners[0], "corner,3.329106,0.290097");
    assert_eq!(*corners[1], "corner,0.290097,3.329106");
    // boundary rows are ordered by increasing r1
    let mut prev = -1.0;
    for line in lines.iter().filter(|l| l.starts_with("boundary,")) {
        let r1: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!(r1 >= prev);
        prev = r1;
    }
}

#[test]
fn figure_fig2_constraint_export() {
    let out = stdout_of(&["figure", "fig2", "--constraints"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "tag,c1,c2,bound");
    assert_eq!(lines.len(), 8); // 7 constraints
    assert!(lines.contains(&"2r1_r2,2.000000,1.000000,6.975522"));

    let out = stdout_of(&["figure", "fig2", "--region", "kramer"]);
    assert_eq!(out.lines().count(), 1 + 1001);
}

#[test]
fn figure_fig3_gdof_curve() {
    let out = stdout_of(&["figure", "fig3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "alpha,gdof,delta_slope");
    assert_eq!(lines.len(), 1 + 501);
    assert!(lines.contains(&"0.500000,0.500000,0.000000"));
}

#[test]
fn figure_fig4_sweep_schema() {
    let out = stdout_of(&[
        "figure", "fig4", "--p", "50", "--a-min", "0.2", "--a-max", "0.4", "--a-step", "0.1",
        "--grid", "11", "--refine", "1",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "a,lower_simple,upper_simple,lower_improved,upper_improved,asymptotic_lower,asymptotic_upper"
    );
    assert_eq!(lines.len(), 4);
}

#[test]
fn json_format_preserves_keys() {
    let out = stdout_of(&["classify", "--p", "100", "--a", "0.5", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = &parsed.as_array().unwrap()[0];
    assert_eq!(row["kind"], "Weak");
    assert_eq!(row["symmetric"], true);
    assert_eq!(row["p1"], 100.0);
}

#[test]
fn csv_round_trip_is_byte_identical() {
    let path = temp_path("fig3.csv");
    stdout_of(&["figure", "fig3", "--out", path.to_str().unwrap()]);
    let emitted = std::fs::read_to_string(&path).unwrap();
    // parse and re-emit
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(emitted.as_bytes());
    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    for record in reader.records() {
        writer.write_record(record.unwrap().iter()).unwrap();
    }
    let re_emitted = String::from_utf8(writer.into_inner().unwrap()).unwrap();
    assert_eq!(emitted, re_emitted);
    std::fs::remove_file(&path).ok();
}

#[test]
fn outputs_are_deterministic() {
    let args = [
        "sumrate", "--p", "20", "--a", "0.05", "--grid", "21", "--refine", "2",
    ];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
}

#[test]
fn out_flag_writes_file_and_unwritable_path_fails() {
    let path = temp_path("classify.csv");
    stdout_of(&[
        "classify",
        "--p",
        "1",
        "--a",
        "0.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(std::fs::read_to_string(&path).unwrap().contains("Weak"));
    std::fs::remove_file(&path).ok();

    let out = gic(&["figure", "fig3", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(1));
}
