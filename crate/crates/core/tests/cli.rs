//! End-to-end tests of the `msi-noise` binary: verbs, exit codes, and the
//! preset round trip.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use msi_noise::{
    budget::{self, BudgetOptions, ChannelKind, Damping},
    config::SystemConfig,
    output, TABLE_I_CONFIG,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_msi-noise"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn write_preset(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("tableI.cfg");
    fs::write(&path, TABLE_I_CONFIG).unwrap();
    path
}

#[test]
fn preset_prints_the_bundled_config() {
    let output = run(&["preset", "tableI"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), TABLE_I_CONFIG);
}

#[test]
fn unknown_preset_is_a_usage_error() {
    let output = run(&["preset", "tableXVII"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("tableXVII"));
}

#[test]
fn preset_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    // pipe `preset tableI` into a config file
    let preset = run(&["preset", "tableI"]);
    let cfg_path = dir.path().join("roundtrip.cfg");
    fs::write(&cfg_path, preset.stdout).unwrap();

    let out_path = dir.path().join("budget.csv");
    let output = run(&[
        "budget",
        "--config",
        cfg_path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let from_cli = fs::read(&out_path).unwrap();

    // the built-in preset run, emitted through the library
    let cfg = SystemConfig::table_i();
    let options = BudgetOptions {
        sr_enabled: true,
        damping: Damping::Both,
        channels: ChannelKind::ALL.to_vec(),
    };
    let spectrum = budget::compute_budget(
        &cfg.grid,
        &cfg.optics,
        &cfg.membrane,
        &cfg.recycling,
        &options,
    )
    .unwrap();
    let mut from_lib = Vec::new();
    output::write_csv(&mut from_lib, &spectrum).unwrap();
    assert_eq!(from_cli, from_lib);

    // and deterministic across runs
    let again = run(&["budget", "--config", cfg_path.to_str().unwrap()]);
    assert!(again.status.success());
    assert_eq!(again.stdout, from_lib);
}

#[test]
fn budget_csv_layout_and_sr_toggle() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path());
    let on = run(&["budget", "--config", cfg.to_str().unwrap()]);
    assert!(on.status.success());
    let text = stdout(&on);
    assert!(
        text.starts_with("frequency_hz,shot,rad,thermal_viscous,thermal_structural,total,sql\n")
    );
    assert_eq!(text.lines().count(), 1001);

    let off = run(&["budget", "--config", cfg.to_str().unwrap(), "--sr", "off"]);
    assert!(off.status.success());
    assert_ne!(stdout(&off), text);
}

#[test]
fn budget_json_document() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path());
    let output = run(&[
        "budget",
        "--config",
        cfg.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(doc["frequency_hz"].as_array().unwrap().len(), 1000);
    assert_eq!(doc["params"]["power_at_bs"], 1.0);
    assert!(doc["shot"].is_array());
    assert!(doc["total"].is_array());
}

#[test]
fn invalid_config_lists_violations_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cfg");
    fs::write(
        &path,
        TABLE_I_CONFIG
            .replace("membrane.R = 0.35", "membrane.R = 1.2")
            .replace("membrane.m_eff = 1.25e-10", "membrane.m_eff = -1.0"),
    )
    .unwrap();
    let output = run(&["budget", "--config", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let diagnostics = stderr(&output);
    assert!(diagnostics.contains("membrane.R"));
    assert!(diagnostics.contains("membrane.m_eff"));
    assert!(output.stdout.is_empty());
}

#[test]
fn missing_config_file_exits_2() {
    let output = run(&["budget", "--config", "/nonexistent/nowhere.cfg"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_verb_and_flag_exit_2_with_usage() {
    let output = run(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).to_lowercase().contains("usage"));

    let output = run(&["verify", "--entropy", "11"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let output = run(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("budget"));
}

#[test]
fn verify_reports_and_passes() {
    let output = run(&["verify", "--draws", "200"]);
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("force psd vs closed form"));
    assert!(text.contains("energy conservation"));
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
    // deterministic seed: identical output on a second run
    let again = run(&["verify", "--draws", "200"]);
    assert_eq!(again.stdout, output.stdout);
}

#[test]
fn solve_power_emits_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path());
    let output = run(&[
        "solve-power",
        "--config",
        cfg.to_str().unwrap(),
        "--ratio",
        "2",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let p_bs = doc["power_at_bs_w"].as_f64().unwrap();
    assert!((p_bs - 1.0).abs() < 0.02);
}

#[test]
fn solve_thermal_emits_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path());
    let output = run(&[
        "solve-thermal",
        "--config",
        cfg.to_str().unwrap(),
        "--T",
        "300",
        "--Q",
        "1e6",
        "--margin",
        "4.226310487937403",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let p_bs = doc["power_at_bs_w"].as_f64().unwrap();
    assert!((p_bs / 3000.0 - 1.0).abs() < 0.01);
}

#[test]
fn sweep_emits_one_row_per_value() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path());
    let output = run(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--param",
        "power_at_bs",
        "--values",
        "1,4",
        "--f-eval",
        "1000",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("value,shot,rad,"));
    let cell =
        |line: &str, col: usize| -> f64 { line.split(',').nth(col).unwrap().parse().unwrap() };
    // rad doubles, shot halves when the power quadruples
    assert!((cell(lines[2], 2) / cell(lines[1], 2) - 2.0).abs() < 1e-6);
    assert!((cell(lines[2], 1) / cell(lines[1], 1) - 0.5).abs() < 1e-6);
}

#[test]
fn sweep_unknown_param_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path());
    let output = run(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--param",
        "membrane.colour",
        "--values",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("membrane.colour"));
}
