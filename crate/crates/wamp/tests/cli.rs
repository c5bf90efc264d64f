// Copyright 2026 The wamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! End-to-end tests of the `wamp` binary: output formats, determinism and
//! exit codes.

use std::process::{Command, Output};

fn wamp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wamp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

/// Extracts a named column from a two-line CSV document.
fn csv_field(text: &str, column: &str) -> String {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let row: Vec<&str> = lines.next().expect("row").split(',').collect();
    let position = header
        .iter()
        .position(|name| *name == column)
        .unwrap_or_else(|| panic!("column {column} missing"));
    row[position].to_string()
}

#[test]
fn simulate_reports_the_closed_form_statistics() {
    let output = wamp(&[
        "simulate", "--n", "3", "--t", "0.25", "--eta", "0.6", "--format", "csv",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);

    let eta_prime: f64 = csv_field(&text, "eta_prime_simulated").parse().unwrap();
    assert!((eta_prime - 0.45 / 0.55).abs() < 1e-9);
    let p_total: f64 = csv_field(&text, "p_total_simulated").parse().unwrap();
    assert!((p_total - 0.000537109375).abs() < 1e-12);
    let diff: f64 = csv_field(&text, "eta_prime_abs_diff").parse().unwrap();
    assert!(diff < 1e-9);
    let fidelity: f64 = csv_field(&text, "min_corrected_fidelity").parse().unwrap();
    assert!(fidelity >= 1.0 - 1e-10);
}

#[test]
fn simulate_gain_is_unity_at_half_transmission() {
    let output = wamp(&[
        "simulate", "--n", "3", "--t", "0.5", "--eta", "0.8", "--format", "csv",
    ]);
    assert!(output.status.success());
    let gain: f64 = csv_field(&stdout(&output), "gain_simulated")
        .parse()
        .unwrap();
    assert!((gain - 1.0).abs() < 1e-9);
}

#[test]
fn simulate_json_document_shape() {
    let output = wamp(&["simulate", "--n", "2", "--t", "0.5", "--eta", "0.2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    for key in [
        "\"simulated\"",
        "\"analytic\"",
        "\"abs_difference\"",
        "\"eta_prime\"",
        "\"gain\"",
        "\"uniformity_residual_signal\"",
        "\"min_corrected_fidelity\"",
    ] {
        assert!(text.contains(key), "missing {key} in:\n{text}");
    }
    // 17-significant-digit serialization.
    assert!(text.contains("\"t\": 5.0000000000000000e-1"));
}

#[test]
fn identical_requests_are_byte_identical() {
    let args = [
        "simulate", "--n", "2", "--t", "0.3", "--eta", "0.2", "--alpha", "0.6,0", "--beta",
        "0,0.8",
    ];
    let first = wamp(&args);
    let second = wamp(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_errors_exit_with_code_two() {
    // Transmission endpoints degenerate the protocol.
    let output = wamp(&["simulate", "--n", "3", "--t", "1.0", "--eta", "0.6"]);
    assert_eq!(output.status.code(), Some(2));

    // Mis-normalized amplitudes are refused, not rescaled.
    let output = wamp(&[
        "simulate", "--n", "3", "--t", "0.25", "--eta", "0.6", "--alpha", "0.7071,0", "--beta",
        "0.7071,0",
    ]);
    assert_eq!(output.status.code(), Some(2));

    // Unknown flags are clap usage errors.
    let output = wamp(&["simulate", "--n", "3", "--t", "0.25", "--bogus", "1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_writes_ordered_csv_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.csv");
    let output = wamp(&[
        "sweep",
        "--n",
        "3,4",
        "--t-grid",
        "0.1:0.9:0.2",
        "--eta",
        "0.2,0.8",
        "--simulate",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,t,eta,p1,p2,p_total,eta_prime,gain,source"
    );
    // 2 n × 2 eta × 5 t × 2 sources.
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 40);
    assert!(rows[0].ends_with(",analytic"));
    assert!(rows[1].ends_with(",simulated"));

    // n=4 rows sit below n=3 rows in p_total at matching (t, eta).
    let parse = |row: &str| -> Vec<String> { row.split(',').map(str::to_string).collect() };
    let p_total_of = |n: &str, t: &str, eta: &str, source: &str| -> f64 {
        rows.iter()
            .map(|r| parse(r))
            .find(|f| f[0] == n && f[1].starts_with(t) && f[2].starts_with(eta) && f[8] == source)
            .map(|f| f[5].parse().unwrap())
            .unwrap_or_else(|| panic!("row not found"))
    };
    assert!(
        p_total_of("4", "5.000", "2.000", "simulated")
            < p_total_of("3", "5.000", "2.000", "simulated")
    );
}

#[test]
fn sweep_without_out_prints_to_stdout() {
    let output = wamp(&["sweep", "--n", "2", "--t-grid", "0.5", "--eta", "0.2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("n,t,eta,"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn worker_count_does_not_change_the_output() {
    let args = [
        "sweep", "--n", "2,3", "--t-grid", "0.2,0.5", "--eta", "0.2,0.8", "--simulate",
    ];
    let parallel = wamp(&args);
    let serial = Command::new(env!("CARGO_BIN_EXE_wamp"))
        .args(args)
        .env("WAMP_WORKERS", "1")
        .output()
        .expect("binary runs");
    assert!(parallel.status.success());
    assert!(serial.status.success());
    assert_eq!(parallel.stdout, serial.stdout);
}

#[test]
fn sweep_to_unwritable_path_exits_with_code_four() {
    let output = wamp(&[
        "sweep",
        "--n",
        "2",
        "--t-grid",
        "0.5",
        "--eta",
        "0.2",
        "--out",
        "/nonexistent-dir/fig.csv",
    ]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn verify_passes_and_reports_each_check() {
    let output = wamp(&["verify", "--max-n", "2"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    for name in [
        "branch_probability_identities",
        "fidelity_formula",
        "gain_curves",
        "pattern_uniformity",
        "physics_properties",
    ] {
        assert!(
            text.contains(&format!("PASS {name}")),
            "missing PASS for {name} in:\n{text}"
        );
    }
    // Checks pinned to larger party counts are skipped, not failed.
    assert!(text.contains("SKIP correction_completeness"));
    assert!(text.contains("all checks passed"));
}

#[test]
fn verify_with_impossible_tolerance_fails_with_code_three() {
    let output = wamp(&["verify", "--max-n", "2", "--tolerance", "1e-30"]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stdout(&output).contains("FAIL fidelity_formula"));
}
