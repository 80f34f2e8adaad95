//! End-to-end command tests: exit codes, file round-trips and output
//! determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qcas_core::Tolerances;

fn qcas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcas"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn coherence_pure_state_is_one() {
    let out = qcas(&["coherence", &fixture("qubit_pure_plus.json"), "--measure", "frobenius"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("frobenius: 1.00000000000"));
}

#[test]
fn coherence_bloch_half() {
    let out = qcas(&["coherence", &fixture("qubit_s05.json"), "--measure", "frobenius"]);
    assert!(stdout(&out).contains("frobenius: 0.500000000000"));
}

#[test]
fn coherence_mixed_qutrit_all_zero() {
    let out = qcas(&["coherence", &fixture("rho_star_d3.json"), "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("frobenius: 0.000000000000"));
    assert!(text.contains("bz: 0.000000000000"));
}

#[test]
fn exit_code_2_on_parse_failure() {
    let dir = std::env::temp_dir().join("qcas-cli-test-parse");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2, \"matrix\": [[[1,0]]]}").unwrap();
    let out = qcas(&["coherence", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let invalid = dir.join("not_a_state.json");
    std::fs::write(
        &invalid,
        "{\"dim\": 2, \"matrix\": [[[0.9,0],[0,0]],[[0,0],[0.9,0]]]}",
    )
    .unwrap();
    let out = qcas(&["coherence", invalid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_3_on_inapplicable_measure() {
    let out = qcas(&["coherence", &fixture("rho_star_d3.json"), "--measure", "relent"]);
    assert_eq!(out.status.code(), Some(3));
    let out = qcas(&["coherence", &fixture("rho_star_d3.json"), "--measure", "p2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = qcas(&["asymmetry", &fixture("rho_star_d3.json"), "--group", "su2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_3_on_oversized_quadrature_grid() {
    // Three independent factors at 16 nodes per angle exceed the
    // evaluation cap; the caller must switch to Monte Carlo.
    let dir = std::env::temp_dir().join("qcas-cli-test-grid");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ghz8.json");
    let third = 1.0 / 8.0;
    let rows: Vec<Vec<[f64; 2]>> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| if i == j { [third, 0.0] } else { [0.0, 0.0] })
                .collect()
        })
        .collect();
    let doc = serde_json::json!({"dim": 8, "matrix": rows});
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = qcas(&[
        "asymmetry",
        path.to_str().unwrap(),
        "--group",
        "independent",
        "--method",
        "quadrature",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_4_on_nonunital_precondition() {
    let out = qcas(&["channel", &fixture("amplitude_damping_03.json"), "--spectral-gap"]);
    assert_eq!(out.status.code(), Some(4));
    let out = qcas(&[
        "channel",
        &fixture("amplitude_damping_03.json"),
        "--entropy-production",
        &fixture("qubit_s05.json"),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn channel_cohering_power_matches_damping() {
    let out = qcas(&["channel", &fixture("amplitude_damping_03.json"), "--cohering-power"]);
    assert!(stdout(&out).contains("cohering_power: 0.300000000000"));
    let out = qcas(&["channel", &fixture("depolarizing_05.json"), "--unital"]);
    assert!(stdout(&out).contains("unital: true"));
    let out = qcas(&["channel", &fixture("phase_damping_04.json"), "--unital"]);
    assert!(stdout(&out).contains("unital: true"));
}

#[test]
fn entropy_production_report_matches_hand_value() {
    let out = qcas(&[
        "channel",
        &fixture("hadamard_measurement.json"),
        "--entropy-production",
        &fixture("qubit_diag_09_01.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("slack 0.208064207168"), "{text}");
    assert!(text.contains("gamma 1.00000000000"), "{text}");
}

#[test]
fn asymmetry_examples() {
    let out = qcas(&["asymmetry", &fixture("qubit_pure_plus.json"), "--group", "su2"]);
    assert!(stdout(&out).contains("asymmetry (analytic): 0.250000000000"));

    let out = qcas(&[
        "asymmetry",
        &fixture("singlet.json"),
        "--group",
        "collective",
        "--method",
        "quadrature",
    ]);
    assert!(stdout(&out).contains("asymmetry (quadrature, 16 nodes per angle): 0.000000000000"));
}

#[test]
fn json_output_carries_full_precision() {
    let out = qcas(&[
        "--json",
        "coherence",
        &fixture("qubit_s05.json"),
        "--measure",
        "frobenius",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = value["measures"]["frobenius"].as_f64().unwrap();
    assert!((c - 0.5).abs() < 1e-14);
}

#[test]
fn verify_unknown_suite_fails() {
    let out = qcas(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_passes_and_is_deterministic() {
    let run = || qcas(&["--seed", "9", "verify", "coherence", "--cases", "25"]);
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("RESULT: PASS"));
}

#[test]
fn sweep_writes_expected_columns() {
    let dir = std::env::temp_dir().join("qcas-cli-test-sweep");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path: PathBuf = dir.join("asym.csv");
    let out = qcas(&[
        "sweep",
        "asymmetry-vs-s",
        "--steps",
        "11",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&out_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "s,analytic,quadrature,abs_diff");
    for line in lines {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let s = cells[0];
        let expect = 0.5 - 1.0 / (2.0 * (1.0 + s * s));
        assert!((cells[1] - expect).abs() < 1e-15);
        assert!((cells[2] - expect).abs() < 1e-10);
    }

    let out = qcas(&["sweep", "cohering-vs-gamma", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn state_and_channel_files_round_trip() {
    // Everything the tool writes re-parses to the same object; JSON f64
    // serialization is exact, so equality holds entrywise.
    let dir = std::env::temp_dir().join("qcas-cli-test-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();

    for name in ["qubit_s05.json", "singlet.json", "rho_star_d3.json"] {
        let src = PathBuf::from(fixture(name));
        let rho = qcas_cli::io::read_state(&src, &Tolerances::DEFAULT).unwrap();
        let dst = dir.join(name);
        qcas_cli::io::write_state(&dst, &rho).unwrap();
        let back = qcas_cli::io::read_state(&dst, &Tolerances::DEFAULT).unwrap();
        let diff = (back.matrix() - rho.matrix()).frobenius_norm();
        assert!(diff < 1e-15, "{name}: {diff}");
    }
    for name in ["amplitude_damping_03.json", "hadamard_measurement.json"] {
        let src = PathBuf::from(fixture(name));
        let ch = qcas_cli::io::read_channel(&src, &Tolerances::DEFAULT).unwrap();
        let dst = dir.join(name);
        qcas_cli::io::write_channel(&dst, &ch).unwrap();
        let back = qcas_cli::io::read_channel(&dst, &Tolerances::DEFAULT).unwrap();
        for (a, b) in ch.kraus().iter().zip(back.kraus()) {
            assert!((a - b).frobenius_norm() < 1e-15);
        }
    }
}
