//! End-to-end tests of the `cuspidal` binary: exit codes, the machine
//! format round trip, and determinism of the parallel search.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspidal"))
        .args(args)
        .output()
        .expect("binary runs")
}

const D17: &str = r#"{"degree":17,"cusps":[{"newton_pairs":[[2,7],[4,17]]}]}"#;
const Q37: &str = r#"{"degree":5,"cusps":[{"newton_pairs":[[3,7]]}]}"#;

#[test]
fn gate_exit_codes() {
    assert_eq!(run(&["dp-check", D17]).status.code(), Some(0));
    assert_eq!(run(&["dp-check", Q37]).status.code(), Some(1));
    assert_eq!(run(&["pipeline", D17]).status.code(), Some(1));
    assert_eq!(run(&["spectrum-check", D17]).status.code(), Some(1));
    assert_eq!(run(&["spectrum-check", Q37]).status.code(), Some(0));
    assert_eq!(
        run(&["compare-roots", "--surgery", "5:2,13", "--brieskorn", "5"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["compare-roots", "--surgery", "5:3,7", "--brieskorn", "5"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn invalid_input_exit_codes() {
    assert_eq!(run(&["dp-check", r#"{"degree":17}"#]).status.code(), Some(2));
    assert_eq!(run(&["dp-check", "{not json"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["dp-check"]).status.code(), Some(2));
    // spectrum data cannot come from generators alone
    let gens_only = r#"{"degree":17,"cusps":[{"semigroup_generators":[8,28,73]}]}"#;
    let out = run(&["spectrum-check", gens_only]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("newton_pairs"));
    // curve-check without a resolvable stabilizer needs --assume-stab0
    let quintic = r#"{"degree":5,"cusps":[{"newton_pairs":[[4,5]]}]}"#;
    assert_eq!(run(&["curve-check", quintic]).status.code(), Some(2));
    assert_eq!(
        run(&["curve-check", quintic, "--assume-stab0"]).status.code(),
        Some(0)
    );
}

#[test]
fn machine_roundtrip_branch_invariants() {
    let out = run(&["branch-invariants", "--format=machine", D17]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("machine output is one JSON record");
    assert_eq!(parsed["report"], "branch-invariants");
    assert_eq!(parsed["degree"], 17);
    let cusp = &parsed["cusps"][0];
    assert_eq!(cusp["generators"], serde_json::json!([8, 28, 73]));
    assert_eq!(cusp["delta"], 120);
    assert_eq!(cusp["mu"], 240);
    assert_eq!(cusp["conductor"], 240);
    assert_eq!(
        cusp["multiplicity_sequence"],
        serde_json::json!([[8, 3], [4, 6], [1, 4]])
    );
    assert_eq!(cusp["omega"], 4);
    assert_eq!(cusp["tau_es"], 162);
    assert_eq!(cusp["mbar"], 42);
    // the descriptor fields re-parse to the identical input
    assert_eq!(cusp["newton_pairs"], serde_json::json!([[2, 7], [4, 17]]));
    let rt: cuspidal::cli::CurveDescriptor = serde_json::from_str(D17).unwrap();
    let wire = serde_json::to_value(&rt).unwrap();
    assert_eq!(wire["cusps"][0]["newton_pairs"], cusp["newton_pairs"]);
}

#[test]
fn machine_sw_record() {
    let cubic = r#"{"degree":3,"cusps":[{"newton_pairs":[[2,3]]}]}"#;
    let out = run(&["sw", "--format=machine", cubic]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["torsion"], "4/9");
    assert_eq!(parsed["casson_walker"], "-11/12");
    assert_eq!(parsed["sw_surgery"], "3/4");
    assert_eq!(parsed["sw_root"], "3/4");
    assert_eq!(parsed["agree"], true);
}

#[test]
fn search_deterministic_across_workers_and_runs() {
    let base = run(&["search", "--d-max=10", "--workers=1", "--format=machine"]);
    assert_eq!(base.status.code(), Some(0));
    for workers in ["2", "5"] {
        let out = run(&["search", "--d-max=10", &format!("--workers={workers}"), "--format=machine"]);
        assert_eq!(out.stdout, base.stdout, "workers = {workers}");
    }
    let again = run(&["search", "--d-max=10", "--workers=1", "--format=machine"]);
    assert_eq!(again.stdout, base.stdout, "repeat run");
}

#[test]
fn graded_root_dot_output() {
    let out = run(&["graded-root", "--surgery", "5:2,13", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("tau = [0, 1, -5, -2, -5, 1, 0]"));
    assert!(text.contains("graph graded_root {"));
    assert!(text.contains("chi=-5"));
}

#[test]
fn pipeline_reports_failing_l() {
    let out = run(&["pipeline", "--format=machine", D17]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["dp"], true);
    assert_eq!(parsed["semicontinuity"], false);
    assert_eq!(parsed["semicontinuity_failures"], serde_json::json!([12]));
}
