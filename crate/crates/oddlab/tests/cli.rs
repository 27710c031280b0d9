//! End-to-end tests driving the installed binary: exit codes, text output,
//! JSON shape, and the environment-variable guard.

use std::process::{Command, Output};

fn oddlab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oddlab"))
}

fn run(args: &[&str]) -> Output {
    oddlab().args(args).output().expect("binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout_of(args: &[&str]) -> String {
    let output = run(args);
    assert_eq!(
        code(&output),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn json_of(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout_of(args)).expect("stdout parses as JSON")
}

#[test]
fn help_exits_zero_and_names_subcommands() {
    let output = run(&["--help"]);
    assert_eq!(code(&output), 0);
    let text = String::from_utf8(output.stdout).unwrap();
    for name in ["seq", "df", "zeta", "xfun", "claims", "goldbach"] {
        assert!(text.contains(name), "help is missing {name}");
    }
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let output = run(&[]);
    assert_eq!(code(&output), 64);
    assert!(!stderr_of(&output).is_empty());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let output = run(&["seq", "--bogus"]);
    assert_eq!(code(&output), 64);
}

#[test]
fn seq_text_prints_small_terms() {
    let text = stdout_of(&["seq", "--max", "3"]);
    assert!(text.contains("P_n"), "missing header: {text}");
    assert!(text.contains("5.390358e-2"), "missing a_3: {text}");
}

#[test]
fn seq_survives_far_beyond_native_floats() {
    let text = stdout_of(&["seq", "--max", "10000"]);
    assert!(text.contains("1.995063e3010"), "missing 2^10000: {text}");
}

#[test]
fn seq_rejects_zero_and_oversized_max() {
    assert_eq!(code(&run(&["seq", "--max", "0"])), 64);
    assert_eq!(code(&run(&["seq", "--max", "10001"])), 64);
}

#[test]
fn seq_json_rows_carry_scientific_strings() {
    let value = json_of(&["--format", "json", "seq", "--max", "3"]);
    assert_eq!(value["max"], 3);
    let rows = value["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["n"], 3);
    assert_eq!(rows[2]["p_n"], 5);
    let a_n = rows[2]["a_n"].as_str().unwrap();
    assert!(a_n.starts_with("5.39035759926837"), "a_3 was {a_n}");
    let identity = rows[2]["a_exp_p"].as_str().unwrap();
    let pow2 = rows[2]["pow2"].as_str().unwrap();
    assert_eq!(identity, pow2, "identity and power disagree in print");
}

#[test]
fn df_text_reports_value_and_interval() {
    let text = stdout_of(&["df", "--s", "2"]);
    assert!(text.contains("7.926422e-1"), "value line: {text}");
    assert!(text.contains("interval = ["), "interval line: {text}");
}

#[test]
fn df_json_value_matches_library() {
    let value = json_of(&["--format", "json", "df", "--s", "2"]);
    let got = value["value"].as_f64().unwrap();
    let want = 0.79264223919213172;
    assert!((got - want).abs() / want < 1e-12, "value {got}");
    assert_eq!(value["terms_used"], 64);
    let interval = value["interval"].as_array().unwrap();
    assert!(interval[0].as_f64().unwrap() <= want);
    assert!(interval[1].as_f64().unwrap() >= want);
}

#[test]
fn df_reports_uncertifiable_tails_as_evaluation_errors() {
    let output = run(&["df", "--s", "-200", "--terms", "4"]);
    assert_eq!(code(&output), 1);
    assert!(
        stderr_of(&output).contains("tail"),
        "stderr: {}",
        stderr_of(&output)
    );
}

#[test]
fn df_rejects_non_numeric_s() {
    assert_eq!(code(&run(&["df", "--s", "abc"])), 64);
}

#[test]
fn zeta_direct_and_euler_agree_on_basel() {
    let direct = stdout_of(&["zeta", "--s", "2"]);
    assert!(direct.contains("1.644934e0"), "direct: {direct}");
    let euler = stdout_of(&["zeta", "--s", "2", "--method", "euler", "--terms", "100000"]);
    assert!(euler.contains("1.644933e0"), "euler: {euler}");
    assert!(euler.contains("used     = 9592"), "euler primes: {euler}");
}

#[test]
fn zeta_rejects_the_pole() {
    let output = run(&["zeta", "--s", "1"]);
    assert_eq!(code(&output), 1);
    assert!(!stderr_of(&output).is_empty());
}

#[test]
fn negative_arguments_reach_the_library_as_domain_errors() {
    assert_eq!(code(&run(&["zeta", "--s", "-1"])), 1);
    assert_eq!(code(&run(&["xfun", "--s", "-0.5"])), 1);
}

#[test]
fn zeta_text_value_round_trips_through_json() {
    let text = stdout_of(&["zeta", "--s", "3"]);
    let value = json_of(&["--format", "json", "zeta", "--s", "3"]);
    let printed = format!("{:.6e}", value["value"].as_f64().unwrap());
    assert!(text.contains(&printed), "text {text} vs json {printed}");
}

#[test]
fn xfun_prints_both_variants() {
    let printed = stdout_of(&["xfun", "--s", "2", "--variant", "printed"]);
    assert!(printed.contains("6.678529e-1"), "printed: {printed}");
    let shifted = stdout_of(&["xfun", "--s", "2", "--variant", "shifted"]);
    assert!(shifted.contains("4.452352e-1"), "shifted: {shifted}");
}

#[test]
fn xfun_rejects_the_gamma_pole_at_zero() {
    assert_eq!(code(&run(&["xfun", "--s", "0"])), 1);
}

#[test]
fn claims_verify_text_summarizes_the_audit() {
    let text = stdout_of(&["claims", "verify"]);
    assert!(
        text.contains("6 hold, 7 fail of 13 verdicts"),
        "summary line: {text}"
    );
    assert!(text.contains("C7"), "verdict rows: {text}");
}

#[test]
fn claims_verify_json_has_the_frozen_shape() {
    let value = json_of(&["--format", "json", "claims", "verify"]);
    assert_eq!(value["version"], 1);
    let verdicts = value["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 13);
    let shifted = verdicts
        .iter()
        .find(|v| v["claim_id"] == "C7" && v["variant"] == "ShiftedDenominator")
        .expect("C7 variant present");
    assert_eq!(shifted["verdict"], "holds");
    let as_printed = verdicts
        .iter()
        .find(|v| v["claim_id"] == "C7" && v["variant"] == "AsPrinted")
        .expect("C7 variant present");
    assert_eq!(as_printed["verdict"], "fails");
}

#[test]
fn claims_verify_filters_ids_in_registry_order() {
    let value = json_of(&[
        "--format", "json", "claims", "verify", "--id", "C10", "--id", "C1",
    ]);
    let ids: Vec<&str> = value["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["claim_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["C1", "C10"]);
}

#[test]
fn claims_verify_rejects_unknown_ids_before_evaluating() {
    let output = run(&["claims", "verify", "--id", "C99"]);
    assert_eq!(code(&output), 64);
    assert!(stderr_of(&output).contains("C99"));
}

#[test]
fn strict_mode_exits_two_when_anything_fails() {
    assert_eq!(code(&run(&["claims", "verify", "--strict"])), 2);
    assert_eq!(
        code(&run(&["claims", "verify", "--strict", "--id", "C10"])),
        0
    );
    assert_eq!(
        code(&run(&["claims", "verify", "--strict", "--tol", "10"])),
        0
    );
}

#[test]
fn json_file_matches_json_stdout_byte_for_byte() {
    let path = std::env::temp_dir().join(format!("oddlab-cli-{}.json", std::process::id()));
    let stdout = stdout_of(&[
        "--format",
        "json",
        "claims",
        "verify",
        "--json",
        path.to_str().unwrap(),
    ]);
    let file = std::fs::read_to_string(&path).expect("report written");
    let _ = std::fs::remove_file(&path);
    assert_eq!(stdout, file);
    assert!(file.ends_with('\n'));
}

#[test]
fn goldbach_text_reports_the_worst_witness() {
    let text = stdout_of(&["goldbach", "--max", "100"]);
    assert!(text.contains("verified = 49"), "count: {text}");
    assert!(text.contains("failures = 0"), "failures: {text}");
    let tiny = stdout_of(&["goldbach", "--max", "4"]);
    assert!(tiny.contains("4 = 2 + 2"), "witness: {tiny}");
}

#[test]
fn goldbach_json_witness_is_an_actual_decomposition() {
    let value = json_of(&["--format", "json", "goldbach", "--max", "1000"]);
    assert_eq!(value["max_even"], 1000);
    assert_eq!(value["failures"].as_array().unwrap().len(), 0);
    let witness = &value["witness"];
    let n = witness["n"].as_u64().unwrap();
    let p = witness["p"].as_u64().unwrap();
    let q = witness["q"].as_u64().unwrap();
    assert_eq!(p + q, n);
}

#[test]
fn goldbach_rejects_inputs_below_four() {
    assert_eq!(code(&run(&["goldbach", "--max", "3"])), 64);
}

#[test]
fn sieve_guard_env_is_enforced_and_validated() {
    let strict = oddlab()
        .env("ODDLAB_SIEVE_GUARD", "50")
        .args(["goldbach", "--max", "100"])
        .output()
        .expect("binary runs");
    assert_eq!(strict.status.code(), Some(1), "guard should trip");
    assert!(String::from_utf8_lossy(&strict.stderr).contains("guard"));

    let garbled = oddlab()
        .env("ODDLAB_SIEVE_GUARD", "banana")
        .args(["seq", "--max", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(garbled.status.code(), Some(64));

    let roomy = oddlab()
        .env("ODDLAB_SIEVE_GUARD", "2000000")
        .args(["goldbach", "--max", "100"])
        .output()
        .expect("binary runs");
    assert_eq!(roomy.status.code(), Some(0));
}
