//! End-to-end tests of the binary: stable output, exit codes, and the
//! fixture behaviors the commands are expected to reproduce.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn relchoice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relchoice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn choose_pair_from_cycle() {
    let out = relchoice(&[
        "choose",
        "--rule",
        "M(0.5,1]",
        "--profile",
        &fixture("cycle3.txt"),
        "--set",
        "a,b",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "a\n");
}

#[test]
fn choose_full_cycle_keeps_everything() {
    let out = relchoice(&[
        "choose",
        "--rule",
        "M(0.5,1]",
        "--profile",
        &fixture("cycle3.txt"),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "a\nb\nc\n");
}

#[test]
fn choose_singleton_set() {
    let out = relchoice(&[
        "choose",
        "--rule",
        "D(0.5,1]",
        "--profile",
        &fixture("cycle3.txt"),
        "--set",
        "b",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "b\n");
}

#[test]
fn choose_flagship_rule_runs_end_to_end() {
    let out = relchoice(&[
        "choose",
        "--rule",
        "D(0.5,1]+N1+M1^C^GC^CC^Id",
        "--profile",
        &fixture("clustered.txt"),
        "--trace",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.lines().any(|l| l.starts_with("stage base")));
    assert!(text.lines().any(|l| !l.starts_with("stage ")), "chose something");
}

#[test]
fn choose_rejects_bad_rule_with_exit_one() {
    let out = relchoice(&[
        "choose",
        "--rule",
        "Z(0,1]",
        "--profile",
        &fixture("cycle3.txt"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn choose_not_nested_reports_witness() {
    // unanimity-N augmentation on a profile split between an equivalence
    // and an unrelated strict pair
    let dir = std::env::temp_dir().join("relchoice-test-notnested.txt");
    std::fs::write(
        &dir,
        "alternatives: a b c d\nindividual\na = b\nindividual\na = b\nc > d\n",
    )
    .unwrap();
    let out = relchoice(&[
        "choose",
        "--rule",
        "B(0.5,1]+N1",
        "--profile",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not nested"), "stderr: {err}");
    assert!(err.contains("incomparable"), "stderr: {err}");
}

#[test]
fn usage_error_exits_two() {
    let out = relchoice(&["choose", "--rule"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn axioms_composition_consistency_passes_on_clustered() {
    let out = relchoice(&[
        "axioms",
        "--rule",
        "M(0.5,1]^C^GC^CC",
        "--profile",
        &fixture("clustered.txt"),
        "--axioms",
        "CC",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("axiom=CC verdict=pass"), "{text}");
}

#[test]
fn axioms_positive_responsiveness_fails_on_focus_shift() {
    let out = relchoice(&[
        "axioms",
        "--rule",
        "M(0.5,1]",
        "--profile",
        &fixture("focus_shift_1.txt"),
        "--axioms",
        "PR",
    ]);
    // reports are data: failing verdicts still exit zero
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("axiom=PR verdict=fail"), "{text}");
    assert!(text.contains("witness="), "{text}");
}

#[test]
fn axioms_unknown_id_is_usage_error() {
    let out = relchoice(&[
        "axioms",
        "--rule",
        "M(0.5,1]",
        "--profile",
        &fixture("cycle3.txt"),
        "--axioms",
        "Q",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn axioms_default_runs_everything() {
    let out = relchoice(&[
        "axioms",
        "--rule",
        "M(0.5,1]",
        "--profile",
        &fixture("cycle3.txt"),
        "--scope",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for id in ["axiom=I ", "axiom=Iso ", "axiom=CA ", "axiom=sNNR ", "axiom=d_M "] {
        assert!(text.contains(id), "missing {id} in:\n{text}");
    }
    // the voters are linear, so the metric checks apply and hold, while
    // the cyclic majority breaks contraction consistency
    assert!(text.contains("axiom=d_M verdict=pass"), "{text}");
    assert!(text.contains("axiom=CA verdict=fail"), "{text}");
}

#[test]
fn components_lists_the_planted_block() {
    let out = relchoice(&["components", "--profile", &fixture("clustered.txt")]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{b,bp}\n");
}

#[test]
fn components_none_on_cycle() {
    let out = relchoice(&["components", "--profile", &fixture("cycle3.txt")]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "none\n");
}

#[test]
fn components_pair_closure() {
    let out = relchoice(&[
        "components",
        "--profile",
        &fixture("clustered.txt"),
        "--pair",
        "b,bp",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{b,bp}\n");
}

#[test]
fn chain_shows_three_members() {
    let out = relchoice(&[
        "chain",
        "--rule",
        "M(1/7,4/7]",
        "--profile",
        &fixture("seven_voters.txt"),
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3, "{text}");
    assert!(lines[0].starts_with("M@2/7"));
    assert!(lines[1].starts_with("M@3/7"));
    assert!(lines[2].starts_with("M@4/7"));
    assert!(lines[1].contains("a=b"), "{text}");
    assert!(lines[1].contains("c>b"), "{text}");
}

#[test]
fn inclusions_report_is_clean() {
    let out = relchoice(&[
        "inclusions",
        "--profile",
        &fixture("cycle3.txt"),
        "--alpha",
        "0.6",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.lines().count() > 10);
    assert!(text.lines().all(|l| l.contains("holds=true")), "{text}");
}

#[test]
fn simulate_prints_csv() {
    let out = relchoice(&[
        "simulate",
        "--rule",
        "D(0.5,1]",
        "--class",
        "linear-order",
        "--m",
        "3",
        "--n",
        "3,5",
        "--trials",
        "50",
        "--seed",
        "9",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,trials,determinism_rate,mean_choice_size,chain_distinct_rate"
    );
    assert_eq!(lines.clone().count(), 2);
    for line in lines {
        assert!(line.starts_with("3,50,") || line.starts_with("5,50,"));
    }
    // deterministic re-run
    let again = relchoice(&[
        "simulate", "--rule", "D(0.5,1]", "--class", "linear-order", "--m", "3", "--n",
        "3,5", "--trials", "50", "--seed", "9",
    ]);
    assert_eq!(stdout_of(&out), stdout_of(&again));
}

#[test]
fn simulate_trial_log() {
    let log = std::env::temp_dir().join("relchoice-test-trials.log");
    let out = relchoice(&[
        "simulate",
        "--rule",
        "P(0.5,1]",
        "--m",
        "3",
        "--n",
        "3",
        "--trials",
        "4",
        "--trial-log",
        log.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&log).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.contains("seed=") && l.contains("choice_size=")));
}
