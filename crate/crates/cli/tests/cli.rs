//! End-to-end tests of the command-line contract: exit codes, the JSON
//! report shape, and byte-for-byte determinism under a fixed seed.

use std::io::Write;
use sylowlab_cli::run;

fn json_of(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("stdout is one JSON object")
}

#[test]
fn platonov_pair_run_passes_with_three_checks() {
    let exec = run(["platonov", "--primes", "3,7", "--pairs", "all", "--json"]);
    assert_eq!(exec.exit_code, 0, "stderr: {}", exec.stderr);
    let report = json_of(&exec.stdout);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["command"], "platonov");
    assert_eq!(report["rng"], "chacha8");
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3); // two generators, one pair certificate
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(
        checks[2]["evidence"]["case1"]["obstruction"],
        "3*a^2 + 147*c^2 - 7"
    );
}

#[test]
fn platonov_count_selects_the_first_residue_three_primes() {
    let exec = run(["platonov", "--count", "3", "--pairs", "all", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert_eq!(report["parameters"]["primes"], "3,7,11");
    assert_eq!(report["checks"].as_array().unwrap().len(), 6); // 3 generators + 3 pairs
}

#[test]
fn platonov_rejects_bad_primes_as_usage() {
    let exec = run(["platonov", "--primes", "3,5"]);
    assert_eq!(exec.exit_code, 2);
    assert!(exec.stderr.contains("not congruent to 3 mod 4"));
}

#[test]
fn dichotomy_single_group_passes() {
    let exec = run(["dichotomy", "--group", "S4", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(
        checks[0]["evidence"]["failures"].as_array().unwrap().len(),
        0
    );
    // single-group runs include the full witness map
    assert!(checks[0]["evidence"]["witnesses"].is_array());
}

#[test]
fn dichotomy_corpus_mode_covers_every_group() {
    let exec = run(["dichotomy", "--max-order", "24", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert!(report["checks"].as_array().unwrap().len() > 30);
}

#[test]
fn false_sentence_exits_one_with_a_counterexample() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# commutativity fails in S3").unwrap();
    writeln!(file, "A x . A y . x * y = y * x").unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let exec = run([
        "fo-check",
        "--group",
        "S3",
        "--formula-file",
        &path,
        "--json",
    ]);
    assert_eq!(exec.exit_code, 1);
    let report = json_of(&exec.stdout);
    let check = &report["checks"][0];
    assert_eq!(check["status"], "fail");
    let witness = check["evidence"]["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 2); // an (x, y) counterexample assignment
}

#[test]
fn builtin_sentences_run_by_name() {
    for builtin in ["dichotomy", "doubling", "cdim_le_2"] {
        let exec = run(["fo-check", "--group", "S3", "--builtin", builtin]);
        assert_eq!(exec.exit_code, 0, "{builtin} on S3 should hold");
    }
    // S3 has centralizer dimension 2, so the level-1 bound fails
    let exec = run(["fo-check", "--group", "S3", "--builtin", "cdim_le_1"]);
    assert_eq!(exec.exit_code, 1);

    let exec = run(["fo-check", "--group", "S3", "--builtin", "nonsense"]);
    assert_eq!(exec.exit_code, 2);
    assert!(exec.stderr.contains("available"));
}

#[test]
fn unknown_group_names_exit_two_and_show_the_grammar() {
    let exec = run(["dichotomy", "--group", "Z9"]);
    assert_eq!(exec.exit_code, 2);
    assert!(
        exec.stderr.contains("group names"),
        "stderr: {}",
        exec.stderr
    );
    assert!(exec.stderr.contains("S3xC2"));
}

#[test]
fn conjugator_supports_only_two() {
    let exec = run(["conjugator", "--group", "S4", "--p", "3"]);
    assert_eq!(exec.exit_code, 2);
    assert!(exec.stderr.contains("only --p 2"));

    let exec = run(["conjugator", "--group", "S4", "--all-pairs", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert_eq!(report["checks"].as_array().unwrap().len(), 6);

    // a group with a unique (normal) Sylow 2-subgroup has nothing to do
    let exec = run(["conjugator", "--group", "C12", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert!(report["checks"][0]["evidence"]["note"].is_string());
}

#[test]
fn sylow_command_reports_the_counts() {
    let exec = run(["sylow", "--group", "S4", "--p", "2", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    let evidence = &report["checks"][0]["evidence"];
    assert_eq!(evidence["count"], 3);
    assert_eq!(evidence["count_mod_p"], 1);
    assert_eq!(evidence["all_conjugate"], true);
}

#[test]
fn valuation_lemma_handles_both_residues() {
    let exec = run(["valuation-lemma", "--p", "7", "--samples", "200", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert_eq!(report["checks"][0]["evidence"]["all_even"], true);

    let exec = run(["valuation-lemma", "--p", "5", "--samples", "2000", "--json"]);
    assert_eq!(exec.exit_code, 0, "sharpness witness should be found");

    let exec = run(["valuation-lemma", "--p", "4"]);
    assert_eq!(exec.exit_code, 2);
}

#[test]
fn sl2q_properties_pass() {
    let exec = run(["sl2q-properties", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert_eq!(report["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn centralizer_dim_reports_the_value() {
    let exec = run(["centralizer-dim", "--group", "S3", "--json"]);
    assert_eq!(exec.exit_code, 0);
    let report = json_of(&exec.stdout);
    assert_eq!(report["checks"][0]["evidence"]["dimension"], 2);
}

#[test]
fn exhausted_budget_exits_two() {
    let exec = run([
        "fo-check",
        "--group",
        "S5",
        "--builtin",
        "dichotomy",
        "--budget",
        "10",
        "--json",
    ]);
    assert_eq!(exec.exit_code, 2);
    let report = json_of(&exec.stdout);
    assert_eq!(report["checks"][0]["status"], "error");
}

#[test]
fn identical_seeds_give_byte_identical_json() {
    for args in [
        vec![
            "platonov", "--primes", "3,7", "--pairs", "all", "--json", "--seed", "7",
        ],
        vec!["sl2q-properties", "--json", "--seed", "9"],
        vec![
            "valuation-lemma",
            "--p",
            "11",
            "--samples",
            "500",
            "--seed",
            "3",
            "--json",
        ],
        vec!["conjugator", "--group", "A5", "--all-pairs", "--json"],
    ] {
        let first = run(args.clone());
        let second = run(args.clone());
        assert_eq!(first.exit_code, second.exit_code);
        assert_eq!(first.stdout, second.stdout, "non-deterministic: {args:?}");
    }
}

#[test]
fn different_seeds_still_verify() {
    let a = run([
        "platonov", "--primes", "3,7", "--pairs", "all", "--json", "--seed", "1",
    ]);
    let b = run([
        "platonov", "--primes", "3,7", "--pairs", "all", "--json", "--seed", "2",
    ]);
    assert_eq!(a.exit_code, 0);
    assert_eq!(b.exit_code, 0);
    assert_ne!(a.stdout, b.stdout, "seed must be recorded in the report");
}

#[test]
fn help_exits_zero() {
    let exec = run(["--help"]);
    assert_eq!(exec.exit_code, 0);
    assert!(exec.stdout.contains("sylowlab"));
}
