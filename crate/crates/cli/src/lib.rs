//! Batch command-line front end: every verification in the toolkit as a
//! named subcommand producing a text or JSON report.

mod report;

pub use report::{CheckReport, CheckStatus, RunReport, SCHEMA_VERSION};

use clap::{Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;
use sylowlab::escalation::{check_involution_dichotomy, find_conjugator, StepKind};
use sylowlab::folang;
use sylowlab::group::{corpus_up_to, parse_group_name, FiniteGroup, Subgroup};
use sylowlab::padic;
use sylowlab::platonov;
use sylowlab::rng::DEFAULT_SEED;
use sylowlab::sylow::{all_sylow_p, verify_sylow_theorems};
use sylowlab::Limits;

const GROUP_GRAMMAR: &str =
    "group names: C<n> (cyclic), D<n> (dihedral of order n, n even), S<n> (symmetric, n <= 8), \
     A<n> (alternating, n <= 8), Q8, and direct products joined with 'x', e.g. C12, D8, S4, A5, \
     Q8, C2xC2, S3xC2";

#[derive(Parser)]
#[command(name = "sylowlab", version, about = "Batch group-theory verifications", after_help = GROUP_GRAMMAR)]
struct Cli {
    /// Emit the report as a single JSON object on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every sampled computation
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Quantifier budget for first-order evaluation
    #[arg(long, global = true, default_value_t = Limits::default().quantifier_budget)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the involution dichotomy on one group or a whole corpus
    Dichotomy {
        /// Run on every corpus group up to this order
        #[arg(long, conflicts_with = "group")]
        max_order: Option<u32>,
        /// Run on a single named group
        #[arg(long)]
        group: Option<String>,
    },
    /// Find escalation conjugators between Sylow 2-subgroups
    Conjugator {
        #[arg(long)]
        group: String,
        /// Prime (only 2 is supported; the escalation is involution-based)
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Process every ordered pair of distinct Sylow 2-subgroups
        #[arg(long)]
        all_pairs: bool,
    },
    /// Verify the Sylow theorems on one group
    Sylow {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u32,
    },
    /// Generator checks and pairwise non-conjugacy certificates
    Platonov {
        /// Comma-separated primes, each congruent to 3 mod 4
        #[arg(long, value_delimiter = ',', conflicts_with = "count")]
        primes: Vec<u64>,
        /// Use the first K primes congruent to 3 mod 4
        #[arg(long)]
        count: Option<usize>,
        /// Pair handling: "all" certifies every unordered pair
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Even-valuation sampling for sums of two rational squares
    ValuationLemma {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
    /// The SL2(Q) property suite: involutions, order 8, quaternions
    Sl2qProperties,
    /// Evaluate a first-order sentence on a group
    FoCheck {
        #[arg(long)]
        group: String,
        /// Name of a built-in sentence
        #[arg(long, conflicts_with = "formula_file")]
        builtin: Option<String>,
        /// UTF-8 file with one sentence ('#' starts a comment)
        #[arg(long)]
        formula_file: Option<PathBuf>,
    },
    /// Longest strict chain of subset-centralizers
    CentralizerDim {
        #[arg(long)]
        group: String,
    },
}

/// Result of one invocation, ready for printing.
pub struct Execution {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run the CLI on `argv` (without the program name). Usage and input
/// errors exit 2 with the grammar on stderr; check failures exit 1; checks
/// that hit resource limits exit 2.
pub fn run<I, S>(argv: I) -> Execution
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut full: Vec<String> = vec!["sylowlab".to_string()];
    full.extend(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own help/version output with exit code 0
            let code = if err.use_stderr() { 2 } else { 0 };
            let rendered = err.render().to_string();
            return if code == 0 {
                Execution {
                    exit_code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Execution {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };

    let start = Instant::now();
    let limits = Limits::with_budget(cli.budget);
    let outcome = dispatch(&cli.command, cli.seed, &limits);
    match outcome {
        Ok(mut report) => {
            report.wall = start.elapsed();
            let stdout = if cli.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            Execution {
                exit_code: report.exit_code(),
                stdout,
                stderr: String::new(),
            }
        }
        Err(message) => Execution {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n{GROUP_GRAMMAR}\n"),
        },
    }
}

fn load_group(name: &str) -> Result<FiniteGroup, String> {
    parse_group_name(name).map_err(|e| e.to_string())
}

fn dispatch(command: &Command, seed: u64, limits: &Limits) -> Result<RunReport, String> {
    match command {
        Command::Dichotomy { max_order, group } => dichotomy(*max_order, group.as_deref(), seed),
        Command::Conjugator {
            group,
            p,
            all_pairs,
        } => conjugator(group, *p, *all_pairs, seed),
        Command::Sylow { group, p } => sylow(group, *p, seed),
        Command::Platonov {
            primes,
            count,
            pairs,
        } => platonov_cmd(primes, *count, pairs.as_deref(), seed),
        Command::ValuationLemma { p, samples } => valuation_lemma(*p, *samples, seed),
        Command::Sl2qProperties => sl2q_properties(seed),
        Command::FoCheck {
            group,
            builtin,
            formula_file,
        } => fo_check(
            group,
            builtin.as_deref(),
            formula_file.as_deref(),
            seed,
            limits,
        ),
        Command::CentralizerDim { group } => centralizer_dim(group, seed, limits),
    }
}

fn dichotomy(max_order: Option<u32>, group: Option<&str>, seed: u64) -> Result<RunReport, String> {
    let mut report = RunReport::new("dichotomy", seed);
    let groups = match (max_order, group) {
        (Some(n), None) => {
            report.param("max_order", n);
            corpus_up_to(n)
        }
        (None, Some(name)) => {
            report.param("group", name);
            vec![load_group(name)?]
        }
        _ => return Err("dichotomy needs exactly one of --max-order or --group".into()),
    };
    let single = groups.len() == 1;
    for g in groups {
        let result = check_involution_dichotomy(&g);
        let mut evidence = json!({
            "group": result.group,
            "involutions": result.involutions,
            "pairs": result.pairs.len(),
            "failures": result.failures,
        });
        if single {
            evidence["witnesses"] =
                serde_json::to_value(&result.pairs).expect("witness list serializes");
        }
        let name = format!("dichotomy {}", g.label());
        if result.holds() {
            report.pass(name, evidence);
        } else {
            report.fail(name, evidence);
        }
    }
    Ok(report)
}

fn conjugator(group: &str, p: u32, all_pairs: bool, seed: u64) -> Result<RunReport, String> {
    if p != 2 {
        return Err(format!(
            "conjugator escalation works on involutions, so only --p 2 is supported (got {p})"
        ));
    }
    let g = load_group(group)?;
    let mut report = RunReport::new("conjugator", seed);
    report.param("group", group);
    report.param("p", p);
    report.param("all_pairs", all_pairs);
    let sylows = all_sylow_p(&g, 2).map_err(|e| e.to_string())?;
    if sylows.len() < 2 {
        report.pass(
            format!("single Sylow 2-subgroup of {group}"),
            json!({ "sylow_count": sylows.len(), "note": "nothing to conjugate" }),
        );
        return Ok(report);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..sylows.len() {
        for j in 0..sylows.len() {
            if i != j {
                pairs.push((i, j));
                if !all_pairs {
                    break;
                }
            }
        }
        if !all_pairs && !pairs.is_empty() {
            break;
        }
    }
    for (i, j) in pairs {
        run_escalation_check(&mut report, &g, &sylows, i, j);
    }
    Ok(report)
}

fn run_escalation_check(
    report: &mut RunReport,
    g: &FiniteGroup,
    sylows: &[Subgroup],
    i: usize,
    j: usize,
) {
    let name = format!("conjugate sylow[{i}] onto sylow[{j}] in {}", g.label());
    match find_conjugator(g, &sylows[i], &sylows[j]) {
        Ok(trace) => {
            let verified = sylows[i].conjugate_by(trace.conjugator) == sylows[j];
            let oracle = g.find_subgroup_conjugator(&sylows[i], &sylows[j]).is_some();
            let case2 = trace
                .steps
                .iter()
                .filter(|s| s.kind == StepKind::Case2CommonInvolution)
                .count();
            let evidence = json!({
                "conjugator": trace.conjugator,
                "conjugator_name": g.element_name(trace.conjugator),
                "rounds": trace.rounds,
                "case2_steps": case2,
                "intersections": trace.steps.iter().map(|s| s.d_order).collect::<Vec<_>>(),
                "verified": verified,
                "oracle_agrees": oracle,
            });
            if verified && oracle {
                report.pass(name, evidence);
            } else {
                report.fail(name, evidence);
            }
        }
        Err(err) => report.error(name, json!({ "error": err.to_string() })),
    }
}

fn sylow(group: &str, p: u32, seed: u64) -> Result<RunReport, String> {
    let g = load_group(group)?;
    let mut report = RunReport::new("sylow", seed);
    report.param("group", group);
    report.param("p", p);
    match verify_sylow_theorems(&g, p) {
        Ok(r) => {
            let ok = r.all_conjugate && r.count_mod_p == 1 % p;
            let evidence = serde_json::to_value(&r).expect("report serializes");
            let name = format!("sylow theorems for {group} at p = {p}");
            if ok {
                report.pass(name, evidence);
            } else {
                report.fail(name, evidence);
            }
        }
        Err(err) => report.error(
            format!("sylow theorems for {group} at p = {p}"),
            json!({ "error": err.to_string() }),
        ),
    }
    Ok(report)
}

fn first_residue_three_primes(k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 3u64;
    while out.len() < k {
        if padic::is_prime(p) && p % 4 == 3 {
            out.push(p);
        }
        p += 1;
    }
    out
}

fn platonov_cmd(
    primes: &[u64],
    count: Option<usize>,
    pairs: Option<&str>,
    seed: u64,
) -> Result<RunReport, String> {
    let primes: Vec<u64> = match (primes.is_empty(), count) {
        (false, None) => primes.to_vec(),
        (true, Some(k)) => first_residue_three_primes(k),
        _ => return Err("platonov needs exactly one of --primes or --count".into()),
    };
    let all_pairs = match pairs {
        None => false,
        Some("all") => true,
        Some(other) => return Err(format!("unknown --pairs mode {other:?}; use \"all\"")),
    };
    let mut report = RunReport::new("platonov", seed);
    report.param(
        "primes",
        primes
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    report.param("pairs", if all_pairs { "all" } else { "none" });

    for &p in &primes {
        match platonov::platonov_generator(p) {
            Ok(generator) => report.pass(
                format!("generator g_{p}"),
                serde_json::to_value(&generator).expect("generator serializes"),
            ),
            Err(err) => return Err(err.to_string()),
        }
    }
    if all_pairs {
        for (a, &p_i) in primes.iter().enumerate() {
            for &p_j in &primes[a + 1..] {
                let name = format!("non-conjugacy of <g_{p_i}> and <g_{p_j}>");
                match platonov::nonconjugacy_certificate(p_i, p_j, seed) {
                    Ok(cert) => match cert.verify() {
                        Ok(()) => report.pass(
                            name,
                            serde_json::to_value(&cert).expect("certificate serializes"),
                        ),
                        Err(err) => report.fail(name, json!({ "error": err.to_string() })),
                    },
                    Err(err) => report.error(name, json!({ "error": err.to_string() })),
                }
            }
        }
    }
    Ok(report)
}

fn valuation_lemma(p: u64, samples: u64, seed: u64) -> Result<RunReport, String> {
    if !padic::is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    let mut report = RunReport::new("valuation-lemma", seed);
    report.param("p", p);
    report.param("samples", samples);
    if p % 4 == 3 {
        let name = format!("v_{p}(a^2 + b^2) even on {samples} samples");
        match padic::parity_certificate(p, samples, seed) {
            Ok(cert) => report.pass(
                name,
                serde_json::to_value(&cert).expect("certificate serializes"),
            ),
            Err(err) => report.fail(name, json!({ "error": err.to_string() })),
        }
    } else {
        // hypothesis sharpness: at this residue an odd valuation must show up
        let name = format!("odd v_{p}(a^2 + b^2) witness within {samples} samples");
        match padic::odd_valuation_witness(p, samples, seed) {
            Ok(found) => {
                let evidence = serde_json::to_value(&found).expect("report serializes");
                if found.witness.is_some() {
                    report.pass(name, evidence);
                } else {
                    report.fail(name, evidence);
                }
            }
            Err(err) => report.error(name, json!({ "error": err.to_string() })),
        }
    }
    Ok(report)
}

fn sl2q_properties(seed: u64) -> Result<RunReport, String> {
    let mut report = RunReport::new("sl2q-properties", seed);
    match platonov::involution_survey(1000, seed) {
        Ok(survey) => {
            let evidence = serde_json::to_value(&survey).expect("survey serializes");
            if survey.all_central {
                report.pass("unique involution survey", evidence);
            } else {
                report.fail("unique involution survey", evidence);
            }
        }
        Err(err) => report.error(
            "unique involution survey",
            json!({ "error": err.to_string() }),
        ),
    }
    match platonov::order8_impossibility(seed) {
        Ok(refutation) => {
            let evidence = serde_json::to_value(&refutation).expect("refutation serializes");
            if refutation.order8_seen {
                report.fail("no element of order 8", evidence);
            } else {
                report.pass("no element of order 8", evidence);
            }
        }
        Err(err) => report.error("no element of order 8", json!({ "error": err.to_string() })),
    }
    match platonov::q8_embedding_refutation(seed) {
        Ok(refutation) => report.pass(
            "quaternion group does not embed",
            serde_json::to_value(&refutation).expect("refutation serializes"),
        ),
        Err(err) => report.error(
            "quaternion group does not embed",
            json!({ "error": err.to_string() }),
        ),
    }
    Ok(report)
}

fn fo_check(
    group: &str,
    builtin: Option<&str>,
    formula_file: Option<&std::path::Path>,
    seed: u64,
    limits: &Limits,
) -> Result<RunReport, String> {
    let g = load_group(group)?;
    let (label, sentence) = match (builtin, formula_file) {
        (Some(name), None) => {
            let sentences = folang::builtin_sentences();
            let sentence = sentences
                .get(name)
                .ok_or_else(|| {
                    format!(
                        "unknown builtin {name:?}; available: {}",
                        sentences
                            .keys()
                            .map(String::as_str)
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })?
                .clone();
            (name.to_string(), sentence)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let sentence = folang::parse_formula(&text).map_err(|e| e.to_string())?;
            (path.display().to_string(), sentence)
        }
        _ => return Err("fo-check needs exactly one of --builtin or --formula-file".into()),
    };
    let mut report = RunReport::new("fo-check", seed);
    report.param("group", group);
    report.param("sentence", &label);
    let name = format!("{label} on {group}");
    match folang::evaluate(&g, &sentence, limits) {
        Ok(result) => {
            let truth = result.truth;
            let evidence = serde_json::to_value(&result).expect("evaluation serializes");
            if truth {
                report.pass(name, evidence);
            } else {
                report.fail(name, evidence);
            }
        }
        Err(err) => report.error(name, json!({ "error": err.to_string() })),
    }
    Ok(report)
}

fn centralizer_dim(group: &str, seed: u64, limits: &Limits) -> Result<RunReport, String> {
    let g = load_group(group)?;
    let mut report = RunReport::new("centralizer-dim", seed);
    report.param("group", group);
    match g.centralizer_dimension(limits) {
        Ok(dim) => report.pass(
            format!("centralizer dimension of {group}"),
            json!({ "group": group, "dimension": dim }),
        ),
        Err(err) => report.error(
            format!("centralizer dimension of {group}"),
            json!({ "error": err.to_string() }),
        ),
    }
    Ok(report)
}
