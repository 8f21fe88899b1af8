//! First-order sentences in the language of groups, evaluated over finite
//! groups by exhaustive quantifier expansion.
//!
//! Grammar: variables `[a-z][a-z0-9]*`, the identity constant `1`, product
//! `*`, inverse `^-1`, integer powers `^k`, relations `=` and `!=`,
//! connectives `&`, `|`, `!`, `->`, `<->`, quantifiers `A x .` and `E x .`
//! (the body extends as far right as possible), parentheses, and `#`
//! line comments.

mod builtins;
mod eval;
mod parse;
mod rewrite;

pub use builtins::{builtin_sentences, cdim_le_sentence, dichotomy_sentence, doubling_sentence};
pub use eval::{evaluate, EvalReport};
pub use parse::parse_formula;
pub use rewrite::push_negations;

use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum FolangError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound variable {name:?} at position {pos}")]
    UnboundVariable { name: String, pos: usize },
    #[error("evaluation budget of {budget} assignments exhausted")]
    ResourceLimit { budget: u64 },
}

/// Group-language terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    /// The identity constant `1`.
    One,
    Mul(Box<Term>, Box<Term>),
    Inv(Box<Term>),
    /// Integer power shorthand `t^k`; the parser turns `^-1` into [`Term::Inv`].
    Pow(Box<Term>, i32),
}

/// Formulas over term equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForAll(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) => write!(f, "{name}"),
            Term::One => write!(f, "1"),
            Term::Mul(l, r) => {
                write!(f, "{l} * ")?;
                // a right-nested product needs parentheses to survive reparsing
                if matches!(**r, Term::Mul(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Term::Inv(t) => write_power_base(f, t).and_then(|()| write!(f, "^-1")),
            Term::Pow(t, k) => write_power_base(f, t).and_then(|()| write!(f, "^{k}")),
        }
    }
}

fn write_power_base(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    if matches!(t, Term::Mul(..)) {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(l, r) => write!(f, "{l} = {r}"),
            Formula::Not(inner) => write!(f, "!({inner})"),
            Formula::And(l, r) => write!(f, "({l} & {r})"),
            Formula::Or(l, r) => write!(f, "({l} | {r})"),
            Formula::Implies(l, r) => write!(f, "({l} -> {r})"),
            Formula::Iff(l, r) => write!(f, "({l} <-> {r})"),
            Formula::ForAll(v, b) => write!(f, "(A {v} . {b})"),
            Formula::Exists(v, b) => write!(f, "(E {v} . {b})"),
        }
    }
}

impl Formula {
    /// Free variables, if any (a sentence has none).
    pub fn free_variables(&self) -> Vec<String> {
        fn term_vars(t: &Term, scope: &mut Vec<String>, out: &mut Vec<String>) {
            match t {
                Term::Var(name) => {
                    if !scope.iter().any(|s| s == name) && !out.iter().any(|s| s == name) {
                        out.push(name.clone());
                    }
                }
                Term::One => {}
                Term::Mul(l, r) => {
                    term_vars(l, scope, out);
                    term_vars(r, scope, out);
                }
                Term::Inv(t) | Term::Pow(t, _) => term_vars(t, scope, out),
            }
        }
        fn walk(f: &Formula, scope: &mut Vec<String>, out: &mut Vec<String>) {
            match f {
                Formula::Eq(l, r) => {
                    term_vars(l, scope, out);
                    term_vars(r, scope, out);
                }
                Formula::Not(inner) => walk(inner, scope, out),
                Formula::And(l, r)
                | Formula::Or(l, r)
                | Formula::Implies(l, r)
                | Formula::Iff(l, r) => {
                    walk(l, scope, out);
                    walk(r, scope, out);
                }
                Formula::ForAll(v, b) | Formula::Exists(v, b) => {
                    scope.push(v.clone());
                    walk(b, scope, out);
                    scope.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::escalation::check_involution_dichotomy;
    use crate::group::{
        corpus_up_to, cyclic, parse_group_name, quaternion8, symmetric, FiniteGroup,
    };
    use crate::limits::Limits;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_the_inverse_axiom() {
        let f = parse_formula("A x . x * x^-1 = 1").unwrap();
        let report = evaluate(&cyclic(5).unwrap(), &f, &Limits::default()).unwrap();
        assert!(report.truth);
    }

    #[test]
    fn missing_body_is_a_syntax_error() {
        assert!(matches!(
            parse_formula("A x ."),
            Err(FolangError::Syntax { .. })
        ));
        assert!(matches!(
            parse_formula("A x . x * = 1"),
            Err(FolangError::Syntax { .. })
        ));
        assert!(matches!(
            parse_formula("A x . x = 1 x"),
            Err(FolangError::Syntax { .. })
        ));
    }

    #[test]
    fn unbound_variables_are_rejected_with_position() {
        match parse_formula("A x . x = y") {
            Err(FolangError::UnboundVariable { name, pos }) => {
                assert_eq!(name, "y");
                assert_eq!(pos, 10);
            }
            other => panic!("expected unbound-variable error, got {other:?}"),
        }
    }

    #[test]
    fn not_equal_desugars_to_negated_equality() {
        let f = parse_formula("A x . x != 1").unwrap();
        match f {
            Formula::ForAll(_, body) => assert!(matches!(*body, Formula::Not(_))),
            _ => panic!("expected a universal sentence"),
        }
    }

    #[test]
    fn print_then_parse_is_identity() {
        let sentences = [
            "A x . x * x^-1 = 1",
            "A x . A y . (x * y = y * x -> x * (y * x) = x^2 * y)",
            "E x . (x != 1 & x^2 = 1) | (A z . z = 1)",
            "(A a . A b . (a * a = b * b -> a = b)) <-> (A z . E x . x * x = z)",
            "A g . (g^3 = 1 -> E h . h * g * h^-1 = g^2)",
        ];
        for text in sentences {
            let f = parse_formula(text).unwrap();
            let reparsed = parse_formula(&f.to_string()).unwrap();
            assert_eq!(f, reparsed, "round trip failed for {text}");
        }
        for (_, f) in builtin_sentences() {
            assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn commutativity_fails_on_s3_with_least_counterexample() {
        let s3 = symmetric(3).unwrap();
        let f = parse_formula("A x . A y . x * y = y * x").unwrap();
        let report = evaluate(&s3, &f, &Limits::default()).unwrap();
        assert!(!report.truth);
        // independent search for the least non-commuting pair
        let mut expected = None;
        'outer: for x in s3.elements() {
            for y in s3.elements() {
                if s3.mul(x, y) != s3.mul(y, x) {
                    expected = Some(vec![("x".to_string(), x), ("y".to_string(), y)]);
                    break 'outer;
                }
            }
        }
        assert_eq!(report.witness, expected);
    }

    #[test]
    fn existential_witness_is_least() {
        let c4 = cyclic(4).unwrap();
        let f = parse_formula("E x . (x^2 = 1 & x != 1)").unwrap();
        let report = evaluate(&c4, &f, &Limits::default()).unwrap();
        assert!(report.truth);
        assert_eq!(report.witness, Some(vec![("x".to_string(), 2)]));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let s3 = symmetric(3).unwrap();
        let tight = Limits::with_budget(10);
        assert_eq!(
            evaluate(&s3, &dichotomy_sentence(), &tight),
            Err(FolangError::ResourceLimit { budget: 10 })
        );
    }

    #[test]
    fn dichotomy_sentence_agrees_with_the_direct_checker() {
        let f = dichotomy_sentence();
        let limits = Limits::default();
        for g in corpus_up_to(24) {
            let by_sentence = evaluate(&g, &f, &limits).unwrap().truth;
            let by_checker = check_involution_dichotomy(&g).holds();
            assert_eq!(by_sentence, by_checker, "disagreement on {}", g.label());
            assert!(by_sentence, "dichotomy failed on {}", g.label());
        }
    }

    #[test]
    fn doubling_sentence_holds_on_small_groups() {
        let f = doubling_sentence();
        let limits = Limits::default();
        for name in ["C5", "C2", "C2xC2", "C2xC2xC2", "S3", "Q8"] {
            let g = parse_group_name(name).unwrap();
            assert!(evaluate(&g, &f, &limits).unwrap().truth, "failed on {name}");
        }
    }

    #[test]
    fn cdim_sentences_match_the_computed_dimension() {
        let limits = Limits::with_budget(2_000_000_000);
        for g in corpus_up_to(16) {
            let dim = g.centralizer_dimension(&Limits::default()).unwrap();
            for c in 0..=4u32 {
                let report = evaluate(&g, &cdim_le_sentence(c), &limits).unwrap();
                assert_eq!(
                    report.truth,
                    dim <= c,
                    "cdim_le_{c} wrong on {} (dim {dim})",
                    g.label()
                );
            }
        }
    }

    #[test]
    fn cdim_le_zero_is_false_on_nonabelian_groups() {
        let limits = Limits::default();
        let f = cdim_le_sentence(0);
        for name in ["S3", "S4", "Q8", "D8", "A4"] {
            let g = parse_group_name(name).unwrap();
            assert!(!evaluate(&g, &f, &limits).unwrap().truth, "{name}");
        }
    }

    #[test]
    fn builtin_map_contents() {
        let map = builtin_sentences();
        let keys: Vec<&str> = map.keys().map(|s| s.as_str()).collect();
        assert_eq!(
            keys,
            [
                "cdim_le_0",
                "cdim_le_1",
                "cdim_le_2",
                "cdim_le_3",
                "cdim_le_4",
                "dichotomy",
                "doubling"
            ]
        );
    }

    fn random_term(rng: &mut ChaCha8Rng, scope: &[String], depth: u32) -> Term {
        let pick = rng.gen_range(0..if depth == 0 { 2 } else { 5 });
        match pick {
            0 if !scope.is_empty() => Term::Var(scope[rng.gen_range(0..scope.len())].clone()),
            0 | 1 => Term::One,
            2 => Term::Mul(
                Box::new(random_term(rng, scope, depth - 1)),
                Box::new(random_term(rng, scope, depth - 1)),
            ),
            3 => Term::Inv(Box::new(random_term(rng, scope, depth - 1))),
            _ => {
                let k = [-3, -2, 0, 2, 3][rng.gen_range(0..5)];
                Term::Pow(Box::new(random_term(rng, scope, depth - 1)), k)
            }
        }
    }

    fn random_formula(
        rng: &mut ChaCha8Rng,
        scope: &mut Vec<String>,
        depth: u32,
        next_var: &mut u32,
    ) -> Formula {
        let pick = if depth == 0 { 0 } else { rng.gen_range(0..8) };
        match pick {
            0 => Formula::Eq(random_term(rng, scope, 2), random_term(rng, scope, 2)),
            1 => Formula::Not(Box::new(random_formula(rng, scope, depth - 1, next_var))),
            2..=5 => {
                let l = Box::new(random_formula(rng, scope, depth - 1, next_var));
                let r = Box::new(random_formula(rng, scope, depth - 1, next_var));
                match pick {
                    2 => Formula::And(l, r),
                    3 => Formula::Or(l, r),
                    4 => Formula::Implies(l, r),
                    _ => Formula::Iff(l, r),
                }
            }
            _ => {
                let name = format!("v{next_var}");
                *next_var += 1;
                scope.push(name.clone());
                let body = Box::new(random_formula(rng, scope, depth - 1, next_var));
                scope.pop();
                if pick == 6 {
                    Formula::ForAll(name, body)
                } else {
                    Formula::Exists(name, body)
                }
            }
        }
    }

    #[test]
    fn negation_pushing_preserves_evaluation_and_round_trips() {
        let groups: Vec<FiniteGroup> = vec![
            cyclic(4).unwrap(),
            symmetric(3).unwrap(),
            quaternion8().unwrap(),
            parse_group_name("C2xC2").unwrap(),
        ];
        let limits = Limits::with_budget(10_000_000);
        let mut rng = crate::rng::seeded(99);
        for _ in 0..200 {
            let f = random_formula(&mut rng, &mut Vec::new(), 3, &mut 0);
            assert!(f.free_variables().is_empty());
            assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
            let rewritten = push_negations(&f);
            for g in &groups {
                let a = evaluate(g, &f, &limits).unwrap().truth;
                let b = evaluate(g, &rewritten, &limits).unwrap().truth;
                assert_eq!(a, b, "rewrite changed the value of {f} on {}", g.label());
            }
        }
    }
}
