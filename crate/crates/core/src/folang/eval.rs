//! Exhaustive, short-circuiting evaluation of sentences over a finite group.

use super::{FolangError, Formula, Term};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// Result of evaluating one sentence on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub group: String,
    /// Printed form of the sentence.
    pub sentence: String,
    pub truth: bool,
    /// When the sentence opens with a universal block and is false, the
    /// least-id counterexample assignment for that block; when it opens
    /// with an existential block and is true, the least-id witness.
    pub witness: Option<Vec<(String, u32)>>,
    /// Quantifier bindings consumed.
    pub assignments: u64,
    /// Wall time; not serialized so that reports stay byte-deterministic.
    #[serde(skip, default)]
    pub elapsed: Duration,
}

struct Evaluator<'a> {
    group: &'a FiniteGroup,
    env: Vec<(String, u32)>,
    budget: u64,
    used: u64,
}

impl Evaluator<'_> {
    fn charge(&mut self) -> Result<(), FolangError> {
        self.used += 1;
        if self.used > self.budget {
            return Err(FolangError::ResourceLimit {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn term(&self, t: &Term) -> u32 {
        match t {
            Term::Var(name) => {
                self.env
                    .iter()
                    .rev()
                    .find(|(n, _)| n == name)
                    .expect("parser guarantees bound variables")
                    .1
            }
            Term::One => 0,
            Term::Mul(l, r) => self.group.mul(self.term(l), self.term(r)),
            Term::Inv(t) => self.group.inv(self.term(t)),
            Term::Pow(t, k) => {
                let x = self.term(t);
                let base = if *k < 0 { self.group.inv(x) } else { x };
                let mut acc = 0;
                for _ in 0..k.unsigned_abs() {
                    acc = self.group.mul(acc, base);
                }
                acc
            }
        }
    }

    fn eval(&mut self, f: &Formula) -> Result<bool, FolangError> {
        match f {
            Formula::Eq(l, r) => Ok(self.term(l) == self.term(r)),
            Formula::Not(inner) => Ok(!self.eval(inner)?),
            Formula::And(l, r) => Ok(self.eval(l)? && self.eval(r)?),
            Formula::Or(l, r) => Ok(self.eval(l)? || self.eval(r)?),
            Formula::Implies(l, r) => Ok(!self.eval(l)? || self.eval(r)?),
            Formula::Iff(l, r) => Ok(self.eval(l)? == self.eval(r)?),
            Formula::ForAll(name, body) => {
                for v in self.group.elements() {
                    self.charge()?;
                    self.env.push((name.clone(), v));
                    let holds = self.eval(body);
                    self.env.pop();
                    if !holds? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Exists(name, body) => {
                for v in self.group.elements() {
                    self.charge()?;
                    self.env.push((name.clone(), v));
                    let holds = self.eval(body);
                    self.env.pop();
                    if holds? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    /// Least assignment (lexicographic in ids) to `vars` making `rest`
    /// evaluate to `target`.
    fn search_block(
        &mut self,
        vars: &[String],
        rest: &Formula,
        target: bool,
    ) -> Result<Option<Vec<(String, u32)>>, FolangError> {
        match vars.split_first() {
            None => {
                if self.eval(rest)? == target {
                    Ok(Some(Vec::new()))
                } else {
                    Ok(None)
                }
            }
            Some((name, tail)) => {
                for v in self.group.elements() {
                    self.charge()?;
                    self.env.push((name.clone(), v));
                    let found = self.search_block(tail, rest, target);
                    self.env.pop();
                    if let Some(mut assignment) = found? {
                        assignment.insert(0, (name.clone(), v));
                        return Ok(Some(assignment));
                    }
                }
                Ok(None)
            }
        }
    }
}

/// Evaluate a sentence on a group by exhaustive quantifier expansion with
/// short-circuiting, within `limits.quantifier_budget` bindings.
pub fn evaluate(
    group: &FiniteGroup,
    sentence: &Formula,
    limits: &Limits,
) -> Result<EvalReport, FolangError> {
    let start = Instant::now();
    let mut ev = Evaluator {
        group,
        env: Vec::new(),
        budget: limits.quantifier_budget,
        used: 0,
    };
    let truth = ev.eval(sentence)?;

    // outermost uniform quantifier block, for the witness/counterexample
    let mut vars: Vec<String> = Vec::new();
    let mut rest = sentence;
    let universal = matches!(rest, Formula::ForAll(..));
    loop {
        match rest {
            Formula::ForAll(v, b) if universal => {
                vars.push(v.clone());
                rest = b;
            }
            Formula::Exists(v, b) if !universal => {
                vars.push(v.clone());
                rest = b;
            }
            _ => break,
        }
    }
    let eval_used = ev.used;
    let witness = if !vars.is_empty() && ((universal && !truth) || (!universal && truth)) {
        // a fresh budget: the search revisits at most what eval visited
        ev.used = 0;
        let found = ev.search_block(&vars, rest, !universal)?;
        if found.is_none() {
            unreachable!("a failing universal (or true existential) block has an assignment");
        }
        found
    } else {
        None
    };

    Ok(EvalReport {
        group: group.label().to_string(),
        sentence: sentence.to_string(),
        truth,
        witness,
        assignments: eval_used + ev.used,
        elapsed: start.elapsed(),
    })
}
