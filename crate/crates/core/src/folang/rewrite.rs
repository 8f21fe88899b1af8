//! Negation pushing (De Morgan, quantifier duality, implication expansion).
//! Semantics-preserving; the property tests check that evaluation agrees.

use super::Formula;

/// Rewrite into negation normal form: negations end up directly on atoms,
/// implications and equivalences are expanded.
pub fn push_negations(f: &Formula) -> Formula {
    nnf(f, true)
}

fn nnf(f: &Formula, positive: bool) -> Formula {
    match f {
        Formula::Eq(l, r) => {
            let atom = Formula::Eq(l.clone(), r.clone());
            if positive {
                atom
            } else {
                Formula::Not(Box::new(atom))
            }
        }
        Formula::Not(inner) => nnf(inner, !positive),
        Formula::And(l, r) => {
            if positive {
                Formula::And(Box::new(nnf(l, true)), Box::new(nnf(r, true)))
            } else {
                Formula::Or(Box::new(nnf(l, false)), Box::new(nnf(r, false)))
            }
        }
        Formula::Or(l, r) => {
            if positive {
                Formula::Or(Box::new(nnf(l, true)), Box::new(nnf(r, true)))
            } else {
                Formula::And(Box::new(nnf(l, false)), Box::new(nnf(r, false)))
            }
        }
        Formula::Implies(l, r) => {
            if positive {
                Formula::Or(Box::new(nnf(l, false)), Box::new(nnf(r, true)))
            } else {
                Formula::And(Box::new(nnf(l, true)), Box::new(nnf(r, false)))
            }
        }
        Formula::Iff(l, r) => {
            if positive {
                Formula::And(
                    Box::new(Formula::Or(Box::new(nnf(l, false)), Box::new(nnf(r, true)))),
                    Box::new(Formula::Or(Box::new(nnf(r, false)), Box::new(nnf(l, true)))),
                )
            } else {
                Formula::Or(
                    Box::new(Formula::And(
                        Box::new(nnf(l, true)),
                        Box::new(nnf(r, false)),
                    )),
                    Box::new(Formula::And(
                        Box::new(nnf(r, true)),
                        Box::new(nnf(l, false)),
                    )),
                )
            }
        }
        Formula::ForAll(v, b) => {
            if positive {
                Formula::ForAll(v.clone(), Box::new(nnf(b, true)))
            } else {
                Formula::Exists(v.clone(), Box::new(nnf(b, false)))
            }
        }
        Formula::Exists(v, b) => {
            if positive {
                Formula::Exists(v.clone(), Box::new(nnf(b, true)))
            } else {
                Formula::ForAll(v.clone(), Box::new(nnf(b, false)))
            }
        }
    }
}
