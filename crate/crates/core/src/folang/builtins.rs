//! The built-in sentences: the involution dichotomy, the doubling sentence,
//! and the bounded-centralizer-chain family.

use super::{parse_formula, Formula};
use std::collections::BTreeMap;

/// Two involutions are conjugate or admit a common centralizing involution.
/// True in every finite group.
pub fn dichotomy_sentence() -> Formula {
    parse_formula(
        "A g . A h . ((!(g = 1) & !(h = 1) & g^2 = 1 & h^2 = 1) -> \
         ((E x . x * g * x^-1 = h) | \
          (E y . !(y = 1) & y^2 = 1 & y * g * y^-1 = g & y * h * y^-1 = h)))",
    )
    .expect("builtin sentence parses")
}

/// Squaring is injective iff it is surjective. True in every finite group
/// (both sides express the same counting fact), and the standard sentence
/// separating the integers from all finite groups.
pub fn doubling_sentence() -> Formula {
    parse_formula("(A a . A b . (a * a = b * b -> a = b)) <-> (A z . E x . x * x = z)")
        .expect("builtin sentence parses")
}

fn commutes(u: &str, v: &str) -> String {
    format!("{u} * {v} = {v} * {u}")
}

/// No strictly descending chain of `c + 1` subset-centralizers below
/// `C(∅) = G`, i.e. the centralizer dimension is at most `c`.
///
/// A chain with `k` strict drops is witnessed by `a_1, b_1, ..., a_k, b_k`
/// where each `b_i` centralizes `a_1 .. a_{i-1}` but not `a_i`; the sentence
/// universally quantifies `2(c+1)` variables and refutes every witness for
/// `k = c + 1`, with the guard conditions interleaved so that evaluation
/// prunes non-chains early.
pub fn cdim_le_sentence(c: u32) -> Formula {
    let guard = |i: u32| -> String {
        let mut parts: Vec<String> = (1..i)
            .map(|j| commutes(&format!("b{i}"), &format!("a{j}")))
            .collect();
        parts.push(format!(
            "!({})",
            commutes(&format!("b{i}"), &format!("a{i}"))
        ));
        parts.join(" & ")
    };
    let last = c + 1;
    let mut body = format!("!({})", guard(last));
    for i in (1..=last).rev() {
        let quantified = if i == last {
            body
        } else {
            format!("({}) -> {}", guard(i), body)
        };
        body = format!("A a{i} . A b{i} . ({quantified})");
    }
    parse_formula(&body).expect("generated sentence parses")
}

/// All built-in sentences by name: `dichotomy`, `doubling`, and
/// `cdim_le_0` through `cdim_le_4`.
pub fn builtin_sentences() -> BTreeMap<String, Formula> {
    let mut map = BTreeMap::new();
    map.insert("dichotomy".to_string(), dichotomy_sentence());
    map.insert("doubling".to_string(), doubling_sentence());
    for c in 0..=4 {
        map.insert(format!("cdim_le_{c}"), cdim_le_sentence(c));
    }
    map
}
