//! Maximal p-subgroups of finite groups: greedy extension to a Sylow
//! p-subgroup, enumeration of all of them, and the classical Sylow facts as
//! a self-checking report.

use crate::group::{FiniteGroup, Subgroup};
use crate::padic::is_prime;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum SylowError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("starting subgroup is not a {p}-subgroup (element {witness} has other prime factors in its order)")]
    NotPGroup { p: u32, witness: u32 },
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

/// Exact p-part of `n`.
pub fn p_part(mut n: u32, p: u32) -> u32 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

fn is_p_power(mut n: u32, p: u32) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Extend a p-subgroup `s` to a Sylow p-subgroup of `g` by greedily
/// adjoining, in ascending id order, the first element whose closure with
/// the current subgroup is still a p-group. Closure aborts early once it
/// exceeds the p-part of `|G|`, so non-extensions are cheap to reject.
/// The result is verified to have order exactly the p-part of `|G|`.
pub fn extend_to_maximal_p_subgroup(
    g: &FiniteGroup,
    s: &Subgroup,
    p: u32,
) -> Result<Subgroup, SylowError> {
    if !is_prime(p as u64) {
        return Err(SylowError::NotPrime(p));
    }
    assert!(g.same_instance(s.parent()), "foreign subgroup");
    if let Some(witness) = s.iter().find(|&x| !is_p_power(g.element_order(x), p)) {
        return Err(SylowError::NotPGroup { p, witness });
    }
    let target = p_part(g.order(), p);
    let mut current: Vec<u32> = s.members().to_vec();
    'grow: while (current.len() as u32) < target {
        for cand in g.elements() {
            if current.binary_search(&cand).is_ok() {
                continue;
            }
            let mut gens = current.clone();
            gens.push(cand);
            if let Some(closed) = g.closure(&gens, target) {
                if is_p_power(closed.len() as u32, p) && closed.len() > current.len() {
                    current = closed;
                    continue 'grow;
                }
            }
        }
        return Err(SylowError::Inconsistency(format!(
            "greedy extension stalled at order {} < p-part {target}",
            current.len()
        )));
    }
    if current.len() as u32 != target {
        return Err(SylowError::Inconsistency(format!(
            "extension overshot the p-part: {} vs {target}",
            current.len()
        )));
    }
    Ok(Subgroup::from_members(g, current))
}

/// Every maximal p-subgroup of `g`, as the conjugation orbit of one Sylow
/// p-subgroup, sorted by member list. For `|G| <= 300` the orbit is
/// cross-checked against an exhaustive enumeration of maximal p-subgroups.
pub fn all_sylow_p(g: &FiniteGroup, p: u32) -> Result<Vec<Subgroup>, SylowError> {
    let seed = extend_to_maximal_p_subgroup(g, &Subgroup::trivial(g), p)?;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for x in g.elements() {
        seen.insert(seed.conjugate_by(x).members().to_vec());
    }
    let mut orbit: Vec<Vec<u32>> = seen.into_iter().collect();
    orbit.sort();

    if g.order() <= 300 {
        let exhaustive = exhaustive_maximal_p_subgroups(g, p);
        if exhaustive != orbit {
            return Err(SylowError::Inconsistency(format!(
                "orbit of size {} disagrees with exhaustive search of size {}",
                orbit.len(),
                exhaustive.len()
            )));
        }
    }
    Ok(orbit
        .into_iter()
        .map(|m| Subgroup::from_members(g, m))
        .collect())
}

/// All p-subgroups reachable by single-element extensions from the trivial
/// subgroup (that is, all of them), keeping the maximal ones.
fn exhaustive_maximal_p_subgroups(g: &FiniteGroup, p: u32) -> Vec<Vec<u32>> {
    let target = p_part(g.order(), p);
    let p_elements: Vec<u32> = g
        .elements()
        .filter(|&x| is_p_power(g.element_order(x), p))
        .collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(vec![0]);
    let mut queue: Vec<Vec<u32>> = vec![vec![0]];
    let mut maximal: Vec<Vec<u32>> = Vec::new();
    while let Some(sub) = queue.pop() {
        let mut extended = false;
        for &cand in &p_elements {
            if sub.binary_search(&cand).is_ok() {
                continue;
            }
            let mut gens = sub.clone();
            gens.push(cand);
            if let Some(closed) = g.closure(&gens, target) {
                if is_p_power(closed.len() as u32, p) {
                    extended = true;
                    if seen.insert(closed.clone()) {
                        queue.push(closed);
                    }
                }
            }
        }
        if !extended {
            maximal.push(sub);
        }
    }
    maximal.sort();
    maximal.dedup();
    maximal
}

/// Outcome of checking Sylow's theorems on one `(G, p)` instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SylowReport {
    pub group: String,
    pub p: u32,
    /// Exact p-part of `|G|`.
    pub sylow_order: u32,
    pub count: u32,
    pub count_mod_p: u32,
    pub all_conjugate: bool,
}

/// Compute the full list of Sylow p-subgroups and report the classical
/// facts: the count is 1 mod p and all of them are pairwise conjugate. Any
/// violation in a finite group would be an internal-consistency failure of
/// this crate, not mathematics.
pub fn verify_sylow_theorems(g: &FiniteGroup, p: u32) -> Result<SylowReport, SylowError> {
    let sylows = all_sylow_p(g, p)?;
    let count = sylows.len() as u32;
    let all_conjugate = sylows
        .iter()
        .all(|q| g.find_subgroup_conjugator(&sylows[0], q).is_some());
    Ok(SylowReport {
        group: g.label().to_string(),
        p,
        sylow_order: p_part(g.order(), p),
        count,
        count_mod_p: count % p,
        all_conjugate,
    })
}
