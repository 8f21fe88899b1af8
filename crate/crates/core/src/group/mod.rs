//! Finite groups with dense element ids and the structural computations the
//! rest of the crate is built on.
//!
//! A [`FiniteGroup`] is an enumerated group: element ids are `0..order` with
//! `0` the identity. Two backends exist. The Cayley backend stores the full
//! multiplication table and is used below 2^12 elements. The permutation
//! backend stores the materialized element list of a permutation group,
//! sorted lexicographically by image tuple (which puts the identity first),
//! and multiplies by composing and looking the product up.
//!
//! Groups are immutable after construction and cheap to clone (the internals
//! are behind an `Arc`), so they can be shared freely across workers.

mod corpus;
mod quotient;
mod subgroup;

pub use corpus::{
    alternating, corpus_up_to, cyclic, dihedral, direct_product, parse_group_name,
    perm_from_cycles, quaternion8, symmetric, DIRECT_PRODUCT_NAMES,
};
pub use quotient::QuotientGroup;
pub use subgroup::Subgroup;

use crate::limits::Limits;
use rand::Rng;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Errors from group construction and the bounded enumerations.
#[derive(Error, Debug)]
pub enum GroupError {
    #[error("invalid group construction: {0}")]
    Invalid(String),
    #[error("kernel is not normal in the numerator (conjugation by element {witness} escapes)")]
    NotNormal { witness: u32 },
    #[error("resource limit exceeded while enumerating {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: usize },
    #[error("subgroup operands belong to different parent groups")]
    ParentMismatch,
    #[error("unknown group name {name:?}; the grammar is C<n>, D<n> (n = order, even), S<n>, A<n>, Q8, joined with 'x' for direct products")]
    UnknownName { name: String },
}

/// Full associativity is checked below this order; above it, 10^4 seeded
/// random triples are checked instead.
const FULL_ASSOC_CHECK: u32 = 64;

/// Cayley tables are only built below this order.
pub const CAYLEY_CAP: u32 = 1 << 12;

enum Backend {
    Cayley {
        table: Vec<u32>,
    },
    Permutation {
        elements: Vec<Vec<u16>>,
        index: HashMap<Vec<u16>, u32>,
    },
}

struct Inner {
    order: u32,
    label: String,
    backend: Backend,
    inverse: Vec<u32>,
}

/// An enumerated finite group. Ids are dense, `0` is the identity.
#[derive(Clone)]
pub struct FiniteGroup(Arc<Inner>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label(), self.order())
    }
}

impl FiniteGroup {
    /// Build a group from an explicit multiplication table (row-major,
    /// `table[a * order + b] = a * b`). Element 0 must be the identity.
    pub fn from_cayley_table(label: &str, order: u32, table: Vec<u32>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Invalid("order must be positive".into()));
        }
        if order >= CAYLEY_CAP {
            return Err(GroupError::Invalid(format!(
                "Cayley backend capped at order {CAYLEY_CAP}, got {order}"
            )));
        }
        if table.len() != (order as usize).pow(2) {
            return Err(GroupError::Invalid("table size != order^2".into()));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(GroupError::Invalid(format!(
                "table entry {bad} out of range"
            )));
        }
        let inverse = compute_inverses(order, |a, b| table[(a * order + b) as usize])?;
        let g = FiniteGroup(Arc::new(Inner {
            order,
            label: label.to_string(),
            backend: Backend::Cayley { table },
            inverse,
        }));
        g.validate()?;
        Ok(g)
    }

    /// Build a permutation group from its full element list. The list is
    /// canonicalized by sorting lexicographically on image tuples, so the
    /// identity gets id 0 and ids are reproducible across runs.
    pub fn from_permutations(
        label: &str,
        degree: u16,
        mut elements: Vec<Vec<u16>>,
    ) -> Result<Self, GroupError> {
        elements.sort();
        elements.dedup();
        let order = elements.len() as u32;
        if order == 0 {
            return Err(GroupError::Invalid("empty element list".into()));
        }
        for p in &elements {
            let mut seen = vec![false; degree as usize];
            if p.len() != degree as usize {
                return Err(GroupError::Invalid("degree mismatch".into()));
            }
            for &img in p {
                if img >= degree || seen[img as usize] {
                    return Err(GroupError::Invalid("not a permutation".into()));
                }
                seen[img as usize] = true;
            }
        }
        let identity: Vec<u16> = (0..degree).collect();
        if elements[0] != identity {
            return Err(GroupError::Invalid(
                "element list does not contain the identity".into(),
            ));
        }
        let index: HashMap<Vec<u16>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        // invert by image-tuple reversal; this also checks closure under
        // inversion (composition closure is covered by validate() below)
        let mut inverse = vec![0u32; order as usize];
        for (i, p) in elements.iter().enumerate() {
            let mut inv = vec![0u16; degree as usize];
            for (j, &img) in p.iter().enumerate() {
                inv[img as usize] = j as u16;
            }
            match index.get(&inv) {
                Some(&id) => inverse[i] = id,
                None => {
                    return Err(GroupError::Invalid(
                        "element list not closed under inversion".into(),
                    ))
                }
            }
        }
        let backend = Backend::Permutation { elements, index };
        let g = FiniteGroup(Arc::new(Inner {
            order,
            label: label.to_string(),
            backend,
            inverse,
        }));
        g.validate()?;
        Ok(g)
    }

    /// Generate a permutation group from generators by closure.
    pub fn from_generators(
        label: &str,
        degree: u16,
        generators: &[Vec<u16>],
        max_order: u32,
    ) -> Result<Self, GroupError> {
        let identity: Vec<u16> = (0..degree).collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(p) = frontier.pop() {
            for gen in generators {
                let q: Vec<u16> = (0..degree as usize).map(|i| p[gen[i] as usize]).collect();
                if seen.insert(q.clone()) {
                    if seen.len() as u32 > max_order {
                        return Err(GroupError::ResourceLimit {
                            what: "generated permutation group",
                            limit: max_order as usize,
                        });
                    }
                    frontier.push(q);
                }
            }
        }
        FiniteGroup::from_permutations(label, degree, seen.into_iter().collect())
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        backend_mul(&self.0.backend, self.0.order, a, b)
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inverse[a as usize]
    }

    /// Conjugate: `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Two groups are the same instance (subgroups of one group may only be
    /// combined with subgroups of the same instance).
    pub fn same_instance(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Image tuple of a permutation-backend element.
    pub fn permutation(&self, id: u32) -> Option<&[u16]> {
        match &self.0.backend {
            Backend::Permutation { elements, .. } => Some(&elements[id as usize]),
            Backend::Cayley { .. } => None,
        }
    }

    /// Id of a permutation given by its image tuple, if present.
    pub fn permutation_id(&self, image: &[u16]) -> Option<u32> {
        match &self.0.backend {
            Backend::Permutation { index, .. } => index.get(image).copied(),
            Backend::Cayley { .. } => None,
        }
    }

    /// Human-readable element name: cycle notation (1-based points) for the
    /// permutation backend, `e`/`g<id>` otherwise.
    pub fn element_name(&self, id: u32) -> String {
        if id == 0 {
            return "e".to_string();
        }
        match self.permutation(id) {
            Some(p) => {
                let mut out = String::new();
                let mut seen = vec![false; p.len()];
                for start in 0..p.len() {
                    if seen[start] || p[start] as usize == start {
                        continue;
                    }
                    out.push('(');
                    let mut j = start;
                    loop {
                        seen[j] = true;
                        out.push_str(&(j + 1).to_string());
                        j = p[j] as usize;
                        if j == start {
                            break;
                        }
                        out.push(' ');
                    }
                    out.push(')');
                }
                out
            }
            None => format!("g{id}"),
        }
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: u32) -> u32 {
        assert!(g < self.order());
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// All `g != e` with `g^2 = e`, ascending.
    pub fn involutions(&self) -> Vec<u32> {
        self.elements()
            .filter(|&g| g != 0 && self.mul(g, g) == 0)
            .collect()
    }

    /// Smallest subgroup containing `gens`, by worklist closure. The empty
    /// generating set yields the trivial subgroup.
    pub fn generate_subgroup(&self, gens: &[u32]) -> Subgroup {
        let members = self
            .closure(gens, u32::MAX)
            .expect("unbounded closure cannot abort");
        Subgroup::from_sorted(self.clone(), members)
    }

    /// Worklist closure of `{e} ∪ gens` under products, aborting with `None`
    /// as soon as the closure exceeds `cap` elements. In a finite group the
    /// set of all products of generators is already a subgroup.
    pub(crate) fn closure(&self, gens: &[u32], cap: u32) -> Option<Vec<u32>> {
        for &g in gens {
            assert!(g < self.order(), "generator out of range");
        }
        let mut member = vec![false; self.order() as usize];
        member[0] = true;
        let mut count = 1u32;
        let mut frontier: Vec<u32> = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    count += 1;
                    if count > cap {
                        return None;
                    }
                    frontier.push(y);
                }
            }
        }
        Some((0..self.order()).filter(|&i| member[i as usize]).collect())
    }

    /// `{g in G : gs = sg for all s in S}`. The centralizer of the empty set
    /// is the whole group.
    pub fn centralizer(&self, s: &[u32]) -> Subgroup {
        let members = self
            .elements()
            .filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::from_sorted(self.clone(), members)
    }

    /// `{g in G : g S g^-1 = S}`; always contains `S`.
    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        assert!(
            self.same_instance(s.parent()),
            "normalizer: foreign subgroup"
        );
        let members = self
            .elements()
            .filter(|&g| s.iter().all(|x| s.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_sorted(self.clone(), members)
    }

    /// Exhaustive scan for `g` with `g P g^-1 = Q`; least id if any exists.
    pub fn find_subgroup_conjugator(&self, p: &Subgroup, q: &Subgroup) -> Option<u32> {
        assert!(self.same_instance(p.parent()) && self.same_instance(q.parent()));
        if p.order() != q.order() {
            return None;
        }
        self.elements()
            .find(|&g| p.iter().all(|x| q.contains(self.conj(g, x))))
    }

    /// Length (number of strict inclusions) of the longest strictly
    /// descending chain of subset-centralizers starting from `C(∅) = G`.
    ///
    /// The distinct subset-centralizers are exactly the intersection closure
    /// of the single-element centralizers together with `G` itself; the
    /// answer is the longest path in the strict-inclusion DAG over them.
    pub fn centralizer_dimension(&self, limits: &Limits) -> Result<u32, GroupError> {
        let words = (self.order() as usize + 63) / 64;
        let mut full = vec![u64::MAX; words];
        trim_bitset(&mut full, self.order());

        let mut sets: HashSet<Vec<u64>> = HashSet::new();
        sets.insert(full.clone());
        let mut worklist: Vec<Vec<u64>> = Vec::new();
        for g in self.elements() {
            let mut bs = vec![0u64; words];
            for h in self.elements() {
                if self.mul(g, h) == self.mul(h, g) {
                    bs[h as usize / 64] |= 1 << (h % 64);
                }
            }
            if sets.insert(bs.clone()) {
                worklist.push(bs);
            }
        }
        let mut all: Vec<Vec<u64>> = sets.iter().cloned().collect();
        while let Some(x) = worklist.pop() {
            for i in 0..all.len() {
                let meet: Vec<u64> = x.iter().zip(&all[i]).map(|(a, b)| a & b).collect();
                if sets.insert(meet.clone()) {
                    if sets.len() > limits.max_centralizers {
                        return Err(GroupError::ResourceLimit {
                            what: "distinct centralizers",
                            limit: limits.max_centralizers,
                        });
                    }
                    all.push(meet.clone());
                    worklist.push(meet);
                }
            }
        }

        // longest chain from the full set in the strict-inclusion DAG
        all.sort_by_key(|b| std::cmp::Reverse(popcount(b)));
        let mut depth = vec![0u32; all.len()];
        let mut best = 0;
        for i in 0..all.len() {
            for j in 0..i {
                if popcount(&all[j]) > popcount(&all[i]) && subset(&all[i], &all[j]) {
                    depth[i] = depth[i].max(depth[j] + 1);
                }
            }
            best = best.max(depth[i]);
        }
        Ok(best)
    }

    /// Enumerate every subgroup by single-element extensions from the
    /// trivial subgroup.
    pub fn all_subgroups(&self, limits: &Limits) -> Result<Vec<Subgroup>, GroupError> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let trivial = vec![0u32];
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        let mut out = Vec::new();
        while let Some(members) = queue.pop() {
            for g in self.elements() {
                if members.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = members.clone();
                gens.push(g);
                let extended = self
                    .closure(&gens, u32::MAX)
                    .expect("unbounded closure cannot abort");
                if seen.insert(extended.clone()) {
                    if seen.len() > limits.max_subgroups {
                        return Err(GroupError::ResourceLimit {
                            what: "subgroups",
                            limit: limits.max_subgroups,
                        });
                    }
                    queue.push(extended);
                }
            }
            out.push(members);
        }
        out.sort();
        Ok(out
            .into_iter()
            .map(|m| Subgroup::from_sorted(self.clone(), m))
            .collect())
    }

    /// True iff every proper subgroup is strictly contained in its
    /// normalizer. Requires full subgroup enumeration, so it is bounded by
    /// `limits.max_subgroups`.
    pub fn check_normalizer_condition(&self, limits: &Limits) -> Result<bool, GroupError> {
        for s in self.all_subgroups(limits)? {
            if s.order() == self.order() {
                continue;
            }
            if self.normalizer(&s).order() == s.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Construction-time invariants: identity two-sided, inverses two-sided,
    /// associativity (full below order 64, 10^4 seeded triples above).
    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order();
        for g in self.elements() {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupError::Invalid(format!("0 is not an identity at {g}")));
            }
            let h = self.inv(g);
            if self.mul(g, h) != 0 || self.mul(h, g) != 0 {
                return Err(GroupError::Invalid(format!(
                    "element {g} lacks a two-sided inverse"
                )));
            }
        }
        let check = |a: u32, b: u32, c: u32| -> Result<(), GroupError> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(GroupError::Invalid(format!(
                    "associativity fails on ({a}, {b}, {c})"
                )));
            }
            Ok(())
        };
        if n <= FULL_ASSOC_CHECK {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = crate::rng::seeded(crate::rng::DEFAULT_SEED);
            for _ in 0..10_000 {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }
}

fn backend_mul(backend: &Backend, order: u32, a: u32, b: u32) -> u32 {
    debug_assert!(a < order && b < order);
    match backend {
        Backend::Cayley { table } => table[(a * order + b) as usize],
        Backend::Permutation { elements, index } => {
            let pa = &elements[a as usize];
            let pb = &elements[b as usize];
            let composed: Vec<u16> = pb.iter().map(|&i| pa[i as usize]).collect();
            *index
                .get(&composed)
                .expect("permutation backend not closed under composition")
        }
    }
}

fn compute_inverses(order: u32, mul: impl Fn(u32, u32) -> u32) -> Result<Vec<u32>, GroupError> {
    let mut inverse = vec![u32::MAX; order as usize];
    for a in 0..order {
        match (0..order).find(|&b| mul(a, b) == 0 && mul(b, a) == 0) {
            Some(b) => inverse[a as usize] = b,
            None => {
                return Err(GroupError::Invalid(format!(
                    "element {a} has no two-sided inverse"
                )))
            }
        }
    }
    Ok(inverse)
}

fn trim_bitset(bits: &mut [u64], order: u32) {
    let rem = order as usize % 64;
    if rem != 0 {
        let last = bits.len() - 1;
        bits[last] &= (1u64 << rem) - 1;
    }
}

fn popcount(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

/// `a ⊆ b`.
fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}
