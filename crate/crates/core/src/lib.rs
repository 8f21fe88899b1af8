//! Desk-scale computational group theory.
//!
//! The crate has two halves. The finite half ([`group`], [`sylow`],
//! [`escalation`], [`folang`]) represents small finite groups explicitly and
//! runs structural computations on them: centralizers, normalizers,
//! quotients, Sylow 2-subgroup enumeration, a conjugator search that grows
//! the intersection of two Sylow 2-subgroups step by step, and a first-order
//! sentence evaluator for the language of groups. The exact half ([`exact`],
//! [`padic`], [`platonov`]) works over arbitrary-precision rationals: 2x2
//! matrix arithmetic, p-adic valuations, the even-valuation lemma for sums
//! of two squares at primes congruent to 3 mod 4, and machine-checkable
//! certificates that the order-4 subgroups of SL2(Q) generated by
//! `[0 -p; 1/p 0]` are pairwise non-conjugate.
//!
//! Everything is deterministic: element ids are canonical, choices are
//! least-id, and all sampling flows from one seeded generator ([`rng`]).

pub mod escalation;
pub mod exact;
pub mod folang;
pub mod group;
pub mod limits;
pub mod padic;
pub mod platonov;
pub mod rng;
pub mod sylow;

pub use group::{FiniteGroup, QuotientGroup, Subgroup};
pub use limits::Limits;
