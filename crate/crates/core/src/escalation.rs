//! Conjugator search for Sylow 2-subgroups by intersection escalation.
//!
//! Given distinct Sylow 2-subgroups `P, Q` with `D = P ∩ Q`, one escalation
//! step works inside `N_G(D)/D`: both `N_P(D)` and `N_Q(D)` strictly contain
//! `D` (finite 2-groups satisfy the normalizer condition), so their images
//! in the quotient contain involutions `ī`, `j̄`. Either the two are
//! conjugate in the quotient — lifting the conjugator moves `P` onto a
//! Sylow subgroup meeting `Q` in more than `D` — or some involution `k̄`
//! commutes with both, in which case `⟨D,i,k⟩` and `⟨D,j,k⟩` are 2-groups
//! and extending them to Sylow 2-subgroups `R_i`, `R_j` produces the chain
//! `P–R_i–R_j–Q` whose consecutive intersections all exceed `|D|`. Iterating
//! both cases terminates because intersections strictly grow, and yields an
//! explicit conjugator.
//!
//! One or the other case must apply in any finite group: two involutions
//! are conjugate or admit a common centralizing involution. This crate
//! never assumes that dichotomy silently; [`check_involution_dichotomy`]
//! verifies it exhaustively per group and [`escalation_step`] fails loudly
//! with [`EscalationError::DichotomyFailure`] if it were ever violated.

use crate::group::{FiniteGroup, GroupError, Subgroup};
use crate::sylow::{extend_to_maximal_p_subgroup, p_part, SylowError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Error, Debug)]
pub enum EscalationError {
    #[error("subgroup of order {got} is not a Sylow 2-subgroup (the 2-part of |G| is {expected})")]
    NotSylow { got: u32, expected: u32 },
    #[error("escalation needs two distinct Sylow 2-subgroups")]
    NotDistinct,
    #[error("dichotomy failure in the quotient: involutions {i_bar} and {j_bar} are neither conjugate nor centralized by a common involution")]
    DichotomyFailure { i_bar: u32, j_bar: u32 },
    #[error("generated subgroup has order {order}, not a power of 2")]
    NotTwoGroup { order: u32 },
    #[error(transparent)]
    Sylow(#[from] SylowError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Case1Conjugate,
    Case2CommonInvolution,
}

/// Serializable record of one escalation step.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EscalationStep {
    pub kind: StepKind,
    /// `|P ∩ Q|` before the step.
    pub d_order: u32,
    /// Quotient ids of the chosen involutions in `N_G(D)/D`.
    pub i_bar: u32,
    pub j_bar: u32,
    pub k_bar: Option<u32>,
    /// Lifted representatives: `i ∈ N_P(D)`, `j ∈ N_Q(D)`, `k ∈ N_G(D)`.
    pub i_rep: u32,
    pub j_rep: u32,
    pub k_rep: Option<u32>,
    /// Case 1 only: the lifted conjugator `x` with `P₁ = P^x`.
    pub conjugator_fragment: Option<u32>,
    /// Intersection orders of the produced pair(s): one pair for case 1,
    /// the three legs `(P,R_i), (R_i,R_j), (R_j,Q)` for case 2. Every entry
    /// strictly exceeds `d_order`.
    pub produced_intersections: Vec<u32>,
}

/// An escalation step plus the subgroups the caller recurses on.
pub struct StepOutcome {
    pub record: EscalationStep,
    pub next: StepNext,
}

pub enum StepNext {
    /// Case 1: recurse on `(P^x, Q)`.
    Conjugate { x: u32, p1: Subgroup },
    /// Case 2: recurse on the three legs of `P–R_i–R_j–Q`.
    CommonInvolution { r_i: Subgroup, r_j: Subgroup },
}

fn require_sylow2(g: &FiniteGroup, s: &Subgroup) -> Result<(), EscalationError> {
    let expected = p_part(g.order(), 2);
    if s.order() != expected || !s.is_p_subgroup(2) {
        return Err(EscalationError::NotSylow {
            got: s.order(),
            expected,
        });
    }
    Ok(())
}

/// One escalation step on distinct Sylow 2-subgroups.
pub fn escalation_step(
    g: &FiniteGroup,
    p: &Subgroup,
    q: &Subgroup,
) -> Result<StepOutcome, EscalationError> {
    require_sylow2(g, p)?;
    require_sylow2(g, q)?;
    if p == q {
        return Err(EscalationError::NotDistinct);
    }
    let d = p.intersect(q)?;
    let n = g.normalizer(&d);
    let n_p = n.intersect(p)?;
    let n_q = n.intersect(q)?;
    // normalizer condition of finite 2-groups: N_P(D) > D and N_Q(D) > D
    if n_p.order() <= d.order() || n_q.order() <= d.order() {
        return Err(EscalationError::Inconsistency(format!(
            "normalizer condition violated: |D| = {}, |N_P(D)| = {}, |N_Q(D)| = {}",
            d.order(),
            n_p.order(),
            n_q.order()
        )));
    }
    let quot = n.quotient_by(&d)?;
    let carrier = quot.carrier();
    let image_np = quot.image(n_p.iter());
    let image_nq = quot.image(n_q.iter());
    let quot_involutions = carrier.involutions();
    let least_involution_in = |image: &[u32]| -> Option<u32> {
        quot_involutions
            .iter()
            .copied()
            .find(|x| image.binary_search(x).is_ok())
    };
    let i_bar = least_involution_in(&image_np).ok_or_else(|| {
        EscalationError::Inconsistency("no involution in the image of N_P(D)".into())
    })?;
    let j_bar = least_involution_in(&image_nq).ok_or_else(|| {
        EscalationError::Inconsistency("no involution in the image of N_Q(D)".into())
    })?;
    let lift_into = |bar: u32, side: &Subgroup| -> u32 {
        side.iter()
            .find(|&h| quot.project(h) == bar)
            .expect("quotient image member has a representative on its side")
    };
    let i_rep = lift_into(i_bar, &n_p);
    let j_rep = lift_into(j_bar, &n_q);

    // Case 1: ī and j̄ conjugate in N_G(D)/D.
    if let Some(x_bar) = carrier
        .elements()
        .find(|&x| carrier.conj(x, i_bar) == j_bar)
    {
        let x = quot.lift(x_bar);
        let p1 = p.conjugate_by(x);
        let new_d = p1.intersect(q)?;
        if !d.is_contained_in(&p1) || !new_d.contains(j_rep) || new_d.order() <= d.order() {
            return Err(EscalationError::Inconsistency(format!(
                "case 1 lifting identity failed: |D| = {}, |P^x ∩ Q| = {}",
                d.order(),
                new_d.order()
            )));
        }
        return Ok(StepOutcome {
            record: EscalationStep {
                kind: StepKind::Case1Conjugate,
                d_order: d.order(),
                i_bar,
                j_bar,
                k_bar: None,
                i_rep,
                j_rep,
                k_rep: None,
                conjugator_fragment: Some(x),
                produced_intersections: vec![new_d.order()],
            },
            next: StepNext::Conjugate { x, p1 },
        });
    }

    // Case 2: a common centralizing involution k̄.
    let k_bar = quot_involutions
        .iter()
        .copied()
        .find(|&k| {
            carrier.mul(k, i_bar) == carrier.mul(i_bar, k)
                && carrier.mul(k, j_bar) == carrier.mul(j_bar, k)
        })
        .ok_or(EscalationError::DichotomyFailure { i_bar, j_bar })?;
    let k_rep = quot.lift(k_bar);

    let extend = |side_rep: u32| -> Result<Subgroup, EscalationError> {
        let mut gens: Vec<u32> = d.members().to_vec();
        gens.push(side_rep);
        gens.push(k_rep);
        let generated = g.generate_subgroup(&gens);
        if !generated.is_p_subgroup(2) {
            return Err(EscalationError::NotTwoGroup {
                order: generated.order(),
            });
        }
        Ok(extend_to_maximal_p_subgroup(g, &generated, 2)?)
    };
    let r_i = extend(i_rep)?;
    let r_j = extend(j_rep)?;

    let legs = [
        p.intersect(&r_i)?.order(),
        r_i.intersect(&r_j)?.order(),
        r_j.intersect(q)?.order(),
    ];
    if legs.iter().any(|&o| o <= d.order()) {
        return Err(EscalationError::Inconsistency(format!(
            "case 2 legs fail strict growth: |D| = {}, legs {legs:?}",
            d.order()
        )));
    }
    Ok(StepOutcome {
        record: EscalationStep {
            kind: StepKind::Case2CommonInvolution,
            d_order: d.order(),
            i_bar,
            j_bar,
            k_bar: Some(k_bar),
            i_rep,
            j_rep,
            k_rep: Some(k_rep),
            conjugator_fragment: None,
            produced_intersections: legs.to_vec(),
        },
        next: StepNext::CommonInvolution { r_i, r_j },
    })
}

/// Full trace of an escalation run: the steps taken (depth-first over case-2
/// legs), the final conjugator, and the number of steps.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjugatorTrace {
    pub group: String,
    pub steps: Vec<EscalationStep>,
    /// `g` with `g P g^-1 = Q`, verified element by element.
    pub conjugator: u32,
    pub rounds: u32,
}

/// Iterate [`escalation_step`] until `P` is conjugated onto `Q`, composing
/// conjugator fragments. Case-2 chains are resolved leg by leg, left to
/// right. Equal inputs return the identity trace.
pub fn find_conjugator(
    g: &FiniteGroup,
    p: &Subgroup,
    q: &Subgroup,
) -> Result<ConjugatorTrace, EscalationError> {
    require_sylow2(g, p)?;
    require_sylow2(g, q)?;
    let mut steps = Vec::new();
    let conjugator = conjugate_rec(g, p, q, None, &mut steps)?;
    for x in p.iter() {
        if !q.contains(g.conj(conjugator, x)) {
            return Err(EscalationError::Inconsistency(
                "final conjugator fails element-wise verification".into(),
            ));
        }
    }
    Ok(ConjugatorTrace {
        group: g.label().to_string(),
        rounds: steps.len() as u32,
        steps,
        conjugator,
    })
}

fn conjugate_rec(
    g: &FiniteGroup,
    p: &Subgroup,
    q: &Subgroup,
    floor: Option<u32>,
    steps: &mut Vec<EscalationStep>,
) -> Result<u32, EscalationError> {
    if p == q {
        return Ok(g.identity());
    }
    let outcome = escalation_step(g, p, q)?;
    if let Some(bound) = floor {
        // intersections strictly increase along every leg of the trace
        if outcome.record.d_order <= bound {
            return Err(EscalationError::Inconsistency(format!(
                "monotonicity violated: intersection {} after floor {bound}",
                outcome.record.d_order
            )));
        }
    }
    let this_floor = Some(outcome.record.d_order);
    steps.push(outcome.record);
    match outcome.next {
        StepNext::Conjugate { x, p1 } => {
            let rest = conjugate_rec(g, &p1, q, this_floor, steps)?;
            Ok(g.mul(rest, x))
        }
        StepNext::CommonInvolution { r_i, r_j } => {
            let g1 = conjugate_rec(g, p, &r_i, this_floor, steps)?;
            let g2 = conjugate_rec(g, &r_i, &r_j, this_floor, steps)?;
            let g3 = conjugate_rec(g, &r_j, q, this_floor, steps)?;
            Ok(g.mul(g.mul(g3, g2), g1))
        }
    }
}

/// How one involution pair satisfies the dichotomy.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DichotomyWitness {
    Conjugator { x: u32 },
    CommonInvolution { y: u32 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvolutionPair {
    pub g: u32,
    pub h: u32,
    pub witness: DichotomyWitness,
}

/// Per-group dichotomy report: a witness for every unordered pair of
/// distinct involutions, and the (expected empty) list of failures.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DichotomyReport {
    pub group: String,
    pub involutions: u32,
    pub pairs: Vec<InvolutionPair>,
    pub failures: Vec<(u32, u32)>,
}

impl DichotomyReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every unordered pair of distinct involutions, record a conjugator or
/// a common centralizing involution (least id, conjugation tried first). No
/// finite group should ever produce a failure; any failure is reported, not
/// papered over.
pub fn check_involution_dichotomy(g: &FiniteGroup) -> DichotomyReport {
    let involutions = g.involutions();
    let mut pairs = Vec::new();
    let mut failures = Vec::new();
    for (idx, &a) in involutions.iter().enumerate() {
        for &b in &involutions[idx + 1..] {
            let conj = g.elements().find(|&x| g.conj(x, a) == b);
            let witness = match conj {
                Some(x) => Some(DichotomyWitness::Conjugator { x }),
                None => involutions
                    .iter()
                    .copied()
                    .find(|&y| g.conj(y, a) == a && g.conj(y, b) == b)
                    .map(|y| DichotomyWitness::CommonInvolution { y }),
            };
            match witness {
                Some(witness) => pairs.push(InvolutionPair {
                    g: a,
                    h: b,
                    witness,
                }),
                None => failures.push((a, b)),
            }
        }
    }
    DichotomyReport {
        group: g.label().to_string(),
        involutions: involutions.len() as u32,
        pairs,
        failures,
    }
}
