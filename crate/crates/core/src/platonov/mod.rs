//! Machine-checkable evidence that the order-4 subgroups of SL2(Q)
//! generated by `g_p = [0 -p; 1/p 0]` (for primes `p ≡ 3 (mod 4)`) are
//! Sylow 2-subgroups and pairwise non-conjugate.
//!
//! The conjugation equation `g g_i = g_j g` for an unknown `g = [a b; c d]`
//! is eliminated symbolically, exactly mirroring the hand computation:
//! expand to four linear equalities, multiply the first by `-c p_i` and the
//! third by `-a / p_j`, combine with `ad - bc = 1`, and scale to reach
//!
//! ```text
//! p_i (a^2 + c^2 p_j^2) = p_j        (conjugating g_i to g_j)
//! p_i (a^2 + c^2 p_j^2) = -p_j       (conjugating g_i to g_j^3 = -g_j)
//! ```
//!
//! The first has no rational solution because the p_j-adic valuation of the
//! right side is 1 (odd) while the left side's is even (sum of two squares
//! at a prime 3 mod 4) plus `v_{p_j}(p_i) = 0`; the second, because the
//! left side is nonnegative and `a = c = 0` forces determinant 0.

pub mod poly;

use crate::exact::sampling::{random_unimodular_rational, sample_finite_order};
use crate::exact::{integer, matrix_order, rational, InvolutionClass, Mat2, MatError};
use crate::padic::{is_prime, vp, PadicError};
use num_traits::Zero;
use poly::{Mono, Poly, SymMat2, Var};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Error, Debug)]
pub enum PlatonovError {
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: &'static str },
    #[error("the two primes must be distinct, got {0} twice")]
    SamePrime(u64),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

fn check_prime(p: u64) -> Result<(), PlatonovError> {
    if !is_prime(p) {
        return Err(PlatonovError::BadPrime {
            p,
            reason: "not prime",
        });
    }
    if p % 4 != 3 {
        return Err(PlatonovError::BadPrime {
            p,
            reason: "not congruent to 3 mod 4",
        });
    }
    Ok(())
}

/// `[0 -p; 1/p 0]`.
pub fn generator_matrix(p: u64) -> Mat2 {
    Mat2::new(
        integer(0),
        integer(-(p as i64)),
        rational(1, p as i64),
        integer(0),
    )
}

/// A validated generator record: the matrix, with determinant 1, square
/// `-I`, and order 4 all verified in exact arithmetic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlatonovGenerator {
    pub p: u64,
    pub matrix: Mat2,
    pub order: u32,
    pub subgroup_order: u32,
}

pub fn platonov_generator(p: u64) -> Result<PlatonovGenerator, PlatonovError> {
    check_prime(p)?;
    let matrix = generator_matrix(p);
    if !matrix.det().eq(&integer(1)) {
        return Err(PlatonovError::Inconsistency(format!(
            "det g_{p} = {} != 1",
            matrix.det()
        )));
    }
    if matrix.mul(&matrix) != Mat2::identity().neg() {
        return Err(PlatonovError::Inconsistency(format!("g_{p}^2 != -I")));
    }
    let order = matrix_order(&matrix, 12)?
        .ok_or_else(|| PlatonovError::Inconsistency(format!("g_{p} has order > 12")))?;
    if order != 4 {
        return Err(PlatonovError::Inconsistency(format!(
            "g_{p} has order {order} != 4"
        )));
    }
    Ok(PlatonovGenerator {
        p,
        matrix,
        order,
        subgroup_order: order,
    })
}

/// One recorded symbolic elimination of `g g_i = t g` down to the final
/// obstruction equation. All polynomials are stored in their deterministic
/// display form; `verify` recomputes everything from the primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationRecord {
    pub p_i: u64,
    pub p_j: u64,
    /// `false`: the target is `g_j`; `true`: the target is `g_j^3 = -g_j`.
    pub target_is_cube: bool,
    /// The four entry equalities of `g g_i = t g`, in reading order
    /// (0,0), (1,0), (0,1), (1,1).
    pub equalities: [String; 4],
    /// Multiplier applied to the first equality and the resulting relation.
    pub multiplier_first: String,
    pub relation_first: String,
    /// Multiplier applied to the third equality and the resulting relation.
    pub multiplier_third: String,
    pub relation_third: String,
    /// `a*d - b*c - 1`, from the determinant.
    pub det_relation: String,
    /// The combination of the three relations, before clearing `p_j`.
    pub combined: String,
    /// Scalar that clears denominators in the combination.
    pub scale: String,
    /// Final obstruction polynomial (left side minus right side), equal
    /// coefficient-for-coefficient to `p_i*(a^2 + p_j^2*c^2) ∓ p_j`.
    pub obstruction: String,
}

/// Run the elimination. Errors if the mechanically derived obstruction
/// fails to match the expected equation coefficient-for-coefficient.
pub fn eliminate(
    p_i: u64,
    p_j: u64,
    target_is_cube: bool,
) -> Result<EliminationRecord, PlatonovError> {
    let g = SymMat2::unknown();
    let gi = SymMat2::constant(&generator_matrix(p_i));
    let gj = generator_matrix(p_j);
    let target = if target_is_cube {
        // g_j^3 = -g_j because g_j^2 = -I
        let cube = gj.pow(3);
        if cube != gj.neg() {
            return Err(PlatonovError::Inconsistency("g_j^3 != -g_j".into()));
        }
        SymMat2::constant(&cube)
    } else {
        SymMat2::constant(&gj)
    };

    let lhs = g.mul(&gi);
    let rhs = target.mul(&g);
    let difference = lhs.sub(&rhs);
    // reading order (0,0), (1,0), (0,1), (1,1)
    let order = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let equalities: Vec<String> = order
        .iter()
        .map(|&(r, c)| format!("{} = {}", lhs.entries[r][c], rhs.entries[r][c]))
        .collect();
    let eq_first = &difference.entries[0][0];
    let eq_third = &difference.entries[0][1];

    let pi_rat = integer(p_i as i64);
    let pj_rat = integer(p_j as i64);

    // multiply the first equality by -c*p_i and the third by -a/p_j
    let mult_first = Poly::var(Var::C).scale(&-pi_rat.clone());
    let relation_first = eq_first.mul(&mult_first);
    let mult_third = Poly::var(Var::A).scale(&-(integer(1) / pj_rat.clone()));
    let relation_third = eq_third.mul(&mult_third);

    // ad - bc - 1 = 0
    let mono_ad = Mono::product(Var::A, Var::D);
    let mono_bc = Mono::product(Var::B, Var::C);
    let det_relation = Poly::var(Var::A)
        .mul(&Poly::var(Var::D))
        .sub(&Poly::var(Var::B).mul(&Poly::var(Var::C)))
        .sub(&Poly::from_i64(1));

    // eliminate the ad and bc monomials using the two relations
    let alpha = -(det_relation.coeff(&mono_ad) / relation_third.coeff(&mono_ad));
    let partial = det_relation.add(&relation_third.scale(&alpha));
    let beta = -(partial.coeff(&mono_bc) / relation_first.coeff(&mono_bc));
    let combined = partial.add(&relation_first.scale(&beta));

    // scale so the a^2 coefficient becomes exactly p_i
    let mono_a2 = Mono::product(Var::A, Var::A);
    let a2 = combined.coeff(&mono_a2);
    if a2.is_zero() {
        return Err(PlatonovError::Inconsistency(
            "combination lost the a^2 term".into(),
        ));
    }
    let scale = pi_rat.clone() / a2;
    let obstruction = combined.scale(&scale);

    let sign = if target_is_cube { 1 } else { -1 };
    let expected = Poly::var(Var::A)
        .mul(&Poly::var(Var::A))
        .scale(&pi_rat)
        .add(
            &Poly::var(Var::C)
                .mul(&Poly::var(Var::C))
                .scale(&(pi_rat.clone() * &pj_rat * &pj_rat)),
        )
        .add(&Poly::constant(pj_rat.clone() * integer(sign)));
    if obstruction != expected {
        return Err(PlatonovError::Inconsistency(format!(
            "elimination produced {obstruction}, expected {expected}"
        )));
    }

    Ok(EliminationRecord {
        p_i,
        p_j,
        target_is_cube,
        equalities: equalities.try_into().expect("four entries"),
        multiplier_first: mult_first.to_string(),
        relation_first: relation_first.to_string(),
        multiplier_third: mult_third.to_string(),
        relation_third: relation_third.to_string(),
        det_relation: det_relation.to_string(),
        combined: combined.to_string(),
        scale: scale.to_string(),
        obstruction: obstruction.to_string(),
    })
}

/// Valuation refutation of `p_i (a^2 + c^2 p_j^2) = p_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityRefutation {
    /// `v_{p_j}(p_j) = 1`, odd.
    pub rhs_valuation: i64,
    /// `v_{p_j}(p_i) = 0`.
    pub p_i_valuation: i64,
    pub argument: String,
}

/// Sign refutation of `p_i (a^2 + c^2 p_j^2) = -p_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityRefutation {
    pub argument: String,
    /// Determinant after substituting `a = c = 0` into the case-2
    /// equalities: the remaining entries are forced to 0.
    pub zero_pair_determinant: String,
}

/// Full non-conjugacy certificate for a pair of generator subgroups.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NonConjugacyCertificate {
    pub p_i: u64,
    pub p_j: u64,
    pub case1: EliminationRecord,
    pub case1_refutation: ParityRefutation,
    pub case2: EliminationRecord,
    pub case2_refutation: PositivityRefutation,
    /// Number of seeded random unimodular rational matrices confirmed not
    /// to conjugate `<g_i>` onto `<g_j>`.
    pub sampled_conjugators: u64,
    pub seed: u64,
}

fn parity_refutation(p_i: u64, p_j: u64) -> Result<ParityRefutation, PlatonovError> {
    let rhs_valuation = vp(&integer(p_j as i64), p_j)?
        .finite()
        .expect("p_j is nonzero");
    let p_i_valuation = vp(&integer(p_i as i64), p_j)?
        .finite()
        .expect("p_i is nonzero");
    if rhs_valuation != 1 || p_i_valuation != 0 {
        return Err(PlatonovError::Inconsistency(format!(
            "unexpected valuations: v(p_j) = {rhs_valuation}, v(p_i) = {p_i_valuation}"
        )));
    }
    Ok(ParityRefutation {
        rhs_valuation,
        p_i_valuation,
        argument: format!(
            "v_{p_j} of the right side is 1 (odd); on the left, v_{p_j}({p_i}) = 0 and \
             v_{p_j}(a^2 + ({p_j}*c)^2) is even for every rational pair other than (0, 0) \
             because {p_j} is congruent to 3 mod 4, while a = c = 0 makes the left side 0, \
             not {p_j}; so no rational solution exists"
        ),
    })
}

fn positivity_refutation(p_i: u64, p_j: u64) -> PositivityRefutation {
    // substitute a = c = 0 into the case-2 entry equalities: b and d die,
    // so det g = ad - bc = 0, contradicting det g = 1
    let g = SymMat2::unknown();
    let gi = SymMat2::constant(&generator_matrix(p_i));
    let target = SymMat2::constant(&generator_matrix(p_j).neg());
    let difference = g.mul(&gi).sub(&target.mul(&g));
    let zero = Poly::zero();
    let solve = |p: &Poly| p.substitute(Var::A, &zero).substitute(Var::C, &zero);
    // (0,0) entry forces b = 0, (1,0) entry forces d = 0
    let forced_b = solve(&difference.entries[0][0]);
    let forced_d = solve(&difference.entries[1][0]);
    let det_after = Poly::var(Var::A)
        .mul(&Poly::var(Var::D))
        .sub(&Poly::var(Var::B).mul(&Poly::var(Var::C)))
        .substitute(Var::A, &zero)
        .substitute(Var::C, &zero);
    PositivityRefutation {
        argument: format!(
            "the left side {p_i}*(a^2 + ({p_j}*c)^2) is a nonnegative rational for every (a, c), \
             but the right side is -{p_j} < 0; and (a, c) = (0, 0) is impossible because the \
             entry equalities then force b = 0 (from {forced_b} = 0) and d = 0 (from {forced_d} \
             = 0), giving determinant {det_after} = 0 instead of 1"
        ),
        zero_pair_determinant: det_after.to_string(),
    }
}

/// Build the certificate that `<g_i>` and `<g_j>` are not conjugate in
/// SL2(Q): both conjugation targets are eliminated to their obstruction
/// equations, each obstruction is refuted, and a seeded sample of random
/// unimodular rational matrices confirms none conjugates one subgroup onto
/// the other.
pub fn nonconjugacy_certificate(
    p_i: u64,
    p_j: u64,
    seed: u64,
) -> Result<NonConjugacyCertificate, PlatonovError> {
    check_prime(p_i)?;
    check_prime(p_j)?;
    if p_i == p_j {
        return Err(PlatonovError::SamePrime(p_i));
    }
    let case1 = eliminate(p_i, p_j, false)?;
    let case2 = eliminate(p_i, p_j, true)?;
    let case1_refutation = parity_refutation(p_i, p_j)?;
    let case2_refutation = positivity_refutation(p_i, p_j);

    let gi = generator_matrix(p_i);
    let gj = generator_matrix(p_j);
    let gj_cube = gj.neg();
    let mut rng = crate::rng::seeded(seed);
    let sampled_conjugators = 1000u64;
    for _ in 0..sampled_conjugators {
        let g = random_unimodular_rational(&mut rng);
        let conj = gi.conjugate_by(&g)?;
        // <g_i>^g = <g_j> would need g g_i g^-1 to be an order-4 generator
        // of <g_j>, i.e. g_j or g_j^3
        if conj == gj || conj == gj_cube {
            return Err(PlatonovError::Inconsistency(format!(
                "sampled matrix {g} conjugates g_{p_i} into <g_{p_j}>"
            )));
        }
    }

    Ok(NonConjugacyCertificate {
        p_i,
        p_j,
        case1,
        case1_refutation,
        case2,
        case2_refutation,
        sampled_conjugators,
        seed,
    })
}

impl NonConjugacyCertificate {
    /// Re-derive everything from `(p_i, p_j, seed)` and compare with the
    /// stored records; serialized certificates stay independently checkable.
    pub fn verify(&self) -> Result<(), PlatonovError> {
        let fresh = nonconjugacy_certificate(self.p_i, self.p_j, self.seed)?;
        if fresh.case1 != self.case1
            || fresh.case2 != self.case2
            || fresh.case1_refutation != self.case1_refutation
            || fresh.case2_refutation != self.case2_refutation
            || fresh.sampled_conjugators != self.sampled_conjugators
        {
            return Err(PlatonovError::Inconsistency(
                "stored certificate differs from recomputation".into(),
            ));
        }
        Ok(())
    }
}

/// Refutation record for an order-8 element of SL2(Q).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Order8Refutation {
    pub trace_constraint: String,
    pub parity_argument: String,
    /// Random rational traces checked for `v_2(t^2) = 2 v_2(t)` (even, so
    /// never 1) and `t^2 != 2`.
    pub sampled_traces: u64,
    /// Seeded finite-order samples whose orders were recomputed.
    pub finite_order_samples: u64,
    pub orders_seen: Vec<u32>,
    pub order8_seen: bool,
    pub seed: u64,
}

/// No element of SL2(Q) has order 8: its eigenvalues would be a primitive
/// 8th root of unity and its inverse, forcing trace `t` with `t^2 = 2`,
/// which has no rational solution by 2-adic parity.
pub fn order8_impossibility(seed: u64) -> Result<Order8Refutation, PlatonovError> {
    let mut rng = crate::rng::seeded(seed);
    let sampled_traces = 1000u64;
    let two = integer(2);
    for _ in 0..sampled_traces {
        let t = loop {
            let t = rational(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000));
            if !t.is_zero() {
                break t;
            }
        };
        let squared = &t * &t;
        if squared == two {
            return Err(PlatonovError::Inconsistency(format!("({t})^2 = 2")));
        }
        let vt = vp(&t, 2)?.finite().expect("t is nonzero");
        let vt2 = vp(&squared, 2)?.finite().expect("t^2 is nonzero");
        if vt2 != 2 * vt || vt2 == 1 {
            return Err(PlatonovError::Inconsistency(format!(
                "2-adic arithmetic failure at t = {t}: v(t) = {vt}, v(t^2) = {vt2}"
            )));
        }
    }

    let finite_order_samples = 1000u64;
    let mut orders_seen = Vec::new();
    let mut order8_seen = false;
    for _ in 0..finite_order_samples {
        let (expected, m) = sample_finite_order(&mut rng);
        let order = matrix_order(&m, 12)?.ok_or_else(|| {
            PlatonovError::Inconsistency("finite-order sample exceeded the bound".into())
        })?;
        if order != expected {
            return Err(PlatonovError::Inconsistency(format!(
                "conjugation changed the order: {expected} -> {order}"
            )));
        }
        if order == 8 {
            order8_seen = true;
        }
        if !orders_seen.contains(&order) {
            orders_seen.push(order);
        }
    }
    orders_seen.sort_unstable();
    if order8_seen {
        return Err(PlatonovError::Inconsistency(
            "an order-8 element appeared in the sample set".into(),
        ));
    }

    Ok(Order8Refutation {
        trace_constraint: "an order-8 element of SL2(Q) has characteristic polynomial \
                           x^2 - t*x + 1 with a primitive 8th root of unity as eigenvalue, \
                           forcing t^2 = 2"
            .to_string(),
        parity_argument: "v_2(t^2) = 2*v_2(t) is even for every nonzero rational t, \
                          but v_2(2) = 1 is odd, so t^2 = 2 has no rational solution"
            .to_string(),
        sampled_traces,
        finite_order_samples,
        orders_seen,
        order8_seen,
        seed,
    })
}

/// Refutation record for an embedding of the quaternion group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Q8Refutation {
    pub canonical_rotation: Mat2,
    /// The one step taken on faith: order-4 elements of GL2(R) are
    /// conjugate over the reals to the canonical rotation. Recorded as an
    /// assumption because it lives over R, where exact arithmetic does not
    /// apply; the rest of the refutation is exact over Q.
    pub rotation_assumption: String,
    /// Relations extracted symbolically from `AB + BA = 0`.
    pub anticommutation_relations: Vec<String>,
    pub forced_shape: String,
    pub b_squared: String,
    pub final_constraint: String,
    /// Shaped samples `[a b; b -a]`, all anticommuting with the rotation.
    pub shaped_samples: u64,
    /// General samples, anticommuting exactly when they have the shape.
    pub general_samples: u64,
    pub seed: u64,
}

/// The quaternion group does not embed in GL2 over the rationals: a pair
/// `A, B` with `A^2 = B^2 = -I` and `AB = -BA` may take `A` to be the
/// canonical rotation, and anticommutation then forces `B = [a b; b -a]`,
/// whose square is `(a^2 + b^2) I`; `a^2 + b^2 = -1` has no rational
/// solution.
pub fn q8_embedding_refutation(seed: u64) -> Result<Q8Refutation, PlatonovError> {
    let rotation = Mat2::from_i64(0, 1, -1, 0);
    let a_sym = SymMat2::constant(&rotation);
    let b_sym = SymMat2::unknown();
    let anti = a_sym.mul(&b_sym).add(&b_sym.mul(&a_sym));

    // collect the distinct non-trivial entry relations of AB + BA = 0
    let mut relations: Vec<Poly> = Vec::new();
    for r in 0..2 {
        for c in 0..2 {
            let entry = &anti.entries[r][c];
            if entry.is_zero() {
                continue;
            }
            if !relations.iter().any(|p| p == entry || p == &entry.neg()) {
                relations.push(entry.clone());
            }
        }
    }
    // expected: c - b = 0 and a + d = 0 (up to sign)
    let c_minus_b = Poly::var(Var::C).sub(&Poly::var(Var::B));
    let a_plus_d = Poly::var(Var::A).add(&Poly::var(Var::D));
    let matches = |p: &Poly, q: &Poly| p == q || *p == q.neg();
    if relations.len() != 2
        || !relations.iter().any(|p| matches(p, &c_minus_b))
        || !relations.iter().any(|p| matches(p, &a_plus_d))
    {
        return Err(PlatonovError::Inconsistency(format!(
            "anticommutation relations came out as {relations:?}"
        )));
    }

    // substitute c -> b, d -> -a and square
    let shaped = SymMat2 {
        entries: [
            [Poly::var(Var::A), Poly::var(Var::B)],
            [Poly::var(Var::B), Poly::var(Var::A).neg()],
        ],
    };
    let squared = shaped.mul(&shaped);
    let norm = Poly::var(Var::A)
        .mul(&Poly::var(Var::A))
        .add(&Poly::var(Var::B).mul(&Poly::var(Var::B)));
    if squared.entries[0][0] != norm
        || squared.entries[1][1] != norm
        || !squared.entries[0][1].is_zero()
        || !squared.entries[1][0].is_zero()
    {
        return Err(PlatonovError::Inconsistency(
            "B^2 is not (a^2 + b^2) I".into(),
        ));
    }

    // sampling: the shape is exactly the anticommutation locus
    let mut rng = crate::rng::seeded(seed);
    let shaped_samples = 500u64;
    let general_samples = 500u64;
    let rand_rat = |rng: &mut rand_chacha::ChaCha8Rng| {
        rational(rng.gen_range(-50..=50), rng.gen_range(1..=20))
    };
    for _ in 0..shaped_samples {
        let a = rand_rat(&mut rng);
        let b = rand_rat(&mut rng);
        let m = Mat2::new(a.clone(), b.clone(), b, -a);
        if rotation.mul(&m) != m.mul(&rotation).neg() {
            return Err(PlatonovError::Inconsistency(
                "a shaped matrix failed to anticommute".into(),
            ));
        }
    }
    for _ in 0..general_samples {
        let m = Mat2::new(
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            rand_rat(&mut rng),
            rand_rat(&mut rng),
        );
        let anticommutes = rotation.mul(&m) == m.mul(&rotation).neg();
        let has_shape = m.c == m.b && m.d == -m.a.clone();
        if anticommutes != has_shape {
            return Err(PlatonovError::Inconsistency(format!(
                "shape extraction disagrees with anticommutation at {m}"
            )));
        }
    }

    Ok(Q8Refutation {
        canonical_rotation: rotation,
        rotation_assumption: "order-4 elements of GL2(R) are conjugate over the reals to the \
                              canonical rotation; taken as given (it lives over R), which is \
                              enough because the contradiction below is rational"
            .to_string(),
        anticommutation_relations: relations.iter().map(|p| p.to_string()).collect(),
        forced_shape: "[a b; b -a]".to_string(),
        b_squared: format!("({norm}) * I"),
        final_constraint: "a^2 + b^2 = -1 over Q: unsatisfiable, a sum of squares is nonnegative"
            .to_string(),
        shaped_samples,
        general_samples,
        seed,
    })
}

/// Sampled evidence that `-I` is the only non-identity involution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvolutionSurvey {
    pub samples: u64,
    pub involutions_classified: u64,
    pub all_central: bool,
    pub seed: u64,
}

pub fn involution_survey(samples: u64, seed: u64) -> Result<InvolutionSurvey, PlatonovError> {
    let mut rng = crate::rng::seeded(seed);
    let mut classified = 0u64;
    for _ in 0..samples {
        let (order, m) = sample_finite_order(&mut rng);
        let candidate = match order {
            2 => Some(m),
            // the square of an order-4 element is an involution
            4 => Some(m.mul(&m)),
            _ => None,
        };
        if let Some(inv) = candidate {
            match crate::exact::involution_classify(&inv)? {
                InvolutionClass::CentralInvolution => classified += 1,
                InvolutionClass::Identity => {
                    return Err(PlatonovError::Inconsistency(
                        "an order-2 construction produced the identity".into(),
                    ))
                }
            }
        }
    }
    Ok(InvolutionSurvey {
        samples,
        involutions_classified: classified,
        all_central: true,
        seed,
    })
}

/// The bundled Sylow evidence for one generator subgroup: verified order-4
/// data, the unique-involution survey, both impossibility refutations, and
/// the assembled maximality argument with its cited (non-computed) inputs
/// labeled as such.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SylowEvidence {
    pub generator: PlatonovGenerator,
    pub involutions: InvolutionSurvey,
    pub order8: Order8Refutation,
    pub q8: Q8Refutation,
    /// Steps cited from the literature rather than verified here.
    pub cited: Vec<String>,
    /// The maximality chain, in order.
    pub maximality_argument: Vec<String>,
}

pub fn sylow_certificate(p: u64, seed: u64) -> Result<SylowEvidence, PlatonovError> {
    let generator = platonov_generator(p)?;
    let involutions = involution_survey(1000, seed)?;
    let order8 = order8_impossibility(seed)?;
    let q8 = q8_embedding_refutation(seed)?;
    Ok(SylowEvidence {
        generator,
        involutions,
        order8,
        q8,
        cited: vec![
            "order-4 elements of GL2(R) are conjugate over the reals to the canonical rotation \
             (used by the quaternion refutation; real, not recomputed)"
                .to_string(),
            "periodic linear groups are locally finite (Schur), so an infinite 2-subgroup of \
             SL2(Q) would contain finite subgroups of every size up to 8 and beyond (cited, \
             not verified computationally)"
                .to_string(),
        ],
        maximality_argument: vec![
            format!("the subgroup generated by g_{p} has order 4, verified in exact arithmetic"),
            "any strictly larger 2-subgroup would contain a subgroup of order 8".to_string(),
            "an order-8 subgroup of SL2(Q) has a unique involution and no order-8 element, \
             which forces the quaternion shape among the five order-8 group types"
                .to_string(),
            "the quaternion group does not embed (anticommutation forces a^2 + b^2 = -1)"
                .to_string(),
            "so no order-8 subgroup exists and the order-4 subgroup is a maximal 2-subgroup"
                .to_string(),
        ],
    })
}
