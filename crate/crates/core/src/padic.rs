//! p-adic valuations on exact rationals, Gaussian-prime residue tests, and
//! the even-valuation property of `α² + β²` at primes `p ≡ 3 (mod 4)`.
//!
//! The parity check runs two routes and cross-checks them: the direct
//! valuation of `α² + β²`, and the reduction route that clears denominators
//! (`v_p(α²+β²) = v_p((α₁β₂)² + (β₁α₂)²) - v_p((α₂β₂)²)`) and then strips
//! `p²` factors using the Gaussian-integer divisibility step: when a prime
//! `p ≡ 3 (mod 4)` divides a sum of two integer squares it divides both
//! bases, because `p` stays prime in `Z[i]` and divides
//! `(A + Bi)(A - Bi)`.

use crate::exact::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is not congruent to 3 mod 4")]
    NotResidueThree(u64),
    #[error("valuation parity check needs (alpha, beta) != (0, 0)")]
    ZeroPair,
    #[error("parity violation: v_{p}(α²+β²) = {valuation} is odd although {p} ≡ 3 (mod 4)")]
    ParityViolation { p: u64, valuation: i64 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Trial-division primality; plenty for desk-scale inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A p-adic valuation: an integer, or `+∞` for the valuation of zero. The
/// infinite value is a distinguished variant, never an integer sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_even(&self) -> bool {
        match self {
            Valuation::Finite(v) => v % 2 == 0,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

fn int_vp(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// `v_p(x) = v_p(numerator) - v_p(denominator)`, with `v_p(0) = +∞`.
pub fn vp(x: &Rational, p: u64) -> Result<Valuation, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    match int_vp(x.numer(), p) {
        None => Ok(Valuation::Infinite),
        Some(num_v) => {
            let den_v = int_vp(x.denom(), p).expect("denominators are nonzero");
            Ok(Valuation::Finite(num_v - den_v))
        }
    }
}

/// Exhaustive search for `x² + y² = n` with `0 <= x <= y`.
pub fn two_squares_representation(n: u64) -> Option<(u64, u64)> {
    let mut x = 0u64;
    while x * x * 2 <= n {
        let rest = n - x * x;
        let y = rest.isqrt();
        if y * y == rest {
            return Some((x, y));
        }
        x += 1;
    }
    None
}

/// Whether `p` stays irreducible in the Gaussian integers: exactly the
/// primes `p ≡ 3 (mod 4)`. A Gaussian factorization `p = (x+yi)(z+ti)` with
/// non-unit factors forces `p = x² + y²` by taking norms, so the residue
/// test and the two-squares search must agree; for small `p` this is
/// checked on the spot.
pub fn is_gaussian_prime(p: u64) -> Result<bool, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    let by_residue = p % 4 == 3;
    if p < 10_000 {
        let by_search = two_squares_representation(p).is_none();
        if by_search != by_residue {
            return Err(PadicError::InternalInconsistency(format!(
                "residue test and two-squares search disagree at p = {p}"
            )));
        }
    }
    Ok(by_residue)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// The denominator-clearing and p²-stripping route of the parity proof,
/// recorded step by step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    /// Integers `A = α₁β₂`, `B = β₁α₂` after clearing denominators.
    pub cleared_a: String,
    pub cleared_b: String,
    /// `v_p((α₂β₂)²)`, subtracted at the end.
    pub denominator_valuation: i64,
    /// Number of times `p` divided `A² + B²`, forcing `p | A` and `p | B`
    /// and stripping a full `p²`.
    pub strips: u32,
}

/// Result of checking the parity of `v_p(α² + β²)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCheck {
    pub p: u64,
    pub valuation: i64,
    pub parity: Parity,
    /// Present when `p ≡ 3 (mod 4)`: the proof-shaped reduction route that
    /// was cross-checked against the direct valuation.
    pub reduction: Option<ReductionTrace>,
}

/// Compute `v_p(α² + β²)` and its parity. For `p ≡ 3 (mod 4)` the value is
/// computed both directly and by the reduction route, the two must agree,
/// and the parity must come out even — an odd valuation would contradict
/// Gaussian-integer irreducibility and raises
/// [`PadicError::ParityViolation`].
pub fn check_valuation_parity(
    alpha: &Rational,
    beta: &Rational,
    p: u64,
) -> Result<ParityCheck, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    if alpha.is_zero() && beta.is_zero() {
        return Err(PadicError::ZeroPair);
    }
    let sum = alpha * alpha + beta * beta;
    let direct = vp(&sum, p)?
        .finite()
        .expect("a sum of squares of a nonzero rational pair is nonzero");

    let reduction = if p % 4 == 3 {
        let trace = reduction_route(alpha, beta, p)?;
        let via_reduction = 2 * i64::from(trace.strips) - trace.denominator_valuation;
        if via_reduction != direct {
            return Err(PadicError::InternalInconsistency(format!(
                "direct valuation {direct} disagrees with reduction route {via_reduction}"
            )));
        }
        if direct % 2 != 0 {
            return Err(PadicError::ParityViolation {
                p,
                valuation: direct,
            });
        }
        Some(trace)
    } else {
        None
    };

    Ok(ParityCheck {
        p,
        valuation: direct,
        parity: if direct % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        },
        reduction,
    })
}

fn reduction_route(
    alpha: &Rational,
    beta: &Rational,
    p: u64,
) -> Result<ReductionTrace, PadicError> {
    let mut a: BigInt = alpha.numer() * beta.denom();
    let mut b: BigInt = beta.numer() * alpha.denom();
    let den: BigInt = alpha.denom() * beta.denom();
    let denominator_valuation = 2 * int_vp(&den, p).expect("denominators are nonzero");
    let big_p = BigInt::from(p);
    let mut strips = 0u32;
    loop {
        let sum = &a * &a + &b * &b;
        debug_assert!(!sum.is_zero());
        if !num_integer::Integer::is_multiple_of(&sum, &big_p) {
            break;
        }
        // p ≡ 3 (mod 4) divides A² + B², so it divides both A and B
        if !num_integer::Integer::is_multiple_of(&a, &big_p)
            || !num_integer::Integer::is_multiple_of(&b, &big_p)
        {
            return Err(PadicError::ParityViolation {
                p,
                valuation: 2 * i64::from(strips) + 1 - denominator_valuation,
            });
        }
        a /= &big_p;
        b /= &big_p;
        strips += 1;
    }
    Ok(ReductionTrace {
        cleared_a: (alpha.numer() * beta.denom()).to_string(),
        cleared_b: (beta.numer() * alpha.denom()).to_string(),
        denominator_valuation,
        strips,
    })
}

/// Certificate that `v_p(α² + β²)` came out even on every sampled rational
/// pair, for a prime `p ≡ 3 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationParityCertificate {
    pub p: u64,
    pub claim: String,
    pub samples: u64,
    pub seed: u64,
    pub all_even: bool,
    /// Reduction trace of the first sample, as a representative.
    pub example: Option<ParityCheck>,
}

/// Run the parity check over `samples` seeded random rational pairs.
pub fn parity_certificate(
    p: u64,
    samples: u64,
    seed: u64,
) -> Result<ValuationParityCertificate, PadicError> {
    if !is_gaussian_prime(p)? {
        return Err(PadicError::NotResidueThree(p));
    }
    let mut rng = crate::rng::seeded(seed);
    let mut example = None;
    for _ in 0..samples {
        let (alpha, beta) = random_pair(&mut rng);
        let check = check_valuation_parity(&alpha, &beta, p)?;
        debug_assert!(matches!(check.parity, Parity::Even));
        if example.is_none() {
            example = Some(check);
        }
    }
    Ok(ValuationParityCertificate {
        p,
        claim: format!("v_{p}(a^2 + b^2) is even for all rationals a, b"),
        samples,
        seed,
        all_even: true,
        example,
    })
}

/// Sharpness of the residue hypothesis: for `p ≡ 1 (mod 4)`, search the
/// sample stream for a pair with odd valuation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OddWitnessReport {
    pub p: u64,
    pub samples_tried: u64,
    pub witness: Option<(String, String, i64)>,
}

pub fn odd_valuation_witness(
    p: u64,
    max_samples: u64,
    seed: u64,
) -> Result<OddWitnessReport, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    let mut rng = crate::rng::seeded(seed);
    for tried in 1..=max_samples {
        let (alpha, beta) = random_pair(&mut rng);
        let check = check_valuation_parity(&alpha, &beta, p)?;
        if matches!(check.parity, Parity::Odd) {
            return Ok(OddWitnessReport {
                p,
                samples_tried: tried,
                witness: Some((alpha.to_string(), beta.to_string(), check.valuation)),
            });
        }
    }
    Ok(OddWitnessReport {
        p,
        samples_tried: max_samples,
        witness: None,
    })
}

/// Random rational pair with numerators in `-1000..=1000`, denominators in
/// `1..=1000`, never `(0, 0)`.
pub fn random_pair(rng: &mut rand_chacha::ChaCha8Rng) -> (Rational, Rational) {
    loop {
        let alpha = crate::exact::rational(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000));
        let beta = crate::exact::rational(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000));
        if !(alpha.is_zero() && beta.is_zero()) {
            return (alpha, beta);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(vp(&integer(0), 3).unwrap(), Valuation::Infinite);
        assert_eq!(vp(&integer(45), 3).unwrap(), Valuation::Finite(2));
        assert_eq!(vp(&rational(1, 2), 2).unwrap(), Valuation::Finite(-1));
        assert_eq!(vp(&rational(8, 9), 3).unwrap(), Valuation::Finite(-2));
        assert_eq!(vp(&integer(5), 4), Err(PadicError::NotPrime(4)));
    }

    #[test]
    fn gaussian_prime_examples() {
        assert!(is_gaussian_prime(3).unwrap());
        assert!(!is_gaussian_prime(5).unwrap()); // 5 = 1 + 4
        assert!(!is_gaussian_prime(2).unwrap()); // 2 = 1 + 1
        assert!(is_gaussian_prime(7).unwrap());
        assert_eq!(is_gaussian_prime(6), Err(PadicError::NotPrime(6)));
    }

    #[test]
    fn residue_test_matches_two_squares_search_below_ten_thousand() {
        for p in (2u64..10_000).filter(|&p| is_prime(p)) {
            assert_eq!(
                is_gaussian_prime(p).unwrap(),
                two_squares_representation(p).is_none(),
                "mismatch at p = {p}"
            );
        }
    }

    #[test]
    fn parity_check_examples() {
        // 9 + 36 = 45 = 3^2 * 5
        let check = check_valuation_parity(&integer(3), &integer(6), 3).unwrap();
        assert_eq!((check.valuation, check.parity), (2, Parity::Even));
        let trace = check.reduction.unwrap();
        assert_eq!((trace.strips, trace.denominator_valuation), (1, 0));

        // 1 + 4 = 5: odd valuation is allowed at p = 5 (it is 1 mod 4)
        let check = check_valuation_parity(&integer(1), &integer(2), 5).unwrap();
        assert_eq!((check.valuation, check.parity), (1, Parity::Odd));
        assert!(check.reduction.is_none());

        // (1/9 + 4/9) = 5/9: negative even valuation at 3
        let check = check_valuation_parity(&rational(1, 3), &rational(2, 3), 3).unwrap();
        assert_eq!((check.valuation, check.parity), (-2, Parity::Even));

        assert_eq!(
            check_valuation_parity(&integer(0), &integer(0), 3),
            Err(PadicError::ZeroPair)
        );
    }

    #[test]
    fn parity_certificate_on_a_residue_three_prime() {
        let cert = parity_certificate(7, 500, 42).unwrap();
        assert!(cert.all_even);
        assert_eq!(cert.samples, 500);
        assert!(cert.example.unwrap().reduction.is_some());
        assert_eq!(
            parity_certificate(5, 10, 42),
            Err(PadicError::NotResidueThree(5))
        );
    }

    #[test]
    fn odd_witness_exists_for_residue_one_primes() {
        for p in [5u64, 13, 17, 29] {
            let report = odd_valuation_witness(p, 10_000, 42).unwrap();
            let (alpha, beta, valuation) = report.witness.expect("witness should appear quickly");
            assert!(valuation % 2 != 0, "p = {p}");
            // re-verify the witness from its serialized form
            let alpha = crate::exact::parse_rational(&alpha).unwrap();
            let beta = crate::exact::parse_rational(&beta).unwrap();
            let check = check_valuation_parity(&alpha, &beta, p).unwrap();
            assert_eq!(check.valuation, valuation);
        }
    }

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-500i64..=500, 1i64..=500).prop_map(|(n, d)| rational(n, d))
    }

    fn min_val(a: Valuation, b: Valuation) -> Valuation {
        match (a, b) {
            (Valuation::Infinite, v) | (v, Valuation::Infinite) => v,
            (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x.min(y)),
        }
    }

    proptest! {
        #[test]
        fn ultrametric_axioms(
            x in rational_strategy(),
            y in rational_strategy(),
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
        ) {
            let vx = vp(&x, p).unwrap();
            let vy = vp(&y, p).unwrap();
            // multiplicativity
            let product = vp(&(&x * &y), p).unwrap();
            match (vx, vy) {
                (Valuation::Finite(a), Valuation::Finite(b)) => {
                    prop_assert_eq!(product, Valuation::Finite(a + b));
                }
                _ => prop_assert_eq!(product, Valuation::Infinite),
            }
            // ultrametric inequality
            let sum = vp(&(&x + &y), p).unwrap();
            match (sum, min_val(vx, vy)) {
                (Valuation::Infinite, _) => {}
                (Valuation::Finite(s), Valuation::Finite(m)) => prop_assert!(s >= m),
                (Valuation::Finite(_), Valuation::Infinite) => {
                    prop_assert!(false, "finite sum from two zero inputs")
                }
            }
        }

        #[test]
        fn squares_have_even_valuation(x in rational_strategy(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
            let squared = vp(&(&x * &x), p).unwrap();
            prop_assert!(squared.is_even());
        }
    }
}
