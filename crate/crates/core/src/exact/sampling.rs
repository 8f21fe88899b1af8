//! Seeded sampling of finite-order elements of SL2(Q).
//!
//! Finite-order samples are produced by conjugating the canonical
//! order-1/2/3/4/6 matrices by random integer matrices of determinant 1
//! (products of elementary shears, entries staying below 10^3).
//! Conjugation preserves order exactly, so the sampled orders are known by
//! construction and re-verified by the callers.

use super::{integer, rational, Mat2};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Canonical elements of SL2(Q) of each possible finite order: the identity,
/// `-I`, and the companion matrices of `x^2+x+1`, `x^2+1`, `x^2-x+1`.
pub fn canonical_finite_orders() -> [(u32, Mat2); 5] {
    [
        (1, Mat2::identity()),
        (2, Mat2::identity().neg()),
        (3, Mat2::from_i64(0, -1, 1, -1)),
        (4, Mat2::from_i64(0, -1, 1, 0)),
        (6, Mat2::from_i64(0, -1, 1, 1)),
    ]
}

/// Random element of SL2(Z) as a product of three elementary shears with
/// coefficients in `-9..=9`; entries are bounded by 10^3.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> Mat2 {
    let mut acc = Mat2::identity();
    for step in 0..3 {
        let k = rng.gen_range(-9i64..=9);
        let shear = if step % 2 == 0 {
            Mat2::from_i64(1, k, 0, 1)
        } else {
            Mat2::from_i64(1, 0, k, 1)
        };
        acc = acc.mul(&shear);
    }
    acc
}

/// Random element of SL2(Q) built from shears with small rational
/// coefficients; determinant 1 by construction.
pub fn random_unimodular_rational(rng: &mut ChaCha8Rng) -> Mat2 {
    let mut acc = Mat2::identity();
    for step in 0..3 {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=9);
        let k = rational(num, den);
        let shear = if step % 2 == 0 {
            Mat2::new(integer(1), k, integer(0), integer(1))
        } else {
            Mat2::new(integer(1), integer(0), k, integer(1))
        };
        acc = acc.mul(&shear);
    }
    acc
}

/// Random finite-order element of SL2(Q) with its order.
pub fn sample_finite_order(rng: &mut ChaCha8Rng) -> (u32, Mat2) {
    let canon = canonical_finite_orders();
    let (order, base) = &canon[rng.gen_range(0..canon.len())];
    let g = random_unimodular(rng);
    let sample = base
        .conjugate_by(&g)
        .expect("unimodular conjugator is invertible");
    (*order, sample)
}
