//! Exact arbitrary-precision rationals and 2x2 rational matrices. No
//! floating point anywhere: the valuation arguments downstream collapse
//! under rounding.

pub mod sampling;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar: reduced, with positive denominator ('0' is `0/1`).
/// The representation invariants are maintained by `BigRational` itself.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix determinant is {0}, not 1")]
    NotUnimodular(String),
    #[error("matrix squared is not the identity")]
    NotInvolution,
    #[error("cannot parse {input:?} as {what}")]
    Parse { input: String, what: &'static str },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Parse `p/q` or `p` into a rational.
pub fn parse_rational(text: &str) -> Result<Rational, MatError> {
    let parse_err = || MatError::Parse {
        input: text.to_string(),
        what: "rational",
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| parse_err())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| parse_err())?;
            if den.is_zero() {
                return Err(parse_err());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(text.trim()).map_err(|_| parse_err())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// 2x2 matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mat2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(integer(a), integer(b), integer(c), integer(d))
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn neg(&self) -> Self {
        Mat2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Mat2::new(k * &self.a, k * &self.b, k * &self.c, k * &self.d)
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.d
    }

    /// Inverse by the adjugate formula; `(M * M^-1) = I` exactly.
    pub fn inv(&self) -> Result<Mat2, MatError> {
        let det = self.det();
        if det.is_zero() {
            return Err(MatError::SingularMatrix);
        }
        Ok(Mat2::new(
            &self.d / &det,
            -&self.b / &det,
            -&self.c / &det,
            &self.a / &det,
        ))
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        let mut acc = Mat2::identity();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `g M g^-1`; `g` must be invertible.
    pub fn conjugate_by(&self, g: &Mat2) -> Result<Mat2, MatError> {
        Ok(g.mul(self).mul(&g.inv()?))
    }
}

/// Least `k <= bound` with `M^k = I`, or `None`. Requires `det M = 1`.
/// (Finite orders in SL2(Q) all lie in `{1, 2, 3, 4, 6}`, so a bound of 12
/// is plenty there, but the operation is generic.)
pub fn matrix_order(m: &Mat2, bound: u32) -> Result<Option<u32>, MatError> {
    if !m.det().is_one() {
        return Err(MatError::NotUnimodular(m.det().to_string()));
    }
    assert!(bound >= 1);
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc.is_identity() {
            return Ok(Some(k));
        }
        acc = acc.mul(m);
    }
    Ok(None)
}

/// Classification of an involution in SL2(Q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionClass {
    Identity,
    /// `-I`, the unique non-trivial involution of SL2(Q).
    CentralInvolution,
}

/// Classify `M` with `det M = 1` and `M^2 = I`. Anything other than `I` or
/// `-I` would have eigenvalues `{1, -1}` and determinant `-1`, so reaching
/// the `InternalInconsistency` arm is mathematically impossible.
pub fn involution_classify(m: &Mat2) -> Result<InvolutionClass, MatError> {
    if !m.det().is_one() {
        return Err(MatError::NotUnimodular(m.det().to_string()));
    }
    if !m.mul(m).is_identity() {
        return Err(MatError::NotInvolution);
    }
    if m.is_identity() {
        Ok(InvolutionClass::Identity)
    } else if *m == Mat2::identity().neg() {
        Ok(InvolutionClass::CentralInvolution)
    } else {
        Err(MatError::InternalInconsistency(format!(
            "unimodular involution {m} differs from both I and -I"
        )))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = MatError;

    /// Parse the matrix literal format `[a b; c d]` with rational entries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || MatError::Parse {
            input: s.to_string(),
            what: "2x2 matrix",
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(parse_err)?;
        let (top, bottom) = inner.split_once(';').ok_or_else(parse_err)?;
        let row = |r: &str| -> Result<(Rational, Rational), MatError> {
            let mut it = r.split_whitespace();
            let x = parse_rational(it.next().ok_or_else(parse_err)?)?;
            let y = parse_rational(it.next().ok_or_else(parse_err)?)?;
            if it.next().is_some() {
                return Err(parse_err());
            }
            Ok((x, y))
        };
        let (a, b) = row(top)?;
        let (c, d) = row(bottom)?;
        Ok(Mat2::new(a, b, c, d))
    }
}

impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::sampling::{canonical_finite_orders, random_unimodular, sample_finite_order};
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn determinant_examples() {
        assert_eq!(Mat2::identity().det(), integer(1));
        // the generator shape [0 -p; 1/p 0] has determinant 1 for any p
        let g = Mat2::new(integer(0), integer(-3), rational(1, 3), integer(0));
        assert_eq!(g.det(), integer(1));
    }

    #[test]
    fn inverse_by_adjugate() {
        let rot = Mat2::from_i64(0, 1, -1, 0);
        assert_eq!(rot.inv().unwrap(), Mat2::from_i64(0, -1, 1, 0));
        assert!(rot.mul(&rot.inv().unwrap()).is_identity());
        assert_eq!(
            Mat2::from_i64(1, 2, 2, 4).inv(),
            Err(MatError::SingularMatrix)
        );
    }

    #[test]
    fn matrix_order_examples() {
        assert_eq!(matrix_order(&Mat2::identity(), 12).unwrap(), Some(1));
        assert_eq!(
            matrix_order(&Mat2::from_i64(0, 1, -1, 0), 12).unwrap(),
            Some(4)
        );
        // unipotent: infinite order
        assert_eq!(
            matrix_order(&Mat2::from_i64(1, 1, 0, 1), 100).unwrap(),
            None
        );
        assert!(matches!(
            matrix_order(&Mat2::from_i64(2, 0, 0, 2), 12),
            Err(MatError::NotUnimodular(_))
        ));
    }

    #[test]
    fn canonical_orders_check_out() {
        for (order, m) in canonical_finite_orders() {
            assert_eq!(matrix_order(&m, 12).unwrap(), Some(order));
        }
    }

    #[test]
    fn involution_classification() {
        assert_eq!(
            involution_classify(&Mat2::identity()).unwrap(),
            InvolutionClass::Identity
        );
        assert_eq!(
            involution_classify(&Mat2::identity().neg()).unwrap(),
            InvolutionClass::CentralInvolution
        );
        assert!(matches!(
            involution_classify(&Mat2::from_i64(0, 1, 1, 0)),
            Err(MatError::NotUnimodular(_))
        ));
        assert!(matches!(
            involution_classify(&Mat2::from_i64(1, 1, 0, 1)),
            Err(MatError::NotInvolution)
        ));
    }

    #[test]
    fn matrix_literal_round_trip() {
        let m: Mat2 = "[0 -3; 1/3 0]".parse().unwrap();
        assert_eq!(
            m,
            Mat2::new(integer(0), integer(-3), rational(1, 3), integer(0))
        );
        assert_eq!(m.to_string(), "[0 -3; 1/3 0]");
        assert_eq!(m.to_string().parse::<Mat2>().unwrap(), m);
        for bad in ["", "[1 2; 3]", "[1 2 3; 4 5]", "(1 2; 3 4)", "[a b; c d]"] {
            assert!(bad.parse::<Mat2>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn seeded_samples_have_known_finite_orders_and_bounded_entries() {
        let mut rng = crate::rng::seeded(crate::rng::DEFAULT_SEED);
        let bound = integer(1000);
        for _ in 0..1000 {
            let g = random_unimodular(&mut rng);
            assert_eq!(g.det(), integer(1));
            for entry in [&g.a, &g.b, &g.c, &g.d] {
                assert!(entry.abs() <= bound, "entry {entry} exceeds the bound");
            }
        }
        for _ in 0..1000 {
            let (expected, m) = sample_finite_order(&mut rng);
            assert_eq!(m.det(), integer(1));
            assert_eq!(matrix_order(&m, 12).unwrap(), Some(expected));
            assert!([1, 2, 3, 4, 6].contains(&expected));
        }
    }

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| rational(n, d))
    }

    proptest! {
        #[test]
        fn addition_and_multiplication_are_exact(
            x in rational_strategy(),
            y in rational_strategy().prop_filter("nonzero", |y| !y.is_zero()),
        ) {
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            prop_assert_eq!(&(&x * &y) / &y, x);
        }

        #[test]
        fn rational_representation_invariants(x in rational_strategy()) {
            prop_assert!(x.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(x.numer(), x.denom()) == num_bigint::BigInt::from(1));
        }

        #[test]
        fn matrix_inverse_cancels(seed in any::<u64>()) {
            let mut rng = crate::rng::seeded(seed);
            let m = random_unimodular(&mut rng);
            prop_assert!(m.mul(&m.inv().unwrap()).is_identity());
            prop_assert!(m.inv().unwrap().mul(&m).is_identity());
        }
    }
}
