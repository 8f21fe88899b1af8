//! Polynomials of degree at most 2 in the entries `a, b, c, d` of an
//! unknown 2x2 conjugator, with exact rational coefficients. This is all
//! the computer algebra the conjugation-equation eliminations need; there
//! is deliberately no general CAS here.

use crate::exact::{integer, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// The four unknowns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    C,
    D,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::A, Var::B, Var::C, Var::D];

    fn symbol(self) -> char {
        match self {
            Var::A => 'a',
            Var::B => 'b',
            Var::C => 'c',
            Var::D => 'd',
        }
    }

    fn index(self) -> usize {
        match self {
            Var::A => 0,
            Var::B => 1,
            Var::C => 2,
            Var::D => 3,
        }
    }
}

/// Exponent vector over `(a, b, c, d)`; total degree at most 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mono([u8; 4]);

impl Mono {
    pub const ONE: Mono = Mono([0; 4]);

    pub fn var(v: Var) -> Mono {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Mono(e)
    }

    pub fn product(v: Var, w: Var) -> Mono {
        Mono::var(v).mul(&Mono::var(w))
    }

    pub fn degree(&self) -> u8 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; 4];
        for i in 0..4 {
            e[i] = self.0[i] + other.0[i];
        }
        let m = Mono(e);
        assert!(m.degree() <= 2, "the elimination never needs degree > 2");
        m
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.0[v.index()];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.symbol())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(r: Rational) -> Poly {
        let mut p = Poly::zero();
        p.bump(Mono::ONE, r);
        p
    }

    pub fn from_i64(n: i64) -> Poly {
        Poly::constant(integer(n))
    }

    pub fn var(v: Var) -> Poly {
        let mut p = Poly::zero();
        p.bump(Mono::var(v), integer(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Mono) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(|| integer(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    fn bump(&mut self, mono: Mono, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(|| integer(0));
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.bump(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.bump(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly::zero().sub(self)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.bump(*m, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.bump(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, values: &[Rational; 4]) -> Rational {
        let mut acc = integer(0);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::ALL {
                for _ in 0..m.0[v.index()] {
                    term *= &values[v.index()];
                }
            }
            acc += term;
        }
        acc
    }

    /// Replace `var` by a polynomial of degree at most 1.
    pub fn substitute(&self, var: Var, replacement: &Poly) -> Poly {
        assert!(
            replacement.terms.keys().all(|m| m.degree() <= 1),
            "substitution must be linear to preserve the degree bound"
        );
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut reduced = *m;
            let e = reduced.0[var.index()];
            reduced.0[var.index()] = 0;
            let mut piece = Poly {
                terms: BTreeMap::from([(reduced, c.clone())]),
            };
            for _ in 0..e {
                piece = piece.mul(replacement);
            }
            out = out.add(&piece);
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Deterministic display, highest degree first: `3*a^2 + 147*c^2 - 7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Mono, &Rational)> = self.terms.iter().collect();
        // highest degree first, then alphabetically in the variables
        entries.sort_by(|(m1, _), (m2, _)| m2.degree().cmp(&m1.degree()).then(m2.cmp(m1)));
        for (i, (mono, coeff)) in entries.iter().enumerate() {
            let negative = num_traits::Signed::is_negative(*coeff);
            let magnitude = if negative {
                -(*coeff).clone()
            } else {
                (*coeff).clone()
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_one = magnitude == integer(1);
            if **mono == Mono::ONE {
                write!(f, "{magnitude}")?;
            } else if is_one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{magnitude}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// 2x2 matrix with polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMat2 {
    pub entries: [[Poly; 2]; 2],
}

impl SymMat2 {
    /// The unknown conjugator `[a b; c d]`.
    pub fn unknown() -> SymMat2 {
        SymMat2 {
            entries: [
                [Poly::var(Var::A), Poly::var(Var::B)],
                [Poly::var(Var::C), Poly::var(Var::D)],
            ],
        }
    }

    pub fn constant(m: &crate::exact::Mat2) -> SymMat2 {
        SymMat2 {
            entries: [
                [Poly::constant(m.a.clone()), Poly::constant(m.b.clone())],
                [Poly::constant(m.c.clone()), Poly::constant(m.d.clone())],
            ],
        }
    }

    pub fn mul(&self, other: &SymMat2) -> SymMat2 {
        let e = |r: usize, c: usize| -> Poly {
            self.entries[r][0]
                .mul(&other.entries[0][c])
                .add(&self.entries[r][1].mul(&other.entries[1][c]))
        };
        SymMat2 {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn add(&self, other: &SymMat2) -> SymMat2 {
        let e = |r: usize, c: usize| self.entries[r][c].add(&other.entries[r][c]);
        SymMat2 {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn sub(&self, other: &SymMat2) -> SymMat2 {
        let e = |r: usize, c: usize| self.entries[r][c].sub(&other.entries[r][c]);
        SymMat2 {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }
}
