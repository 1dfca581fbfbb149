//! Second-order integer recurrences and the named families of
//! `X(n) = 6X(n-1) - X(n-2)`.
//!
//! Every sequence here is total over `i64` indices: because `|q| = 1` the
//! recurrence runs backwards as `X(n-2) = q·(X(n) - p·X(n-1))`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_arith::{alpha, beta, QuadRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("recurrence coefficient q must be 1 or -1, got {0}")]
    NotInvertible(i64),
    #[error("unknown family `{0}` (expected one of T, L, B, C, E, NSW, R)")]
    UnknownFamily(String),
}

/// `X(n) = p·X(n-1) + q·X(n-2)` with `X(0) = seed0`, `X(1) = seed1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    p: i64,
    q: i64,
    seed0: BigInt,
    seed1: BigInt,
}

impl RecurrenceSpec {
    pub fn new(
        p: i64,
        q: i64,
        seed0: impl Into<BigInt>,
        seed1: impl Into<BigInt>,
    ) -> Result<Self, SequenceError> {
        if q != 1 && q != -1 {
            return Err(SequenceError::NotInvertible(q));
        }
        Ok(RecurrenceSpec { p, q, seed0: seed0.into(), seed1: seed1.into() })
    }

    /// The recurrence `A(n) = 6A(n-1) - A(n-2)` seeded with `A(0) = r`, `A(1) = s`.
    pub fn six(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Self {
        RecurrenceSpec { p: 6, q: -1, seed0: r.into(), seed1: s.into() }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn seed0(&self) -> &BigInt {
        &self.seed0
    }

    pub fn seed1(&self) -> &BigInt {
        &self.seed1
    }
}

/// Exact term by step-by-step iteration, forwards or backwards from the seed.
pub fn term(spec: &RecurrenceSpec, n: i64) -> BigInt {
    let (p, q) = (BigInt::from(spec.p), BigInt::from(spec.q));
    // (lo, hi) = (X(k), X(k+1))
    let mut lo = spec.seed0.clone();
    let mut hi = spec.seed1.clone();
    if n >= 0 {
        for _ in 0..n {
            let next = &p * &hi + &q * &lo;
            lo = std::mem::replace(&mut hi, next);
        }
    } else {
        for _ in 0..n.unsigned_abs() {
            // q is ±1, so dividing by q is multiplying by q
            let prev = &q * (&hi - &p * &lo);
            hi = std::mem::replace(&mut lo, prev);
        }
    }
    lo
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Mat2 {
    m: [[BigInt; 2]; 2],
}

impl Mat2 {
    fn identity() -> Self {
        Mat2 { m: [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]] }
    }

    fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Mat2 { m: m.map(|row| row.map(BigInt::from)) }
    }

    fn mul(&self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.m, &rhs.m);
        Mat2 {
            m: [
                [&a[0][0] * &b[0][0] + &a[0][1] * &b[1][0], &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1]],
                [&a[1][0] * &b[0][0] + &a[1][1] * &b[1][0], &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1]],
            ],
        }
    }

    fn pow(&self, mut e: u64) -> Mat2 {
        let mut base = self.clone();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Exact term in `O(log |n|)` multiplications via the companion matrix
/// `[[p, q], [1, 0]]`. Negative `n` powers the inverse `[[0, 1], [q, -pq]]`,
/// which is integral because the determinant is `-q = ±1`.
pub fn term_fast(spec: &RecurrenceSpec, n: i64) -> BigInt {
    let step = if n >= 0 {
        Mat2::from_i64([[spec.p, spec.q], [1, 0]])
    } else {
        Mat2::from_i64([[0, 1], [spec.q, -spec.p * spec.q]])
    };
    let m = step.pow(n.unsigned_abs()).m;
    // (X(n+1), X(n))ᵀ = M^n (X(1), X(0))ᵀ
    &m[1][0] * &spec.seed1 + &m[1][1] * &spec.seed0
}

/// The named sequence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Balancing-number family, `T(0) = 0, T(1) = 1`.
    T,
    /// Companion family, `L(n) = αⁿ + βⁿ`.
    L,
    /// `B(n) = T(n+1) - T(n)`.
    B,
    /// `C(n) = 2(T(n+1) + T(n))`.
    C,
    /// `E(n) = 4B(n)`.
    E,
    /// Newman–Shanks–Williams numbers, `C(n)/2`.
    Nsw,
    /// Numerators of the convergents to `√2`, `R(n) = 2R(n-1) + R(n-2)`.
    R,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::T, Family::L, Family::B, Family::C, Family::E, Family::Nsw, Family::R];

    /// Recurrence defining this family. NSW has none of its own: it is `C/2`.
    pub fn spec(self) -> Option<RecurrenceSpec> {
        let (p, q, a, b) = match self {
            Family::T => (6, -1, 0, 1),
            Family::L => (6, -1, 2, 6),
            Family::B => (6, -1, 1, 5),
            Family::C => (6, -1, 2, 14),
            Family::E => (6, -1, 4, 20),
            Family::R => (2, 1, 1, 1),
            Family::Nsw => return None,
        };
        Some(RecurrenceSpec { p, q, seed0: a.into(), seed1: b.into() })
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::T => "T",
            Family::L => "L",
            Family::B => "B",
            Family::C => "C",
            Family::E => "E",
            Family::Nsw => "NSW",
            Family::R => "R",
        }
    }

    pub fn oeis_id(self) -> &'static str {
        match self {
            Family::T => "A001109",
            Family::L => "A003499",
            Family::B => "A001653",
            Family::C => "A077444",
            Family::E => "A077445",
            Family::Nsw => "A002315",
            Family::R => "A001333",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| SequenceError::UnknownFamily(s.to_string()))
    }
}

/// `n`-th term of a family, for any integer `n`.
pub fn family_term(f: Family, n: i64) -> BigInt {
    match f.spec() {
        Some(spec) => term_fast(&spec, n),
        None => {
            let c = family_term(Family::C, n);
            assert!(c.is_even(), "C({n}) = {c} is odd");
            c / 2
        }
    }
}

/// First ten terms of each family, generated offline from the initial
/// conditions and the recurrence (not copied from OEIS).
pub const PREFIX_TABLES: [(Family, [i64; 10]); 7] = [
    (Family::T, [0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105]),
    (Family::L, [2, 6, 34, 198, 1154, 6726, 39202, 228486, 1331714, 7761798]),
    (Family::B, [1, 5, 29, 169, 985, 5741, 33461, 195025, 1136689, 6625109]),
    (Family::C, [2, 14, 82, 478, 2786, 16238, 94642, 551614, 3215042, 18738638]),
    (Family::E, [4, 20, 116, 676, 3940, 22964, 133844, 780100, 4546756, 26500436]),
    (Family::Nsw, [1, 7, 41, 239, 1393, 8119, 47321, 275807, 1607521, 9369319]),
    (Family::R, [1, 1, 3, 7, 17, 41, 99, 239, 577, 1393]),
];

/// Coefficients of the closed form `A(n) = c1·αⁿ + c2·βⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCoeffs {
    pub c1: QuadRat,
    pub c2: QuadRat,
}

impl ClosedFormCoeffs {
    pub fn evaluate(&self, n: i64) -> QuadRat {
        // α and β are units, so neither power can fail
        let a = alpha().pow(n).expect("α is a unit");
        let b = beta().pow(n).expect("β is a unit");
        &(&self.c1 * &a) + &(&self.c2 * &b)
    }
}

/// Solves `c1 + c2 = r`, `c1·α + c2·β = s` for the seed `(r, s)` of the
/// six-recurrence.
pub fn closed_form_coeffs(r: &BigInt, s: &BigInt) -> ClosedFormCoeffs {
    let r = QuadRat::from(r.clone());
    let s = QuadRat::from(s.clone());
    let inv_gap = (alpha() - beta()).inv().expect("α ≠ β");
    let c1 = &(&s - &(&r * &beta())) * &inv_gap;
    let c2 = &(&(&r * &alpha()) - &s) * &inv_gap;
    ClosedFormCoeffs { c1, c2 }
}

/// Taylor coefficients of
/// `(r + (s-7r)x + (6r-s)x²) / ((1-x)(1-6x+x²))`.
///
/// The denominator expands to `1 - 7x + 7x² - x³`, so the coefficients obey
/// `g(k) = num(k) + 7g(k-1) - 7g(k-2) + g(k-3)`.
pub fn gf_prefix(r: &BigInt, s: &BigInt, count: usize) -> Vec<BigInt> {
    let numerator = [r.clone(), s - BigInt::from(7) * r, BigInt::from(6) * r - s];
    let denominator_tail = [BigInt::from(7), BigInt::from(-7), BigInt::from(1)];
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let mut g = numerator.get(k).cloned().unwrap_or_default();
        for (i, d) in denominator_tail.iter().enumerate() {
            if let Some(prev) = k.checked_sub(i + 1) {
                g += d * &out[prev];
            }
        }
        out.push(g);
    }
    out
}

/// The exact relations between the families checked by [`cross_relations_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `B(n) = T(n+1) - T(n)`
    BIsTDifference,
    /// `E(n) = (L(n+1) + L(n)) / 2`
    EIsHalfLSum,
    /// `E(n) = 4B(n)`
    EIsFourB,
    /// `C(n) = 2(T(n+1) + T(n))`
    CIsTwiceTSum,
    /// `C(n) = (L(n+1) - L(n)) / 2`
    CIsHalfLDifference,
    /// `NSW(n) = R(2n+1)`
    NswIsOddR,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::BIsTDifference,
        Relation::EIsHalfLSum,
        Relation::EIsFourB,
        Relation::CIsTwiceTSum,
        Relation::CIsHalfLDifference,
        Relation::NswIsOddR,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Relation::BIsTDifference => "B(n) = T(n+1) - T(n)",
            Relation::EIsHalfLSum => "E(n) = (L(n+1) + L(n))/2",
            Relation::EIsFourB => "E(n) = 4B(n)",
            Relation::CIsTwiceTSum => "C(n) = 2(T(n+1) + T(n))",
            Relation::CIsHalfLDifference => "C(n) = (L(n+1) - L(n))/2",
            Relation::NswIsOddR => "NSW(n) = R(2n+1)",
        }
    }

    /// Returns `(lhs, rhs)` at `n`; the halved sides are kept as rationals so
    /// an odd numerator cannot be hidden by integer division.
    fn sides(self, n: i64) -> (BigRational, BigRational) {
        let t = |k| family_term(Family::T, k);
        let l = |k| family_term(Family::L, k);
        let int = BigRational::from_integer;
        let half = |v: BigInt| BigRational::new(v, BigInt::from(2));
        match self {
            Relation::BIsTDifference => (int(family_term(Family::B, n)), int(t(n + 1) - t(n))),
            Relation::EIsHalfLSum => (int(family_term(Family::E, n)), half(l(n + 1) + l(n))),
            Relation::EIsFourB => {
                (int(family_term(Family::E, n)), int(4 * family_term(Family::B, n)))
            }
            Relation::CIsTwiceTSum => (int(family_term(Family::C, n)), int(2 * (t(n + 1) + t(n)))),
            Relation::CIsHalfLDifference => {
                (int(family_term(Family::C, n)), half(l(n + 1) - l(n)))
            }
            Relation::NswIsOddR => (
                int(family_term(Family::Nsw, n)),
                int(family_term(Family::R, 2 * n + 1)),
            ),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{relation} fails at n = {n}: {lhs} vs {rhs}")]
pub struct RelationFailure {
    pub relation: Relation,
    pub n: i64,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Checks every [`Relation`] at every `n` in the range. Returns the number of
/// `(relation, n)` pairs checked, or the first failure.
pub fn cross_relations_check(range: RangeInclusive<i64>) -> Result<usize, RelationFailure> {
    let mut checked = 0;
    for n in range {
        for relation in Relation::ALL {
            let (lhs, rhs) = relation.sides(n);
            if lhs != rhs {
                return Err(RelationFailure { relation, n, lhs, rhs });
            }
            checked += 1;
        }
    }
    Ok(checked)
}
