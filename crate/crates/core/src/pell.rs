//! Seeds of `A(n) = 6A(n-1) - A(n-2)` that solve generalized Pell equations.
//!
//! For a seed `(r, s)` the squared terms obey
//!
//! ```text
//! 32·A(n)² + 2Q = (r² - s²)·L(2n-2) + (6s² - 2rs)·L(2n-1),   Q = r² + s² - 6rs
//! ```
//!
//! Writing the right side through the cascade `a(0) = 2rs - 6s²`,
//! `a(1) = r² - s²`, `a(k) = 6a(k-1) - a(k-2)` gives, for every shift `m`,
//! `32·A(n)² + 2Q = a(m+3)·L(2n+m) - a(m+2)·L(2n+m+1)`. If the cascade is
//! `-h` times the `T` family at the right offset, the right side collapses to
//! `h·L(2n+m+2)`: a [`Certificate`]. Seeds with a certificate are exactly the
//! rational multiples of `T`, `B`, `C` or `L`, which [`classify`] detects
//! directly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::sequences::{family_term, term_fast, Family, RecurrenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PellError {
    #[error("seed (0, 0) generates the zero sequence")]
    ZeroSeed,
    #[error("D must be a nonsquare integer >= 2, got {0}")]
    InvalidD(i64),
    #[error(
        "no family parameterization for x^2 - {d}y^2 = {n}; supported: \
         (D,N) = (8,1), (2,-1), (2,8), (32,4)"
    )]
    UnsupportedForm { d: i64, n: i64 },
    #[error("({t0}, {t1}) are not consecutive T terms")]
    NotConsecutiveT { t0: BigInt, t1: BigInt },
    #[error("certificate (m={m}, h={h}) matched the cascade but fails at n = {n}")]
    CertificateMismatch { m: i64, h: BigInt, n: i64 },
    #[error("y_max = {0} overflows the brute-force search")]
    Overflow(u64),
}

/// Initial terms `A(0) = r`, `A(1) = s`, not both zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeedPair {
    r: BigInt,
    s: BigInt,
}

impl SeedPair {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self, PellError> {
        let (r, s) = (r.into(), s.into());
        if r.is_zero() && s.is_zero() {
            return Err(PellError::ZeroSeed);
        }
        Ok(SeedPair { r, s })
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    pub fn spec(&self) -> RecurrenceSpec {
        RecurrenceSpec::six(self.r.clone(), self.s.clone())
    }

    pub fn term(&self, n: i64) -> BigInt {
        term_fast(&self.spec(), n)
    }
}

impl fmt::Display for SeedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// `Q = r² + s² - 6rs`, constant along the sequence.
pub fn invariant_q(seed: &SeedPair) -> BigInt {
    let (r, s) = (&seed.r, &seed.s);
    r * r + s * s - 6 * r * s
}

/// Both sides of an exact equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl EqualityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn lhs_square(seed: &SeedPair, n: i64) -> BigInt {
    let a = seed.term(n);
    32 * &a * &a + 2 * invariant_q(seed)
}

/// `32A(n)² + 2(r²+s²-6rs)` against `(r²-s²)L(2n-2) + (6s²-2rs)L(2n-1)`.
pub fn fundamental_check(seed: &SeedPair, n: i64) -> EqualityReport {
    let (r, s) = (&seed.r, &seed.s);
    let rhs = (r * r - s * s) * family_term(Family::L, 2 * n - 2)
        + (6 * s * s - 2 * r * s) * family_term(Family::L, 2 * n - 1);
    EqualityReport { lhs: lhs_square(seed, n), rhs }
}

/// The auxiliary sequence `a(0) = 2rs - 6s²`, `a(1) = r² - s²` under the
/// same recurrence, defined at every integer index.
#[derive(Clone, Debug)]
pub struct Cascade {
    spec: RecurrenceSpec,
}

impl Cascade {
    pub fn new(seed: &SeedPair) -> Self {
        let (r, s) = (&seed.r, &seed.s);
        let a0 = 2 * r * s - 6 * s * s;
        let a1 = r * r - s * s;
        Cascade { spec: RecurrenceSpec::six(a0, a1) }
    }

    pub fn at(&self, k: i64) -> BigInt {
        term_fast(&self.spec, k)
    }
}

/// `32A(n)² + 2Q` against `a(m+3)·L(2n+m) - a(m+2)·L(2n+m+1)`.
pub fn telescope_check(seed: &SeedPair, m: i64, n: i64) -> EqualityReport {
    let cascade = Cascade::new(seed);
    let rhs = cascade.at(m + 3) * family_term(Family::L, 2 * n + m)
        - cascade.at(m + 2) * family_term(Family::L, 2 * n + m + 1);
    EqualityReport { lhs: lhs_square(seed, n), rhs }
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `A(n) = scale · family(n + shift)` for every `n`.
    Member { family: Family, shift: i64, scale: BigRational },
    NotInFourFamilies,
}

impl Classification {
    pub fn is_member(&self) -> bool {
        matches!(self, Classification::Member { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Member { family, shift, scale } => {
                write!(f, "A(n) = {scale} * {family}(n{shift:+})")
            }
            Classification::NotInFourFamilies => f.write_str("not a multiple of T, B, C or L"),
        }
    }
}

/// The four target families with their recurrence invariant, in the order
/// they are tried.
pub const FOUR_FAMILIES: [(Family, i64); 4] =
    [(Family::T, 1), (Family::B, -4), (Family::C, 32), (Family::L, -32)];

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// `0, -1, 1, -2, 2, ...`, each direction stopping once `|F(j)|` exceeds the bound.
fn shift_candidates(family: Family, bound: &BigRational) -> Vec<i64> {
    let within = |j: i64| BigRational::from_integer(family_term(family, j).abs()) <= *bound;
    let mut out = Vec::new();
    let (mut up, mut down) = (Some(0i64), Some(-1i64));
    while up.is_some() || down.is_some() {
        for cursor in [&mut up, &mut down] {
            if let Some(j) = *cursor {
                if within(j) {
                    out.push(j);
                    *cursor = Some(if j >= 0 { j + 1 } else { j - 1 });
                } else {
                    *cursor = None;
                }
            }
        }
    }
    out
}

/// Finds `(family, shift, scale)` with `(r, s) = scale·(F(shift), F(shift+1))`.
///
/// The invariant scales as `Q = scale²·Q_F`, so only families for which
/// `Q / Q_F` is a rational square are searched, and only over the finite
/// window of shifts where `|F(shift)| ≤ max(|r|, |s|)/|scale| + 1`. The
/// consecutive-ratio sets of the four families are disjoint, so a member
/// seed has exactly one representation.
pub fn classify(seed: &SeedPair) -> Classification {
    let (r, s) = (&seed.r, &seed.s);
    if r.is_zero() {
        return Classification::Member {
            family: Family::T,
            shift: 0,
            scale: BigRational::from_integer(s.clone()),
        };
    }
    if s.is_zero() {
        return Classification::Member {
            family: Family::T,
            shift: -1,
            scale: BigRational::from_integer(-r),
        };
    }
    let q = invariant_q(seed);
    let largest = BigRational::from_integer(r.abs().max(s.abs()));
    for (family, qf) in FOUR_FAMILIES {
        let ratio = BigRational::new(q.clone(), BigInt::from(qf));
        let Some(abs_scale) = rational_sqrt(&ratio) else { continue };
        let bound = &largest / &abs_scale + BigRational::one();
        for j in shift_candidates(family, &bound) {
            let (fj, fj1) = (family_term(family, j), family_term(family, j + 1));
            if r * &fj1 == s * &fj {
                // r ≠ 0 forces F(j) ≠ 0 here
                let scale = BigRational::new(r.clone(), fj);
                return Classification::Member { family, shift: j, scale };
            }
        }
    }
    Classification::NotInFourFamilies
}

/// Witness that `32A(n)² + c = h·L(2n+m+2)` for every `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub m: i64,
    pub h: BigInt,
    pub c: BigInt,
}

impl Certificate {
    pub fn check(&self, seed: &SeedPair, n: i64) -> EqualityReport {
        let a = seed.term(n);
        EqualityReport {
            lhs: 32 * &a * &a + &self.c,
            rhs: &self.h * family_term(Family::L, 2 * n + self.m + 2),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "32*A(n)^2 + {} = {} * L(2n{:+})", self.c, self.h, self.m + 2)
    }
}

/// The integer `h` with `a(0) = -t1·h` and `a(1) = -t0·h`, if any.
fn cascade_multiplier(a0: &BigInt, a1: &BigInt, t0: &BigInt, t1: &BigInt) -> Option<BigInt> {
    let h = if t1.is_zero() {
        // consecutive T terms are coprime, so t0 = ±1 here
        if !a0.is_zero() {
            return None;
        }
        -(a1 * t0)
    } else {
        let (h, rem) = (-a0).div_rem(t1);
        if !rem.is_zero() || *a1 != -(t0 * &h) {
            return None;
        }
        h
    };
    (!h.is_zero()).then_some(h)
}

/// Searches `m ∈ [-m_window, m_window]` for an integer `h` with
/// `a(0) = -T(m+4)·h` and `a(1) = -T(m+3)·h`, then verifies the resulting
/// identity for `n ∈ [1, n_check]`.
pub fn certificate(
    seed: &SeedPair,
    m_window: i64,
    n_check: i64,
) -> Result<Option<Certificate>, PellError> {
    let cascade = Cascade::new(seed);
    let (a0, a1) = (cascade.at(0), cascade.at(1));
    for m in -m_window..=m_window {
        let t1 = family_term(Family::T, m + 4);
        let t0 = family_term(Family::T, m + 3);
        let Some(h) = cascade_multiplier(&a0, &a1, &t0, &t1) else { continue };
        let cert = Certificate { m, h, c: 2 * invariant_q(seed) };
        if let Some(n) = (1..=n_check).find(|n| !cert.check(seed, *n).holds()) {
            return Err(PellError::CertificateMismatch { m, h: cert.h, n });
        }
        return Ok(Some(cert));
    }
    Ok(None)
}

/// Which closed form of `r` is used: `r = s(t0 - 1)/t1` comes from the `+`
/// branch of the `h` formula, `r = s(t0 + 1)/t1` from the `-` branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RBranch {
    /// `r = s(t0 - 1)/t1`
    Minus,
    /// `r = s(t0 + 1)/t1`
    Plus,
}

impl RBranch {
    pub fn offset(self) -> i64 {
        match self {
            RBranch::Minus => -1,
            RBranch::Plus => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBranchCase {
    pub branch: RBranch,
    /// `None` when `s(t0 ± 1)/t1` is not an integer.
    pub r: Option<BigInt>,
    /// `2(-s²t0 + 3s²t1 ∓ s²)/t1²`
    pub h_formula: BigRational,
    pub certificate: Option<Certificate>,
}

impl HBranchCase {
    /// A formula-built seed must certify at the expected shift with the
    /// formula's `h` exactly when that `h` is an integer.
    pub fn consistent(&self, expected_m: i64) -> bool {
        match (&self.r, &self.certificate) {
            (None, _) => true,
            (Some(_), Some(cert)) => {
                cert.m == expected_m && BigRational::from_integer(cert.h.clone()) == self.h_formula
            }
            (Some(_), None) => !self.h_formula.is_integer(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFormulaReport {
    /// The shift with `(t0, t1) = (T(m+3), T(m+4))`.
    pub m: i64,
    pub cases: Vec<HBranchCase>,
}

impl HFormulaReport {
    pub fn consistent(&self) -> bool {
        self.cases.iter().all(|c| c.consistent(self.m))
    }
}

fn consecutive_t_index(t0: &BigInt, t1: &BigInt) -> Option<i64> {
    let bound = t0.abs().max(t1.abs());
    let mut hits = (0..).map_while(|k: i64| {
        let found = [k, -k - 1].into_iter().find(|j| {
            family_term(Family::T, *j) == *t0 && family_term(Family::T, j + 1) == *t1
        });
        (family_term(Family::T, k).abs() <= bound).then_some(found)
    });
    hits.find_map(|x| x)
}

/// Audits the closed forms for `h` and `r` at `(t0, t1) = (T(m+3), T(m+4))`:
/// each branch that yields an integer `r` is run through [`certificate`].
pub fn h_formula_check(t0: &BigInt, t1: &BigInt, s: &BigInt) -> Result<HFormulaReport, PellError> {
    if s.is_zero() {
        return Err(PellError::ZeroSeed);
    }
    let not_consecutive = || PellError::NotConsecutiveT { t0: t0.clone(), t1: t1.clone() };
    if t1.is_zero() {
        return Err(not_consecutive());
    }
    let k = consecutive_t_index(t0, t1).ok_or_else(not_consecutive)?;
    let m = k - 3;
    let s2 = s * s;
    let mut cases = Vec::new();
    for branch in [RBranch::Minus, RBranch::Plus] {
        let h_num = 2 * (-(&s2 * t0) + 3 * &s2 * t1 - branch.offset() * &s2);
        let h_formula = BigRational::new(h_num, t1 * t1);
        let (r, rem) = (s * (t0 + branch.offset())).div_rem(t1);
        let r = rem.is_zero().then_some(r);
        let certificate = match &r {
            Some(r) => {
                let seed = SeedPair::new(r.clone(), s.clone())?;
                certificate(&seed, m.abs() + 2, 10)?
            }
            None => None,
        };
        cases.push(HBranchCase { branch, r, h_formula, certificate });
    }
    Ok(HFormulaReport { m, cases })
}

/// `x² - D·y² = N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PellEquation {
    d: i64,
    n: i64,
}

impl PellEquation {
    pub fn new(d: i64, n: i64) -> Result<Self, PellError> {
        if d < 2 || d.sqrt() * d.sqrt() == d {
            return Err(PellError::InvalidD(d));
        }
        Ok(PellEquation { d, n })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn is_solution(&self, sol: &PellSolution) -> bool {
        &sol.x * &sol.x - self.d * &sol.y * &sol.y == BigInt::from(self.n)
    }
}

impl fmt::Display for PellEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2 - {}y^2 = {}", self.d, self.n)
    }
}

/// A solution with `x, y ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PellSolution {
    pub x: BigInt,
    pub y: BigInt,
}

impl PellSolution {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        PellSolution { x: x.into(), y: y.into() }
    }
}

/// Every solution with `0 ≤ y ≤ y_max`, by exact square-root testing of
/// `N + D·y²`. Sorted by `y`.
pub fn pell_brute(eq: &PellEquation, y_max: u64) -> Result<Vec<PellSolution>, PellError> {
    let (d, n) = (i128::from(eq.d), i128::from(eq.n));
    let top = i128::from(y_max)
        .checked_mul(i128::from(y_max))
        .and_then(|v| v.checked_mul(d))
        .and_then(|v| v.checked_add(n.abs()))
        .ok_or(PellError::Overflow(y_max))?;
    debug_assert!(top >= 0);
    let mut out = Vec::new();
    for y in 0..=y_max {
        let y = i128::from(y);
        let v = n + d * y * y;
        if v < 0 {
            continue;
        }
        let x = v.sqrt();
        if x * x == v {
            out.push(PellSolution::new(x, y));
        }
    }
    Ok(out)
}

/// The equations parameterized by the families, with `(x(n), y(n))` for `n ≥ 0`.
fn family_parameterization(eq: &PellEquation) -> Option<fn(i64) -> (BigInt, BigInt)> {
    let param: fn(i64) -> (BigInt, BigInt) = match (eq.d, eq.n) {
        (8, 1) => |k| (family_term(Family::L, k) / 2, family_term(Family::T, k)),
        (2, -1) => |k| (family_term(Family::Nsw, k), family_term(Family::B, k)),
        (2, 8) => |k| (family_term(Family::E, k), family_term(Family::C, k)),
        (32, 4) => |k| (family_term(Family::L, k), family_term(Family::T, k)),
        _ => return None,
    };
    Some(param)
}

/// Solutions predicted by the family identities, for `n ≥ 0` while `y ≤ y_max`.
pub fn family_solutions(eq: &PellEquation, y_max: u64) -> Result<Vec<PellSolution>, PellError> {
    let param =
        family_parameterization(eq).ok_or(PellError::UnsupportedForm { d: eq.d, n: eq.n })?;
    let limit = BigInt::from(y_max);
    let out = (0..)
        .map(param)
        .take_while(|(_, y)| *y <= limit)
        .map(|(x, y)| PellSolution { x, y })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;

    fn seed(r: i64, s: i64) -> SeedPair {
        SeedPair::new(r, s).unwrap()
    }

    fn member(family: Family, shift: i64, num: i64, den: i64) -> Classification {
        Classification::Member { family, shift, scale: ratio(num, den) }
    }

    #[test]
    fn zero_seed_rejected() {
        assert_eq!(SeedPair::new(0, 0), Err(PellError::ZeroSeed));
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(invariant_q(&seed(0, 1)), BigInt::from(1));
        assert_eq!(invariant_q(&seed(1, 1)), BigInt::from(-4));
        assert_eq!(invariant_q(&seed(1, 2)), BigInt::from(-7));
    }

    #[test]
    fn fundamental_examples() {
        let r = fundamental_check(&seed(0, 1), 1);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (34.into(), 34.into()));
        let r = fundamental_check(&seed(1, 1), 1);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (24.into(), 24.into()));
        let r = fundamental_check(&seed(1, 0), 1);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (2.into(), 2.into()));
    }

    #[test]
    fn cascade_prefix() {
        let c = Cascade::new(&seed(0, 1));
        let got: Vec<_> = (0..4).map(|k| c.at(k)).collect();
        assert_eq!(got, [-6, -1, 0, 1].map(BigInt::from));
        assert_eq!(c.at(-1), BigInt::from(-35));
    }

    #[test]
    fn telescope_examples() {
        assert_eq!(telescope_check(&seed(0, 1), -2, 1), fundamental_check(&seed(0, 1), 1));
        let r = telescope_check(&seed(0, 1), 0, 1);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (34.into(), 34.into()));
        assert!(telescope_check(&seed(1, 1), -1, 2).holds());
    }

    #[test]
    fn elementary_classifications() {
        assert_eq!(classify(&seed(1, 1)), member(Family::B, -1, 1, 1));
        assert_eq!(classify(&seed(1, -1)), member(Family::C, -1, -1, 2));
        assert_eq!(classify(&seed(3, 1)), member(Family::L, -1, 1, 2));
        assert_eq!(classify(&seed(1, 0)), member(Family::T, -1, -1, 1));
        assert_eq!(classify(&seed(0, 1)), member(Family::T, 0, 1, 1));
        assert_eq!(classify(&seed(1, 2)), Classification::NotInFourFamilies);
    }

    #[test]
    fn classification_holds_on_window() {
        for (r, s) in [(1, 1), (1, -1), (3, 1), (1, 0), (7, 41), (-12, -70), (5, 29)] {
            let sd = seed(r, s);
            let Classification::Member { family, shift, scale } = classify(&sd) else {
                panic!("({r},{s}) should be a member");
            };
            for n in -10..=10 {
                let predicted = &scale * BigRational::from_integer(family_term(family, n + shift));
                assert_eq!(BigRational::from_integer(sd.term(n)), predicted);
            }
        }
    }

    #[test]
    fn certificate_examples() {
        let one_zero = certificate(&seed(1, 0), 10, 10).unwrap().unwrap();
        assert_eq!(one_zero, Certificate { m: -4, h: 1.into(), c: 2.into() });
        let ones = certificate(&seed(1, 1), 10, 10).unwrap().unwrap();
        assert_eq!(ones, Certificate { m: -3, h: 4.into(), c: (-8).into() });
        let nsw = certificate(&seed(1, 7), 10, 10).unwrap().unwrap();
        assert_eq!((nsw.m, nsw.h.clone()), (-1, 8.into()));
        assert_eq!(certificate(&seed(1, 2), 10, 10).unwrap(), None);
    }

    #[test]
    fn certificate_needs_wide_enough_window() {
        // (1, 0) needs m = -4
        assert_eq!(certificate(&seed(1, 0), 3, 10).unwrap(), None);
    }

    #[test]
    fn h_formula_examples() {
        let report = h_formula_check(&35.into(), &204.into(), &6.into()).unwrap();
        assert_eq!(report.m, 0);
        let minus = &report.cases[0];
        assert_eq!(minus.branch, RBranch::Minus);
        assert_eq!(minus.r, Some(BigInt::from(1)));
        assert_eq!(minus.h_formula, ratio(1, 1));
        assert_eq!(minus.certificate, Some(Certificate { m: 0, h: 1.into(), c: 2.into() }));
        assert!(report.consistent());

        let report = h_formula_check(&1.into(), &6.into(), &3.into()).unwrap();
        assert_eq!(report.m, -2);
        let plus = &report.cases[1];
        assert_eq!(plus.r, Some(BigInt::from(1)));
        assert_eq!(plus.h_formula, ratio(8, 1));
        assert_eq!(plus.certificate.as_ref().map(|c| c.m), Some(-2));
        assert!(report.consistent());

        let report = h_formula_check(&0.into(), &1.into(), &5.into()).unwrap();
        assert_eq!(report.m, -3);
        let rs: Vec<_> = report.cases.iter().map(|c| c.r.clone()).collect();
        assert_eq!(rs, [Some(BigInt::from(-5)), Some(BigInt::from(5))]);
        assert!(report.consistent());
    }

    #[test]
    fn h_formula_rejects_bad_inputs() {
        assert!(matches!(
            h_formula_check(&2.into(), &7.into(), &1.into()),
            Err(PellError::NotConsecutiveT { .. })
        ));
        assert_eq!(h_formula_check(&1.into(), &6.into(), &0.into()), Err(PellError::ZeroSeed));
        let neg = h_formula_check(&(-6).into(), &(-1).into(), &1.into()).unwrap();
        assert_eq!(neg.m, -5);
    }

    #[test]
    fn brute_examples() {
        let eq = PellEquation::new(8, 1).unwrap();
        let expected = [(1, 0), (3, 1), (17, 6), (99, 35)].map(|(x, y)| PellSolution::new(x, y));
        assert_eq!(pell_brute(&eq, 40).unwrap(), expected);
        assert_eq!(family_solutions(&eq, 40).unwrap(), expected);

        let eq = PellEquation::new(2, -1).unwrap();
        let expected = [(1, 1), (7, 5), (41, 29)].map(|(x, y)| PellSolution::new(x, y));
        assert_eq!(pell_brute(&eq, 30).unwrap(), expected);
        assert_eq!(family_solutions(&eq, 30).unwrap(), expected);

        let eq = PellEquation::new(2, 0).unwrap();
        assert_eq!(pell_brute(&eq, 10).unwrap(), [PellSolution::new(0, 0)]);

        let eq = PellEquation::new(2, 8).unwrap();
        let expected = [(4, 2), (20, 14), (116, 82)].map(|(x, y)| PellSolution::new(x, y));
        assert_eq!(family_solutions(&eq, 100).unwrap(), expected);
        assert_eq!(pell_brute(&eq, 100).unwrap(), expected);
    }

    #[test]
    fn pell_equation_validation() {
        assert_eq!(PellEquation::new(4, 1), Err(PellError::InvalidD(4)));
        assert_eq!(PellEquation::new(1, 1), Err(PellError::InvalidD(1)));
        assert_eq!(PellEquation::new(-3, 1), Err(PellError::InvalidD(-3)));
        let eq = PellEquation::new(3, 1).unwrap();
        assert_eq!(family_solutions(&eq, 10), Err(PellError::UnsupportedForm { d: 3, n: 1 }));
        assert_eq!(pell_brute(&eq, u64::MAX), Err(PellError::Overflow(u64::MAX)));
    }

    #[test]
    fn solutions_satisfy_their_equation() {
        for (d, n) in [(8, 1), (2, -1), (2, 8), (32, 4)] {
            let eq = PellEquation::new(d, n).unwrap();
            for sol in family_solutions(&eq, 1_000_000).unwrap() {
                assert!(eq.is_solution(&sol), "{eq}: {sol:?}");
            }
        }
    }
}
