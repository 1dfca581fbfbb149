use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact_arith::{gamma, QuadRat};
use crate::sequences::{closed_form_coeffs, Family};

use super::SymbolicError;

/// A function `n ↦ Σ c_k · γ^{k·n}` with finitely many nonzero `c_k ∈ Q(√2)`.
///
/// Distinct slopes give distinct real bases `γ^k`, which are linearly
/// independent as functions on the integers, so the slope map is a canonical
/// form: two values are equal as functions iff their maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<i64, QuadRat>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly::default()
    }

    pub fn constant(c: QuadRat) -> Self {
        ExpPoly::monomial(0, c)
    }

    pub fn one() -> Self {
        ExpPoly::constant(QuadRat::one())
    }

    pub fn monomial(slope: i64, coeff: QuadRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(slope, coeff);
        }
        ExpPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, slope: i64) -> Option<&QuadRat> {
        self.terms.get(&slope)
    }

    /// `(slope, coefficient)` pairs in increasing slope order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &QuadRat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    fn accumulate(&mut self, slope: i64, coeff: &QuadRat) {
        let entry = self.terms.entry(slope).or_insert_with(QuadRat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&slope);
        }
    }

    pub fn scale(&self, k: &QuadRat) -> ExpPoly {
        if k.is_zero() {
            return ExpPoly::zero();
        }
        ExpPoly { terms: self.terms.iter().map(|(s, c)| (*s, c * k)).collect() }
    }

    pub fn scale_rational(&self, k: &BigRational) -> ExpPoly {
        self.scale(&QuadRat::from(k.clone()))
    }

    pub fn pow(&self, e: u32) -> ExpPoly {
        let mut acc = ExpPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at `n`.
    pub fn eval(&self, n: i64) -> QuadRat {
        let mut acc = QuadRat::zero();
        for (slope, c) in &self.terms {
            let power = gamma().pow(slope * n).expect("γ is a unit");
            acc += &(c * &power);
        }
        acc
    }
}

/// `n ↦ f(a·n + b)` for `f ∈ {T, L, B, C, E}`.
///
/// With `f(m) = c1·αᵐ + c2·βᵐ`, `α = γ²` and `β = γ⁻²`, the index offset `b`
/// folds into the coefficients: `c1·γ^{2b}` at slope `2a` and `c2·γ^{-2b}` at
/// slope `-2a`.
pub fn from_family(f: Family, a: i64, b: i64) -> Result<ExpPoly, SymbolicError> {
    if matches!(f, Family::Nsw | Family::R) {
        return Err(SymbolicError::UnsupportedFamily(f));
    }
    let spec = f.spec().expect("six-recurrence family");
    let coeffs = closed_form_coeffs(spec.seed0(), spec.seed1());
    let shift_up = gamma().pow(2 * b).expect("γ is a unit");
    let shift_down = gamma().pow(-2 * b).expect("γ is a unit");
    let mut out = ExpPoly::monomial(2 * a, &coeffs.c1 * &shift_up);
    out.accumulate(-2 * a, &(&coeffs.c2 * &shift_down));
    Ok(out)
}

impl<'a> Add<&'a ExpPoly> for &'a ExpPoly {
    type Output = ExpPoly;

    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.accumulate(*s, c);
        }
        out
    }
}

impl<'a> Sub<&'a ExpPoly> for &'a ExpPoly {
    type Output = ExpPoly;

    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.accumulate(*s, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a ExpPoly> for &'a ExpPoly {
    type Output = ExpPoly;

    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &rhs.terms {
                out.accumulate(s1 + s2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;

    fn neg(self) -> ExpPoly {
        ExpPoly { terms: self.terms.iter().map(|(s, c)| (*s, -c)).collect() }
    }
}

impl From<BigInt> for ExpPoly {
    fn from(v: BigInt) -> Self {
        ExpPoly::constant(QuadRat::from(v))
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (slope, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·γ^({slope}n)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;
    use crate::sequences::family_term;
    use proptest::prelude::*;

    #[test]
    fn l_and_t_shapes() {
        let l = from_family(Family::L, 1, 0).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.coefficient(2), Some(&QuadRat::one()));
        assert_eq!(l.coefficient(-2), Some(&QuadRat::one()));

        let t = from_family(Family::T, 1, 0).unwrap();
        let c = QuadRat::new(ratio(0, 1), ratio(1, 8));
        assert_eq!(t.coefficient(2), Some(&c));
        assert_eq!(t.coefficient(-2), Some(&-&c));
    }

    #[test]
    fn shifted_b_at_zero() {
        let b = from_family(Family::B, 1, -1).unwrap();
        assert_eq!(b.eval(0), QuadRat::one());
        assert_eq!(b.slopes_for_test(), vec![-2, 2]);
    }

    #[test]
    fn constant_index_collapses_to_slope_zero() {
        let t3 = from_family(Family::T, 0, 3).unwrap();
        assert_eq!(t3, ExpPoly::constant(QuadRat::from(35)));
        assert!(from_family(Family::T, 0, 0).unwrap().is_zero());
    }

    #[test]
    fn unsupported_families() {
        assert_eq!(from_family(Family::R, 1, 0), Err(SymbolicError::UnsupportedFamily(Family::R)));
        assert!(from_family(Family::Nsw, 1, 0).is_err());
    }

    #[test]
    fn arithmetic_identities() {
        let x = from_family(Family::C, 2, 1).unwrap();
        assert_eq!(&x + &ExpPoly::zero(), x);
        assert_eq!(&ExpPoly::one() * &x, x);
        assert!((&x - &x).is_zero());
        let t = from_family(Family::T, 1, 0).unwrap();
        assert_eq!((&t * &t).eval(2), QuadRat::from(36));
        assert_eq!(t.pow(2), &t * &t);
        assert_eq!(t.pow(0), ExpPoly::one());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(from_family(Family::C, 1, 0).unwrap().eval(1), QuadRat::from(14));
        assert_eq!(from_family(Family::E, 1, 0).unwrap().eval(1), QuadRat::from(20));
        let x = from_family(Family::L, 3, -2).unwrap();
        let total = x.terms().fold(QuadRat::zero(), |acc, (_, c)| &acc + c);
        assert_eq!(x.eval(0), total);
    }

    #[test]
    fn representation_is_complete() {
        for f in [Family::T, Family::L, Family::B, Family::C, Family::E] {
            for a in [-2, -1, 1, 2, 3] {
                for b in -3..=3 {
                    let x = from_family(f, a, b).unwrap();
                    for n in -10..=10 {
                        assert_eq!(x.eval(n), QuadRat::from(family_term(f, a * n + b)), "{f}({a}n+{b}) at {n}");
                    }
                }
            }
        }
    }

    impl ExpPoly {
        fn slopes_for_test(&self) -> Vec<i64> {
            self.terms().map(|(s, _)| s).collect()
        }
    }

    fn family_poly() -> impl Strategy<Value = ExpPoly> {
        let fam = prop_oneof![
            Just(Family::T),
            Just(Family::L),
            Just(Family::B),
            Just(Family::C),
            Just(Family::E)
        ];
        (fam, -3i64..=3, -4i64..=4, -5i64..=5)
            .prop_map(|(f, a, b, k)| from_family(f, a, b).unwrap().scale(&QuadRat::from(k)))
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(x in family_poly(), y in family_poly(), n in -8i64..8) {
            prop_assert_eq!((&x * &y).eval(n), &x.eval(n) * &y.eval(n));
            prop_assert_eq!((&x + &y).eval(n), &x.eval(n) + &y.eval(n));
        }

        #[test]
        fn equal_maps_agree_everywhere(x in family_poly(), y in family_poly()) {
            let diff = &x - &y;
            if diff.is_zero() {
                for n in -10..=10 {
                    prop_assert_eq!(x.eval(n), y.eval(n));
                }
            } else {
                let witness = (-(diff.len() as i64)..=diff.len() as i64).find(|n| !diff.eval(*n).is_zero());
                prop_assert!(witness.is_some());
            }
        }
    }
}
