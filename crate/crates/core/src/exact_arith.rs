//! Exact arithmetic in `Q(√2)` and its ring of integers `Z[√2]`.
//!
//! Every value is stored as a pair of coordinates `a + b√2`. Since `√2` is
//! irrational the pair is unique, so equality is coordinate equality. Rational
//! coordinates are kept reduced by [`BigRational`] after each operation.
//!
//! The four units used throughout the crate live here:
//!
//! | name  | value    | relation             |
//! |-------|----------|----------------------|
//! | `α`   | `3 + 2√2`| root of `x² - 6x + 1`|
//! | `β`   | `3 - 2√2`| `αβ = 1`             |
//! | `γ`   | `1 + √2` | `γ² = α`             |
//! | `δ`   | `1 - √2` | `δ² = β`, `γδ = -1`  |

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("inverse of zero in Q(sqrt 2)")]
    ZeroInverse,
    #[error("zero raised to negative exponent {0}")]
    ZeroToNegativePower(i64),
}

/// An element `a + b√2` of `Q(√2)` with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadRat {
    a: BigRational,
    b: BigRational,
}

impl QuadRat {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadRat::new(ratio(a, 1), ratio(b, 1))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadRat::new(a, BigRational::zero())
    }

    pub fn from_bigint(a: BigInt) -> Self {
        QuadRat::from_rational(BigRational::from_integer(a))
    }

    /// `√2` itself.
    pub fn sqrt2() -> Self {
        QuadRat::from_ints(0, 1)
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `√2`.
    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Returns the value as an integer when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn conj(&self) -> Self {
        QuadRat::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 2b² = x · conj(x)`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - ratio(2, 1) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroInverse);
        }
        let n = self.norm();
        Ok(QuadRat::new(&self.a / &n, -&self.b / &n))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuadRat::new(&self.a * k, &self.b * k)
    }

    /// `self^e` by binary powering; negative exponents go through [`QuadRat::inv`].
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 {
            self.inv().map_err(|_| ArithError::ZeroToNegativePower(e))?
        } else {
            self.clone()
        };
        Ok(pow_unsigned(base, e.unsigned_abs()))
    }
}

fn pow_unsigned(mut base: QuadRat, mut e: u64) -> QuadRat {
    let mut acc = QuadRat::one();
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

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Zero for QuadRat {
    fn zero() -> Self {
        QuadRat::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadRat {
    fn one() -> Self {
        QuadRat::from_ints(1, 0)
    }
}

impl From<i64> for QuadRat {
    fn from(v: i64) -> Self {
        QuadRat::from_ints(v, 0)
    }
}

impl From<BigInt> for QuadRat {
    fn from(v: BigInt) -> Self {
        QuadRat::from_bigint(v)
    }
}

impl From<BigRational> for QuadRat {
    fn from(v: BigRational) -> Self {
        QuadRat::from_rational(v)
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Add for QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: QuadRat) -> QuadRat {
        &self + &rhs
    }
}

impl AddAssign<&QuadRat> for QuadRat {
    fn add_assign(&mut self, rhs: &QuadRat) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Sub for QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: QuadRat) -> QuadRat {
        &self - &rhs
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: &QuadRat) -> QuadRat {
        let two = ratio(2, 1);
        QuadRat::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Mul for QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: QuadRat) -> QuadRat {
        &self * &rhs
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        QuadRat::new(-self.a, -self.b)
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        QuadRat::new(-self.a.clone(), -self.b.clone())
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}√2", self.a, -&self.b),
            (false, false) => write!(f, "{} + {}√2", self.a, self.b),
        }
    }
}

/// An element `a + b√2` of `Z[√2]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn conj(&self) -> Self {
        QuadInt::new(self.a.clone(), -&self.b)
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    /// Units have norm ±1; their inverse stays in the ring.
    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    pub fn unit_inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_one() {
            Some(self.conj())
        } else if (-&n).is_one() {
            let c = self.conj();
            Some(QuadInt::new(-c.a, -c.b))
        } else {
            None
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadInt::new(1, 0);
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

    pub fn to_quad_rat(&self) -> QuadRat {
        QuadRat::new(
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
        )
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;

    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(
            &self.a * &rhs.a + BigInt::from(2) * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl From<QuadInt> for QuadRat {
    fn from(v: QuadInt) -> Self {
        v.to_quad_rat()
    }
}

/// `α = 3 + 2√2`.
pub fn alpha() -> QuadRat {
    QuadRat::from_ints(3, 2)
}

/// `β = 3 - 2√2`.
pub fn beta() -> QuadRat {
    QuadRat::from_ints(3, -2)
}

/// `γ = 1 + √2`, the branch with `γ² = α`.
pub fn gamma() -> QuadRat {
    QuadRat::from_ints(1, 1)
}

/// `δ = 1 - √2`, taken as `-β^{1/2}` so that `γδ = -1`.
pub fn delta() -> QuadRat {
    QuadRat::from_ints(1, -1)
}
