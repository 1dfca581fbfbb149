//! Identity proving over exponential polynomials.
//!
//! An identity between expressions in `T, L, B, C, E` at affine indices is
//! compiled side by side into [`ExpPoly`] canonical forms. It holds for every
//! integer `n` iff all pairwise differences are the zero map. When a
//! difference is nonzero a concrete witness `n` is found by scanning
//! `0, 1, -1, 2, -2, ...`; an exponential polynomial with `K` terms cannot
//! vanish on `K` consecutive integers, so the scan stops within `|n| ≤ K`.

mod corpus;
mod expoly;
mod parser;

use std::ops::RangeInclusive;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_arith::QuadRat;
use crate::sequences::{family_term, Family};

pub use corpus::{corpus, find_identity, CorpusEntry};
pub use expoly::{from_family, ExpPoly};
pub use parser::{parse_expr, parse_identity, Expr, Identity, ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("family {0} has no exponential-polynomial form over even slopes")]
    UnsupportedFamily(Family),
    #[error("division by zero")]
    DivisionByZero,
}

/// Compiles an expression to its canonical form.
pub fn compile(expr: &Expr) -> Result<ExpPoly, SymbolicError> {
    Ok(match expr {
        Expr::Rational(q) => ExpPoly::constant(QuadRat::from(q.clone())),
        Expr::Family { family, a, b } => from_family(*family, *a, *b)?,
        Expr::Neg(e) => -&compile(e)?,
        Expr::Add(x, y) => &compile(x)? + &compile(y)?,
        Expr::Sub(x, y) => &compile(x)? - &compile(y)?,
        Expr::Mul(x, y) => &compile(x)? * &compile(y)?,
        Expr::Pow(x, e) => compile(x)?.pow(*e),
        Expr::Div(x, q) => {
            if q.is_zero() {
                return Err(SymbolicError::DivisionByZero);
            }
            compile(x)?.scale_rational(&q.recip())
        }
    })
}

/// Direct evaluation at `n` from integer sequence terms, bypassing the
/// canonical form entirely.
pub fn eval_numeric(expr: &Expr, n: i64) -> Result<BigRational, SymbolicError> {
    Ok(match expr {
        Expr::Rational(q) => q.clone(),
        Expr::Family { family, a, b } => {
            if matches!(family, Family::Nsw | Family::R) {
                return Err(SymbolicError::UnsupportedFamily(*family));
            }
            BigRational::from_integer(family_term(*family, a * n + b))
        }
        Expr::Neg(e) => -eval_numeric(e, n)?,
        Expr::Add(x, y) => eval_numeric(x, n)? + eval_numeric(y, n)?,
        Expr::Sub(x, y) => eval_numeric(x, n)? - eval_numeric(y, n)?,
        Expr::Mul(x, y) => eval_numeric(x, n)? * eval_numeric(y, n)?,
        Expr::Pow(x, e) => {
            let base = eval_numeric(x, n)?;
            (0..*e).fold(BigRational::one(), |acc, _| acc * &base)
        }
        Expr::Div(x, q) => {
            if q.is_zero() {
                return Err(SymbolicError::DivisionByZero);
            }
            eval_numeric(x, n)? / q
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProofOutcome {
    Proven,
    /// Sides `lhs_side` and `rhs_side` of the chain differ at `n`.
    Counterexample {
        n: i64,
        lhs_side: usize,
        rhs_side: usize,
        lhs_value: QuadRat,
        rhs_value: QuadRat,
    },
}

impl ProofOutcome {
    pub fn is_proven(&self) -> bool {
        matches!(self, ProofOutcome::Proven)
    }

    pub fn witness(&self) -> Option<i64> {
        match self {
            ProofOutcome::Proven => None,
            ProofOutcome::Counterexample { n, .. } => Some(*n),
        }
    }
}

/// `0, 1, -1, 2, -2, ...` up to `|n| ≤ bound`.
fn search_order(bound: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k]))
}

/// Decides an identity for all integers `n`.
pub fn prove(identity: &Identity) -> Result<ProofOutcome, SymbolicError> {
    let forms = identity.sides.iter().map(compile).collect::<Result<Vec<_>, _>>()?;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let diff = &forms[i] - &forms[j];
            if diff.is_zero() {
                continue;
            }
            let n = search_order(diff.len() as i64)
                .find(|n| !diff.eval(*n).is_zero())
                .expect("a nonzero exponential polynomial with K terms is nonzero on K consecutive integers");
            return Ok(ProofOutcome::Counterexample {
                n,
                lhs_side: i,
                rhs_side: j,
                lhs_value: forms[i].eval(n),
                rhs_value: forms[j].eval(n),
            });
        }
    }
    Ok(ProofOutcome::Proven)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("sides {lhs_side} and {rhs_side} differ at n = {n}: {lhs_value} vs {rhs_value}")]
pub struct SweepMismatch {
    pub n: i64,
    pub lhs_side: usize,
    pub rhs_side: usize,
    pub lhs_value: BigRational,
    pub rhs_value: BigRational,
}

/// Numeric check of every side at every `n` in `range` using [`eval_numeric`].
pub fn numeric_sweep(identity: &Identity, range: RangeInclusive<i64>) -> Result<Result<(), SweepMismatch>, SymbolicError> {
    for n in range {
        let values = identity
            .sides
            .iter()
            .map(|side| eval_numeric(side, n))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(j) = (1..values.len()).find(|j| values[*j] != values[0]) {
            return Ok(Err(SweepMismatch {
                n,
                lhs_side: 0,
                rhs_side: j,
                lhs_value: values[0].clone(),
                rhs_value: values[j].clone(),
            }));
        }
    }
    Ok(Ok(()))
}
