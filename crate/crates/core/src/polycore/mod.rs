//! Exact sparse multivariate polynomials over the rationals.
//!
//! Everything else in the crate computes in [`MultiPoly`]: forms in the
//! `x` variables, gradient components, the divided-difference tower in the
//! `y` variables and resultants in the coefficient variables `C_Y`.
//!
//! Exponent vectors are dense and fixed-length; terms are kept in a
//! `BTreeMap` ordered by graded lexicographic order, so iteration order and
//! printed output are deterministic.

mod matrix;
mod monomial;
mod poly;
mod text;

pub use matrix::{det_polymatrix, det_rational};
pub use monomial::Monomial;
pub use poly::{ArithOp, MultiPoly};
pub use text::{format_poly, parse_poly, parse_rational, ParseError};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for building a small rational constant.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `x^e`. The numerator and denominator of a reduced fraction stay
/// coprime under powers, so no gcd is taken.
pub fn pow_rational(x: &Rational, e: u64) -> Rational {
    let e = u32::try_from(e).expect("exponent fits u32");
    Rational::new_raw(x.numer().pow(e), x.denom().pow(e))
}

/// `Π x_i^{e_i}`, accumulating numerator and denominator separately and
/// reducing once. Products here reach millions of bits, where a binary
/// gcd per multiplication would dominate; an integral result skips the
/// gcd entirely.
pub fn product_of_powers<'a, I>(items: I) -> Rational
where
    I: IntoIterator<Item = (&'a Rational, u64)>,
{
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (x, e) in items {
        if e == 0 {
            continue;
        }
        if x.is_zero() {
            return Rational::zero();
        }
        let p = pow_rational(x, e);
        num *= p.numer();
        den *= p.denom();
    }
    if den.is_one() {
        Rational::from_integer(num)
    } else {
        Rational::new(num, den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("point has {got} coordinates, polynomial has {expected} variables")]
    PointLengthMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
}

impl PolyError {
    /// Stable error name used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            PolyError::VariableCountMismatch { .. } => "VariableCountMismatch",
            PolyError::InexactDivision => "InexactDivision",
            PolyError::DivisionByZero => "DivisionByZero",
            PolyError::ZeroPolynomial => "ZeroPolynomial",
            PolyError::PointLengthMismatch { .. } => "PointLengthMismatch",
            PolyError::NonSquareMatrix { .. } => "NonSquareMatrix",
            PolyError::VariableOutOfRange { .. } => "VariableOutOfRange",
        }
    }
}
