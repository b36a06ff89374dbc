//! Exact scalars: rationals and elements of a single quadratic field ℚ(√d).

mod quad;
mod scalar;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use quad::QuadScalar;
pub use scalar::{context_of, Scalar};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field context mismatch: {0} vs {1}")]
    ContextMismatch(FieldContext, FieldContext),
    #[error("extension parameter {0} is not a square-free integer >= 2")]
    BadExtension(u64),
    #[error("malformed scalar `{0}`")]
    Malformed(String),
    #[error("`r` used in scalar `{0}` but the field is Q")]
    RadicalInRationalField(String),
}

/// The ground field shared by every scalar of one algebra or map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldContext {
    #[default]
    Rational,
    /// ℚ(√d) for square-free d ≥ 2.
    Quadratic(u32),
}

impl FieldContext {
    pub fn quadratic(d: u64) -> Result<Self, ScalarError> {
        if is_squarefree_extension(d) {
            Ok(FieldContext::Quadratic(d as u32))
        } else {
            Err(ScalarError::BadExtension(d))
        }
    }

    pub fn from_extension(d: Option<u32>) -> Self {
        d.map_or(FieldContext::Rational, FieldContext::Quadratic)
    }

    pub fn extension(self) -> Option<u32> {
        match self {
            FieldContext::Rational => None,
            FieldContext::Quadratic(d) => Some(d),
        }
    }

    /// Smallest context containing both; ℚ embeds in every ℚ(√d).
    pub fn join(self, other: FieldContext) -> Result<FieldContext, ScalarError> {
        match (self, other) {
            (FieldContext::Rational, c) | (c, FieldContext::Rational) => Ok(c),
            (FieldContext::Quadratic(a), FieldContext::Quadratic(b)) if a == b => Ok(self),
            _ => Err(ScalarError::ContextMismatch(self, other)),
        }
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldContext::Rational => write!(f, "Q"),
            FieldContext::Quadratic(d) => write!(f, "Qsqrt {d}"),
        }
    }
}

pub(crate) fn is_squarefree_extension(d: u64) -> bool {
    if d < 2 || d > u32::MAX as u64 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `int ('/' posint)?` without a sign.
pub(crate) fn parse_unsigned_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return None;
    }
    let numer: BigInt = num.parse().ok()?;
    let denom: BigInt = match den {
        Some(d) if digits(d) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Parses an optionally signed rational, surrounding whitespace allowed.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, body) = match compact.as_bytes().first() {
        Some(b'-') => (true, &compact[1..]),
        Some(b'+') => (false, &compact[1..]),
        _ => (false, compact.as_str()),
    };
    let r = parse_unsigned_rational(body).ok_or_else(|| ScalarError::Malformed(text.into()))?;
    Ok(if neg { -r } else { r })
}

pub(crate) fn abs_rational(r: &Rational) -> Rational {
    r.abs()
}
