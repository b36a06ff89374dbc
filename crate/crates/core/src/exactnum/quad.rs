use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{
    abs_rational, format_rational, parse_unsigned_rational, FieldContext, Rational, Scalar,
    ScalarError,
};

/// `a + b·√d` with rational `a`, `b`.
///
/// The extension `d` is only recorded while `b ≠ 0`, so every rational value
/// has exactly one representation and derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    d: Option<u32>,
}

impl QuadScalar {
    pub fn rational(a: Rational) -> Self {
        QuadScalar {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    pub fn integer(v: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::rational(Rational::new(numer.into(), denom.into()))
    }

    /// `a + b·√d` in the context `ctx`; `b` must be zero when `ctx` is ℚ.
    pub fn new(a: Rational, b: Rational, ctx: FieldContext) -> Result<Self, ScalarError> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        match ctx {
            FieldContext::Rational => Err(ScalarError::RadicalInRationalField(format!(
                "{} + {}*r",
                format_rational(&a),
                format_rational(&b)
            ))),
            FieldContext::Quadratic(d) => Ok(QuadScalar { a, b, d: Some(d) }),
        }
    }

    /// √d itself.
    pub fn sqrt(d: u64) -> Result<Self, ScalarError> {
        let ctx = FieldContext::quadratic(d)?;
        Self::new(Rational::zero(), Rational::one(), ctx)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn context(&self) -> FieldContext {
        FieldContext::from_extension(self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        match self.d {
            None => a,
            Some(d) => a + self.b.to_f64().unwrap_or(f64::NAN) * f64::from(d).sqrt(),
        }
    }

    fn join(&self, other: &Self) -> Result<Option<u32>, ScalarError> {
        Ok(self.context().join(other.context())?.extension())
    }

    fn build(a: Rational, b: Rational, d: Option<u32>) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            QuadScalar { a, b, d }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        Ok(Self::build(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        Ok(Self::build(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        let (a, b) = match d {
            None => (&self.a * &other.a, Rational::zero()),
            Some(d) => {
                let dd = Rational::from_integer(BigInt::from(d));
                (
                    &self.a * &other.a + &self.b * &other.b * dd,
                    &self.a * &other.b + &other.a * &self.b,
                )
            }
        };
        Ok(Self::build(a, b, d))
    }

    /// `(a − b√d) / (a² − b²d)`.
    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        match self.d {
            None if self.a.is_zero() => Err(ScalarError::DivisionByZero),
            None => Ok(Self::rational(self.a.recip())),
            Some(d) => {
                let norm =
                    &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(d));
                // d is not a square, so the norm of a nonzero value never vanishes
                debug_assert!(!norm.is_zero());
                Ok(Self::build(&self.a / &norm, -(&self.b / &norm), self.d))
            }
        }
    }

    /// Parses `sign? rat ( sign rat '*' 'r' )?`, where `r` stands for √d of `ctx`.
    pub fn parse(text: &str, ctx: FieldContext) -> Result<Self, ScalarError> {
        let malformed = || ScalarError::Malformed(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (neg, body) = match compact.as_bytes().first() {
            Some(b'-') => (true, &compact[1..]),
            Some(b'+') => (false, &compact[1..]),
            _ => (false, compact.as_str()),
        };
        let split = body.find(['+', '-']);
        let (first, second) = match split {
            Some(i) => (&body[..i], Some(&body[i..])),
            None => (body, None),
        };
        let mut a = parse_unsigned_rational(first).ok_or_else(malformed)?;
        if neg {
            a = -a;
        }
        let Some(second) = second else {
            return Ok(Self::rational(a));
        };
        let (sign, rest) = second.split_at(1);
        let coeff = rest.strip_suffix("*r").ok_or_else(malformed)?;
        let mut b = parse_unsigned_rational(coeff).ok_or_else(malformed)?;
        if sign == "-" {
            b = -b;
        }
        match ctx {
            FieldContext::Rational => Err(ScalarError::RadicalInRationalField(text.to_string())),
            FieldContext::Quadratic(_) => Self::new(a, b, ctx),
        }
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.a))?;
        if !self.b.is_zero() {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}*r", format_rational(&abs_rational(&self.b)))?;
        }
        Ok(())
    }
}

impl From<Rational> for QuadScalar {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl From<i64> for QuadScalar {
    fn from(v: i64) -> Self {
        Self::integer(v)
    }
}

fn expect<T>(r: Result<T, ScalarError>) -> T {
    r.unwrap_or_else(|e| panic!("quadratic scalar arithmetic: {e}"))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident, $assign_trait:ident, $assign:ident) => {
        impl<'a> $trait<&'a QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                expect(self.$checked(rhs))
            }
        }

        impl<'a> $trait<&'a QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                expect(self.$checked(rhs))
            }
        }

        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                expect(self.$checked(&rhs))
            }
        }

        impl<'a> $assign_trait<&'a QuadScalar> for QuadScalar {
            fn $assign(&mut self, rhs: &'a QuadScalar) {
                *self = expect(self.$checked(rhs));
            }
        }
    };
}

forward_binop!(Add, add, checked_add, AddAssign, add_assign);
forward_binop!(Sub, sub, checked_sub, SubAssign, sub_assign);

impl<'a> Mul<&'a QuadScalar> for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &'a QuadScalar) -> QuadScalar {
        expect(self.checked_mul(rhs))
    }
}

impl<'a> Mul<&'a QuadScalar> for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &'a QuadScalar) -> QuadScalar {
        expect(self.checked_mul(rhs))
    }
}

impl Mul<QuadScalar> for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: QuadScalar) -> QuadScalar {
        expect(self.checked_mul(&rhs))
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -self.clone()
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Scalar for QuadScalar {
    fn from_i64(value: i64) -> Self {
        Self::integer(value)
    }

    fn try_inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }

    fn extension(&self) -> Option<u32> {
        self.d
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
