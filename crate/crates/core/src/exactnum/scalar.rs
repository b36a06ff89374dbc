use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{FieldContext, Rational, ScalarError};

/// Field element usable as a structure constant.
///
/// Exact types compare with `==`; floating point types override
/// [`Scalar::approx_eq`] with a relative tolerance so that the same checkers
/// can run on numeric approximations.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    fn from_i64(value: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    /// Quadratic extension this value needs, if any.
    fn extension(&self) -> Option<u32> {
        None
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }
}

/// Joins the contexts of all values, failing on two distinct extensions.
pub fn context_of<'a, T: Scalar + 'a>(
    values: impl IntoIterator<Item = &'a T>,
) -> Result<FieldContext, ScalarError> {
    values
        .into_iter()
        .try_fold(FieldContext::Rational, |ctx, v| {
            ctx.join(FieldContext::from_extension(v.extension()))
        })
}

impl Scalar for Rational {
    fn from_i64(value: i64) -> Self {
        Rational::from_integer(value.into())
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn from_i64(value: i64) -> Self {
                value as $t
            }

            fn try_inv(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / self)
                }
            }

            fn approx_eq(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);
