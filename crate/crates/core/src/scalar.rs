//! Scalar abstractions shared by the numeric modules.
//!
//! Floating-point code is generic over [`Real`] (implemented for `f32` and
//! `f64`). Finite-difference checks run over any [`GridScalar`], which covers
//! both the floats and the exact [`ExactScalar`] rationals.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Exact carrier for every sequence value: a big rational kept in lowest
/// terms with a positive denominator.
pub type ExactScalar = BigRational;

/// Floating-point scalar used by matrices and norm computations.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Project an exact rational onto this float type (round to nearest via `f64`).
    fn from_rational(q: &BigRational) -> Self {
        Self::from_f64(rational_to_f64(q)).unwrap_or_else(Self::nan)
    }

    /// Relative off-diagonal mass at which the Jacobi oracle stops.
    fn jacobi_tolerance() -> Self;

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn jacobi_tolerance() -> Self {
        1e-14
    }
}

impl Real for f32 {
    fn jacobi_tolerance() -> Self {
        f32::EPSILON * 16.0
    }
}

/// Correctly rounded conversion of a big rational to `f64`.
///
/// Values too small for a subnormal round to zero; values above `f64::MAX`
/// give infinity.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Build an exact rational from an integer.
pub fn exact_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Build an exact rational `num / den`.
///
/// # Panics
/// If `den == 0`.
pub fn exact_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Pairwise (cascade) sum of `term(0) + .. + term(len - 1)`.
///
/// Rounding error grows with `log2(len)` rather than `len`.
pub fn pairwise_sum<S, F>(len: usize, term: &F) -> S
where
    S: Copy + Zero + std::ops::Add<Output = S>,
    F: Fn(usize) -> S,
{
    fn go<S, F>(lo: usize, hi: usize, term: &F) -> S
    where
        S: Copy + Zero + std::ops::Add<Output = S>,
        F: Fn(usize) -> S,
    {
        if hi - lo <= 8 {
            return (lo..hi).fold(S::zero(), |acc, i| acc + term(i));
        }
        let mid = lo + (hi - lo) / 2;
        go(lo, mid, term) + go(mid, hi, term)
    }
    go(0, len, term)
}

/// Field-like scalar usable as the value type of a grid function.
pub trait GridScalar: Clone + Debug + Num {
    fn from_i64(v: i64) -> Self;

    /// Equality used by the summation checks: exact for rationals, relative
    /// `1e-12` for floats.
    fn agrees_with(&self, other: &Self) -> bool;
}

impl GridScalar for BigRational {
    fn from_i64(v: i64) -> Self {
        exact_int(v)
    }

    fn agrees_with(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! float_grid_scalar {
    ($t:ty) => {
        impl GridScalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn agrees_with(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1e-12 as $t);
                (self - other).abs() <= (1e-12 as $t).max(<$t>::EPSILON * 4.0) * scale
            }
        }
    };
}

float_grid_scalar!(f32);
float_grid_scalar!(f64);
