//! Scalar abstraction: every numeric routine in this crate is generic over a
//! floating-point type implementing [`Scalar`]. Concrete `f64` aliases live at
//! the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar underlying series, determinant and search arithmetic.
///
/// Blanket-implemented for `f32` and `f64` (and anything else satisfying the
/// bounds).
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + NumAssign
        + Sum
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Convert an `f64` constant into the working scalar type.
pub(crate) fn real<F: Scalar>(x: f64) -> F {
    F::from_f64(x).expect("constant must be representable in the scalar type")
}

/// `n` as a scalar.
pub(crate) fn int<F: Scalar>(n: usize) -> F {
    F::from_usize(n).expect("index must be representable in the scalar type")
}
