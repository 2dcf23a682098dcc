//! Scalar abstraction: the math core is generic over any IEEE float.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar the numerics are written against (f32 or f64).
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from f64 literals and precomputed constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant not representable")
    }
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize not representable")
    }
    fn to_f64x(self) -> f64;
}

impl Real for f32 {
    fn to_f64x(self) -> f64 {
        self as f64
    }
}
impl Real for f64 {
    fn to_f64x(self) -> f64 {
        self
    }
}

/// Complex unit for a generic scalar.
pub fn i<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

pub fn c_re<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}
