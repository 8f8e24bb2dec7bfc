//! Scalar abstraction for the math kernels.
//!
//! The special functions and quadrature rules are written once against this
//! trait and instantiated at `f32` or `f64`. The stated accuracy contracts
//! (e.g. 1e-12 relative error for the gamma function) hold for `f64`; the
//! `f32` instantiation is accurate to roughly single-precision epsilon.

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + NumAssign + std::fmt::Debug + std::fmt::Display + std::iter::Sum + 'static
{
    /// Conversion from an `f64` constant.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant representable in scalar type")
    }

    /// Conversion from a `usize` count.
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("count representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
