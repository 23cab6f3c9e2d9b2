//! Scalar abstraction.
//!
//! Every numeric kernel in this crate is generic over [`Scalar`] so the same
//! code runs in `f32` and `f64`. The file formats and the CLI pin `f64`; the
//! crate root exports concrete aliases for that instantiation.

use num_traits::{Float, FromPrimitive};

/// Floating point scalar used by the tensor and spectral kernels.
pub trait Scalar:
    Float
    + FromPrimitive
    + Default
    + std::fmt::Debug
    + std::fmt::Display
    + std::iter::Sum
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal, rounding to the nearest representable value.
    fn cast(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 literal")
    }

    /// Converts a count, rounding to the nearest representable value.
    fn from_count(c: usize) -> Self {
        Self::from_usize(c).expect("usize conversion")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
