//! Scalar abstraction for the numeric core.
//!
//! Every algorithm in this crate is written against [`Real`], so the whole
//! pipeline can be instantiated at `f32` or `f64`. The crate root exports
//! `f64` aliases, which is what the CLI and the reference experiments use.

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::FromPrimitive;

/// Floating-point scalar usable by the simulation core: `f32` or `f64`.
pub trait Real: RealField + FromPrimitive + Copy + Default {
    /// Lift an `f64` constant into this scalar type.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in scalar type")
    }

    /// Lift a `usize` (grid sizes, counters) into this scalar type.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count not representable in scalar type")
    }
}

impl<T> Real for T where T: RealField + FromPrimitive + Copy + Default {}

/// Complex number over the crate's scalar.
pub type C<T> = Complex<T>;

/// `0 + 0i`.
#[inline]
pub fn c_zero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

/// `1 + 0i`.
#[inline]
pub fn c_one<T: Real>() -> C<T> {
    Complex::new(T::one(), T::zero())
}

/// `0 + 1i`.
#[inline]
pub fn c_i<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::one())
}

/// Real number promoted to a complex value.
#[inline]
pub fn c_re<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}
