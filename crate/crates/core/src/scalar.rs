//! Scalar abstraction: every computation in the crate is generic over the
//! floating-point type through [`Real`].

use num_traits::{FromPrimitive, ToPrimitive};

/// Floating-point scalar usable for all geometry computations: `f32` or `f64`.
///
/// Tolerances throughout the crate are calibrated for `f64`; [`Real::tol`]
/// rescales them by the ratio of machine epsilons so that `f32`
/// instantiations get proportionally looser thresholds.
pub trait Real: nalgebra::RealField + FromPrimitive + ToPrimitive + Copy {
    /// Machine epsilon of the concrete type.
    fn machine_epsilon() -> Self;

    /// Converts an `f64` constant into the scalar type.
    #[inline]
    fn c(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite f64 constant")
    }

    /// A residual threshold stated for `f64`, rescaled linearly in machine
    /// epsilon. Residuals of exact identities scale with round-off, so the
    /// threshold follows the epsilon ratio.
    #[inline]
    fn tol(threshold_f64: f64) -> Self {
        Self::c(threshold_f64 / f64::EPSILON) * Self::machine_epsilon()
    }

    /// A classification band stated for `f64`, rescaled by the square root
    /// of the epsilon ratio. Bands sit far above round-off and separate
    /// genuine values from degenerate ones; angle-like quantities lose
    /// accuracy like √ε near degeneracy, so the band follows that rate.
    #[inline]
    fn band(threshold_f64: f64) -> Self {
        Self::c(threshold_f64 / f64::EPSILON.sqrt()) * Self::machine_epsilon().sqrt()
    }

    /// Lossy view of the value as `f64`, for diagnostics.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    #[inline]
    fn machine_epsilon() -> Self {
        f64::EPSILON
    }
}

impl Real for f32 {
    #[inline]
    fn machine_epsilon() -> Self {
        f32::EPSILON
    }
}
