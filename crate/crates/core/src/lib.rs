//! Geometry of linear projections in Euclidean space.
//!
//! The crate analyzes pairs of (generally non-orthogonal) linear projections
//! through the angle invariants of their ranges and kernels: principal
//! angles, Friedrichs numbers, directed distances and projective
//! cross-ratios. Closed-form spectral-radius formulas predict whether the
//! power sequence `(P1 P2)^n` converges, an iteration engine observes it
//! directly, and the Oppenheim angle machinery handles consistency
//! projections under several norms.

pub mod error;
pub mod gallery;
mod linalg;
pub mod oppenheim;
pub mod projections;
pub mod projective;
pub mod scalar;
pub mod subspace;
pub mod tol;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision subspace.
pub type Subspace64 = subspace::Subspace<f64>;
/// Single-precision subspace.
pub type Subspace32 = subspace::Subspace<f32>;
/// Double-precision oblique projection.
pub type Projection64 = projections::ObliqueProjection<f64>;
/// Single-precision oblique projection.
pub type Projection32 = projections::ObliqueProjection<f32>;
