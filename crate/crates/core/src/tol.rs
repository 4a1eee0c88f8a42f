//! Central numerical thresholds, stated for `f64` and rescaled through
//! [`crate::Real::tol`] when another scalar type is in use.

/// Orthonormality defect allowed in a stored subspace basis.
pub const ORTHONORMAL: f64 = 1e-12;

/// Relative singular-value cutoff deciding the rank of a spanning set.
pub const RANK_CUT: f64 = 1e-10;

/// Principal angles below this many radians count as zero when locating the
/// smallest non-zero angle.
pub const ZERO_ANGLE: f64 = 1e-8;

/// A singular value of the basis inner-product matrix within this distance
/// of 1 marks a common direction of two subspaces.
pub const INTERSECTION: f64 = 1e-8;

/// Containment and section checks (line inside plane, eigenvector residual).
pub const GEOMETRY: f64 = 1e-8;

/// Idempotence defect allowed in a projection matrix, relative to
/// `1 + ||P||_F`.
pub const IDEMPOTENCE: f64 = 1e-9;

/// Minimal singular value of `[B_R | B_N]` certifying that a range/kernel
/// pair is complementary.
pub const COMPLEMENTARITY: f64 = 1e-10;

/// Eigenvalues within this band of 0 or 1 are classified trivial.
pub const TRIVIAL_BAND: f64 = 1e-8;

/// Frobenius norm beyond which a power sequence is declared divergent.
pub const DIVERGENCE: f64 = 1e12;

/// Default stopping tolerance of the iteration engine.
pub const ITERATE: f64 = 1e-12;

/// Default step cap of the iteration engine.
pub const MAX_STEPS: usize = 10_000;

/// Relative tolerance for projective-point coincidence.
pub const PROJECTIVE_EQ: f64 = 1e-10;

/// Relative threshold below which a cross-ratio denominator counts as zero.
pub const CROSS_RATIO_DENOM: f64 = 1e-12;

/// Admissibility tolerance for a candidate consistency projection.
pub const CONSISTENCY: f64 = 1e-8;

/// Number of sampled unit directions for norms without a closed form.
pub const NORM_SAMPLES: usize = 10_000;

/// Slack allowed when certifying a sampled operator norm as one.
pub const NORM_ONE_SLACK: f64 = 1e-9;

/// Coordinate-search step below which the infimum search stops.
pub const SEARCH_MIN_STEP: f64 = 1e-6;

/// Number of deterministic starts of the infimum search.
pub const SEARCH_STARTS: usize = 32;
