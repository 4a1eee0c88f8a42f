//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong in the geometry layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Vectors or matrices of incompatible sizes were combined.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An angle operation received the zero subspace.
    #[error("the zero subspace has no angle spectrum")]
    ZeroSubspace,

    /// A claimed orthonormal basis fails the orthonormality invariant.
    #[error("basis is not orthonormal (defect {defect:.3e})")]
    NotOrthonormal { defect: f64 },

    /// A range/kernel pair does not split the space.
    #[error("range and kernel are not complementary (min singular value {min_singular_value:.3e})")]
    NotComplementary { min_singular_value: f64 },

    /// A matrix expected to be idempotent is not.
    #[error("matrix is not idempotent (defect {defect:.3e})")]
    NotIdempotent { defect: f64 },

    /// A 2D eigenvalue formula was applied to the zero or identity map.
    #[error("projection is trivial (rank {rank} in dimension {dim})")]
    TrivialProjection { rank: usize, dim: usize },

    /// The supplied vector is not an eigenvector at the required accuracy,
    /// or its eigenvalue is 0 or 1.
    #[error("not a non-trivial eigenvector (residual {residual:.3e}, eigenvalue {eigenvalue})")]
    NotNontrivialEigenvector { residual: f64, eigenvalue: f64 },

    /// A rank combination outside the scope of the requested formula.
    #[error("unsupported rank pair ({rank1}, {rank2}); mixed ranks go through the mixed-case formula")]
    UnsupportedRanks { rank1: usize, rank2: usize },

    /// The configuration admits no non-trivial eigenvalue.
    #[error("the pair admits no non-trivial eigenvalue")]
    NoNontrivialEigenvalue,

    /// Plane sections violate the geometry needed for a cross-ratio.
    #[error("section geometry failed: {0}")]
    SectionGeometry(String),

    /// A line claimed to lie in a plane does not.
    #[error("line is not contained in the plane (defect {defect:.3e})")]
    LineNotInPlane { defect: f64 },

    /// Homogeneous coordinates (0, 0) do not define a projective point.
    #[error("(0, 0) is not a projective point")]
    ZeroHomogeneousCoordinates,

    /// Both cross-ratio determinant products vanish.
    #[error("cross-ratio is indeterminate (0/0)")]
    IndeterminateCrossRatio,

    /// The inner-product form of the cross-ratio met a vanishing denominator.
    #[error("vanishing denominator in inner-product cross-ratio")]
    VanishingDenominator,

    /// No consistency projection exists for the pair.
    #[error("inconsistent pair: the range intersection meets the combined kernels")]
    InconsistentPair,

    /// A candidate consistency projection failed the admissibility check.
    #[error("inadmissible consistency projection: {0}")]
    InadmissibleConsistencyProjection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
