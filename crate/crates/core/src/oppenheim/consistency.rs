//! Consistency projections: projections onto the intersection of two
//! ranges that absorb both factors, and the affine family of all of them.

use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::projections::ObliqueProjection;
use crate::scalar::Real;
use crate::subspace::Subspace;

/// First condition an inadmissible candidate fails.
#[derive(Debug, Clone, PartialEq)]
pub enum ConsistencyFailure {
    NotIdempotent { residual: f64 },
    RangeNotIntersection { detail: String },
    NotAbsorbingFirst { residual: f64 },
    NotAbsorbingSecond { residual: f64 },
}

impl fmt::Display for ConsistencyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotIdempotent { residual } => {
                write!(f, "not idempotent (residual {residual:.3e})")
            }
            Self::RangeNotIntersection { detail } => {
                write!(f, "image is not the range intersection: {detail}")
            }
            Self::NotAbsorbingFirst { residual } => {
                write!(f, "P12 P1 differs from P12 (residual {residual:.3e})")
            }
            Self::NotAbsorbingSecond { residual } => {
                write!(f, "P12 P2 differs from P12 (residual {residual:.3e})")
            }
        }
    }
}

/// Outcome of an admissibility check, naming the first failed condition.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    failure: Option<ConsistencyFailure>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&ConsistencyFailure> {
        self.failure.as_ref()
    }
}

/// Checks whether `p12` is a consistency projection for the pair: an
/// idempotent map whose image is exactly `im P1 ∩ im P2` and which
/// satisfies `P12 P1 = P12` and `P12 P2 = P12`, all within `tol`.
pub fn check_consistency_projection<T: Real>(
    p12: &DMatrix<T>,
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    tol: T,
) -> Result<ConsistencyReport> {
    let n = p1.ambient_dim();
    if p2.ambient_dim() != n || p12.nrows() != n || p12.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p12.nrows().max(p12.ncols()).max(p2.ambient_dim()),
        });
    }
    let scale = T::one() + p12.norm();
    let fail = |failure| Ok(ConsistencyReport { failure: Some(failure) });

    let idem = (p12 * p12 - p12).norm() / scale;
    if idem > tol {
        return fail(ConsistencyFailure::NotIdempotent {
            residual: idem.as_f64(),
        });
    }

    let intersection = p1.range().intersect(p2.range())?;
    let image = Subspace::span_columns_absolute(p12, T::c(0.5));
    if image.dim() != intersection.dim() {
        return fail(ConsistencyFailure::RangeNotIntersection {
            detail: format!(
                "image dimension {} vs intersection dimension {}",
                image.dim(),
                intersection.dim()
            ),
        });
    }
    if !image.coincides_with(&intersection, tol) && !intersection.is_zero() {
        return fail(ConsistencyFailure::RangeNotIntersection {
            detail: "image and intersection span different directions".into(),
        });
    }

    let absorb1 = (p12 * p1.matrix() - p12).norm() / scale;
    if absorb1 > tol {
        return fail(ConsistencyFailure::NotAbsorbingFirst {
            residual: absorb1.as_f64(),
        });
    }
    let absorb2 = (p12 * p2.matrix() - p12).norm() / scale;
    if absorb2 > tol {
        return fail(ConsistencyFailure::NotAbsorbingSecond {
            residual: absorb2.as_f64(),
        });
    }
    Ok(ConsistencyReport { failure: None })
}

/// The affine family of all consistency projections of a pair.
///
/// A candidate is admissible exactly when it is a projection onto
/// `Z = im P1 ∩ im P2` whose kernel contains `K = ker P1 + ker P2`; the
/// kernels are parametrized as `K ⊕ {d + T d : d ∈ D}` over linear maps
/// `T: D → Z`, where `D` is the orthogonal complement of `Z ⊕ K`.
#[derive(Debug, Clone)]
pub struct ConsistencyFamily<T: Real> {
    intersection: Subspace<T>,
    forced_kernel: Subspace<T>,
    free_complement: Subspace<T>,
    base_point: DMatrix<T>,
}

/// Builds the consistency family of the pair, or reports the pair
/// inconsistent when `Z ∩ K ≠ {0}` and no such projection exists.
pub fn consistency_family<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<ConsistencyFamily<T>> {
    if p1.ambient_dim() != p2.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p1.ambient_dim(),
            got: p2.ambient_dim(),
        });
    }
    let intersection = p1.range().intersect(p2.range())?;
    let forced_kernel = p1.kernel().sum(p2.kernel())?;
    if !intersection.intersect(&forced_kernel)?.is_zero() {
        return Err(Error::InconsistentPair);
    }
    let spanned = intersection.sum(&forced_kernel)?;
    let free_complement = spanned.orthogonal_complement();

    let mut family = ConsistencyFamily {
        intersection,
        forced_kernel,
        free_complement,
        base_point: DMatrix::zeros(p1.ambient_dim(), p1.ambient_dim()),
    };
    family.base_point = family.member(&vec![T::zero(); family.free_dim()])?;
    Ok(family)
}

impl<T: Real> ConsistencyFamily<T> {
    /// `Z = im P1 ∩ im P2`.
    pub fn intersection(&self) -> &Subspace<T> {
        &self.intersection
    }

    /// `K = ker P1 + ker P2`, contained in every member's kernel.
    pub fn forced_kernel(&self) -> &Subspace<T> {
        &self.forced_kernel
    }

    /// `D`, the fixed orthogonal complement of `Z ⊕ K`.
    pub fn free_complement(&self) -> &Subspace<T> {
        &self.free_complement
    }

    /// Number of free parameters, `dim Z · dim D`.
    pub fn free_dim(&self) -> usize {
        self.intersection.dim() * self.free_complement.dim()
    }

    /// The member with `T = 0`, whose kernel is `K ⊕ D`.
    pub fn base_point(&self) -> &DMatrix<T> {
        &self.base_point
    }

    /// Member for a parameter vector: the entries of `T: D → Z` in the
    /// stored bases, column-major (one block of `dim Z` entries per basis
    /// vector of `D`).
    pub fn member(&self, params: &[T]) -> Result<DMatrix<T>> {
        Ok(self.member_projection(params)?.matrix().clone())
    }

    /// Same as [`ConsistencyFamily::member`], keeping range and kernel.
    pub fn member_projection(&self, params: &[T]) -> Result<ObliqueProjection<T>> {
        if params.len() != self.free_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.free_dim(),
                got: params.len(),
            });
        }
        let n = self.intersection.ambient_dim();
        let z = self.intersection.dim();
        let k = self.forced_kernel.dim();
        let d = self.free_complement.dim();

        let mut kernel_span = DMatrix::zeros(n, k + d);
        kernel_span
            .view_mut((0, 0), (n, k))
            .copy_from(self.forced_kernel.basis());
        for j in 0..d {
            let mut column = self.free_complement.basis_vector(j);
            for i in 0..z {
                column += self.intersection.basis_vector(i) * params[j * z + i];
            }
            kernel_span.set_column(k + j, &column);
        }
        let kernel = Subspace::span_columns(&kernel_span)?;
        ObliqueProjection::from_range_and_kernel(self.intersection.clone(), kernel)
    }

    /// Least-squares parameters reproducing `p12`, with the Frobenius
    /// residual of the reproduction. A small residual certifies membership.
    pub fn solve_parameters(&self, p12: &DMatrix<T>) -> Result<(Vec<T>, T)> {
        let n = self.intersection.ambient_dim();
        if p12.nrows() != n || p12.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p12.nrows().max(p12.ncols()),
            });
        }
        let z = self.intersection.dim();
        let d = self.free_complement.dim();
        // On a member, P12(d + B_Z t_d) = 0 and P12 restricted to Z is the
        // identity, so t_d = −B_Zᵀ P12 d.
        let t = -(self.intersection.basis().transpose() * p12 * self.free_complement.basis());
        let mut params = Vec::with_capacity(z * d);
        for j in 0..d {
            for i in 0..z {
                params.push(t[(i, j)]);
            }
        }
        let residual = (self.member(&params)? - p12).norm();
        Ok((params, residual))
    }

    /// Membership test at the given tolerance.
    pub fn contains(&self, p12: &DMatrix<T>, tol: T) -> bool {
        match self.solve_parameters(p12) {
            Ok((_, residual)) => residual <= tol * (T::one() + p12.norm()),
            Err(_) => false,
        }
    }
}
