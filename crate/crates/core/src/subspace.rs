//! Linear subspaces of Euclidean space and their angle invariants.
//!
//! A [`Subspace`] is stored as an orthonormal basis, so every angle
//! computation reduces to a singular-value problem on the matrix of pairwise
//! basis inner products.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Real;
use crate::tol;

/// A linear subspace of `ℝⁿ`, held as an orthonormal basis.
///
/// The zero subspace `{0}` is encoded by an empty basis and is a valid
/// value, but the angle operations reject it.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T: Real> {
    /// `n×k` matrix with orthonormal columns; `k = 0` encodes `{0}`.
    basis: DMatrix<T>,
}

/// The ordered tuple of principal angles between two subspaces.
///
/// Angles are in radians, non-decreasing, each in `[0, π/2]`; the length is
/// the minimum of the two dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSpectrum<T: Real> {
    angles: Vec<T>,
}

impl<T: Real> AngleSpectrum<T> {
    pub(crate) fn from_sorted(angles: Vec<T>) -> Self {
        Self { angles }
    }

    pub fn angles(&self) -> &[T] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Cosines of the angles, in the same order.
    pub fn cosines(&self) -> Vec<T> {
        self.angles.iter().map(|a| a.cos()).collect()
    }

    /// Entrywise agreement within `tol`; lengths must match.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.angles.len() == other.angles.len()
            && self
                .angles
                .iter()
                .zip(&other.angles)
                .all(|(a, b)| (*a - *b).abs() <= tol)
    }
}

/// How the rank cut of an orthonormalization decides which singular
/// directions survive.
enum RankCut<T> {
    /// Keep `σ > cut · σ_max` (the default for spanning sets).
    Relative(T),
    /// Keep `σ > cut` outright (used where singular values are known to
    /// cluster at 0 and 1, e.g. projector columns).
    Absolute(T),
}

fn orthonormal_column_span<T: Real>(m: &DMatrix<T>, cut: RankCut<T>) -> DMatrix<T> {
    let n = m.nrows();
    if m.ncols() == 0 {
        return DMatrix::zeros(n, 0);
    }
    let svd = linalg::svd(m);
    let sigma_max = svd.sigma.first().copied().unwrap_or_else(T::zero);
    let threshold = match cut {
        RankCut::Relative(c) => c * sigma_max,
        RankCut::Absolute(c) => c,
    };
    let kept: Vec<usize> = (0..svd.sigma.len())
        .filter(|&i| svd.sigma[i] > threshold)
        .collect();
    let mut basis = DMatrix::zeros(n, kept.len());
    for (j, &i) in kept.iter().enumerate() {
        basis.set_column(j, &svd.u.column(i));
    }
    basis
}

/// Singular values of the basis inner-product matrix, descending and
/// clamped to `[0, 1]`.
///
/// Values within a few ulps of 1 are snapped to exactly 1: arccos turns
/// rounding noise of size ε into angles of size √(2ε), so without the snap
/// a zero principal angle would be irreproducible across equivalent bases.
fn principal_cosines<T: Real>(s1: &Subspace<T>, s2: &Subspace<T>) -> Vec<T> {
    let gram = s1.basis.transpose() * &s2.basis;
    let snap = T::one() - T::c(32.0) * T::machine_epsilon();
    linalg::svd(&gram)
        .sigma
        .into_iter()
        .map(|s| {
            if s >= snap {
                T::one()
            } else {
                s.clamp(T::zero(), T::one())
            }
        })
        .collect()
}

impl<T: Real> Subspace<T> {
    /// The zero subspace `{0}` of `ℝⁿ`.
    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim >= 1, "ambient dimension must be positive");
        Self {
            basis: DMatrix::zeros(ambient_dim, 0),
        }
    }

    /// Subspace spanned by the columns of `m`; linearly dependent columns
    /// are dropped by a rank-revealing orthogonalization.
    pub fn span_columns(m: &DMatrix<T>) -> Result<Self> {
        if m.nrows() == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        let basis = orthonormal_column_span(m, RankCut::Relative(T::tol(tol::RANK_CUT)));
        Ok(Self { basis })
    }

    /// Subspace spanned by a list of vectors of equal length.
    pub fn span_vectors(vectors: &[DVector<T>]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let m = DMatrix::from_fn(n, vectors.len(), |i, j| vectors[j][i]);
        Self::span_columns(&m)
    }

    /// Wraps a matrix whose columns are already orthonormal.
    pub fn from_orthonormal_columns(basis: DMatrix<T>) -> Result<Self> {
        if basis.nrows() == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        let gram = basis.transpose() * &basis;
        let mut defect = T::zero();
        for i in 0..gram.nrows() {
            for j in 0..gram.ncols() {
                let target = if i == j { T::one() } else { T::zero() };
                defect = defect.max((gram[(i, j)] - target).abs());
            }
        }
        if defect > T::tol(tol::ORTHONORMAL) {
            return Err(Error::NotOrthonormal {
                defect: defect.as_f64(),
            });
        }
        Ok(Self { basis })
    }

    /// Column span with an absolute singular-value cut, for matrices whose
    /// singular values are known to cluster (projector columns).
    pub(crate) fn span_columns_absolute(m: &DMatrix<T>, cut: T) -> Self {
        Self {
            basis: orthonormal_column_span(m, RankCut::Absolute(cut)),
        }
    }

    /// A uniformly oriented random subspace, for sampling-based checks.
    pub fn random<R: Rng + ?Sized>(ambient_dim: usize, dim: usize, rng: &mut R) -> Self {
        assert!(dim <= ambient_dim, "subspace dimension exceeds ambient");
        if dim == 0 {
            return Self::zero(ambient_dim);
        }
        loop {
            let m = DMatrix::from_fn(ambient_dim, dim, |_, _| {
                T::c(rng.sample::<f64, _>(StandardNormal))
            });
            let s = Self::span_columns(&m).expect("ambient dimension is positive");
            if s.dim() == dim {
                return s;
            }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.ncols() == 0
    }

    /// The stored orthonormal basis, one column per basis vector.
    pub fn basis(&self) -> &DMatrix<T> {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> DVector<T> {
        self.basis.column(i).into_owned()
    }

    /// Matrix of the orthogonal projection onto this subspace.
    pub fn projector(&self) -> DMatrix<T> {
        &self.basis * self.basis.transpose()
    }

    fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Principal angles between `self` and `other`, non-decreasing.
    ///
    /// Computed as arccos of the singular values (clamped to `[0, 1]`) of
    /// the matrix of pairwise basis inner products; this agrees with the
    /// eigenvalue characterization through the restricted projection
    /// product.
    pub fn principal_angles(&self, other: &Self) -> Result<AngleSpectrum<T>> {
        self.check_same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroSubspace);
        }
        let mut angles: Vec<T> = principal_cosines(self, other)
            .into_iter()
            .map(|c| c.acos())
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).expect("angles are finite"));
        Ok(AngleSpectrum::from_sorted(angles))
    }

    /// Cosine of the smallest non-zero principal angle (the Friedrichs
    /// number); 0 when no non-zero angle exists, i.e. when one subspace
    /// contains the other. Angles below the zero-angle threshold count as
    /// zero.
    pub fn friedrichs_cosine(&self, other: &Self) -> Result<T> {
        self.check_same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroSubspace);
        }
        let zero_angle = T::tol(tol::ZERO_ANGLE);
        for c in principal_cosines(self, other) {
            if c.acos() <= zero_angle {
                continue;
            }
            return Ok(c);
        }
        Ok(T::zero())
    }

    /// `s(M, N) = √(1 − c(M, N)²)` with `c` the Friedrichs cosine.
    pub fn sine_between(&self, other: &Self) -> Result<T> {
        let c = self.friedrichs_cosine(other)?;
        Ok((T::one() - c * c).max(T::zero()).sqrt())
    }

    /// Directed distance `δ(self, other)`: the largest distance from a unit
    /// vector of `self` to `other`, i.e. the operator norm of the
    /// orthogonal projection onto `other⊥` restricted to `self`.
    pub fn directed_distance(&self, other: &Self) -> Result<T> {
        self.check_same_ambient(other)?;
        if self.is_zero() {
            return Err(Error::ZeroSubspace);
        }
        if other.is_zero() {
            return Ok(T::one());
        }
        let a = &self.basis - &other.basis * (other.basis.transpose() * &self.basis);
        Ok(linalg::spectral_norm(&a).clamp(T::zero(), T::one()))
    }

    /// Intersection of the two subspaces: the span of the singular
    /// directions of the basis inner-product matrix whose singular value is
    /// within the intersection tolerance of 1.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let n = self.ambient_dim();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n));
        }
        let gram = self.basis.transpose() * &other.basis;
        let svd = linalg::svd(&gram);
        let threshold = T::one() - T::tol(tol::INTERSECTION);
        let kept: Vec<usize> = (0..svd.sigma.len())
            .filter(|&i| svd.sigma[i] >= threshold)
            .collect();
        if kept.is_empty() {
            return Ok(Self::zero(n));
        }
        let mut m = DMatrix::zeros(n, kept.len());
        for (j, &i) in kept.iter().enumerate() {
            m.set_column(j, &(&self.basis * svd.u.column(i)));
        }
        Self::span_columns(&m)
    }

    /// Span of the union of the two subspaces.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let n = self.ambient_dim();
        let mut m = DMatrix::zeros(n, self.dim() + other.dim());
        for j in 0..self.dim() {
            m.set_column(j, &self.basis.column(j));
        }
        for j in 0..other.dim() {
            m.set_column(self.dim() + j, &other.basis.column(j));
        }
        Self::span_columns(&m)
    }

    /// Orthogonal complement within the ambient space.
    pub fn orthogonal_complement(&self) -> Self {
        let n = self.ambient_dim();
        let q = DMatrix::identity(n, n) - self.projector();
        // Singular values of a projector are 0 or 1, so an absolute cut is safe.
        let basis = orthonormal_column_span(&q, RankCut::Absolute(T::c(0.5)));
        Self { basis }
    }

    /// True when `v` lies in the subspace within `tol`, relatively.
    pub fn contains_vector(&self, v: &DVector<T>, tol: T) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        let residual = v - &self.basis * (self.basis.transpose() * v);
        residual.norm() <= tol * v.norm().max(T::one())
    }

    /// True when `other ⊆ self` within `tol`.
    pub fn contains_subspace(&self, other: &Self, tol: T) -> bool {
        if other.is_zero() {
            return self.ambient_dim() == other.ambient_dim();
        }
        if self.is_zero() {
            return false;
        }
        matches!(other.directed_distance(self), Ok(d) if d <= tol)
    }

    /// True when the two subspaces coincide within `tol`.
    pub fn coincides_with(&self, other: &Self, tol: T) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() == other.dim()
            && self.contains_subspace(other, tol)
            && other.contains_subspace(self, tol)
    }
}
