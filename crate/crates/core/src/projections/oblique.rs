//! Idempotent linear maps with explicit range and kernel.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::subspace::Subspace;
use crate::tol;

/// A linear projection `P² = P` on `ℝⁿ`, determined by its range and
/// kernel; not necessarily orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct ObliqueProjection<T: Real> {
    matrix: DMatrix<T>,
    range: Subspace<T>,
    kernel: Subspace<T>,
}

impl<T: Real> ObliqueProjection<T> {
    /// The unique projection with the given range and kernel, `P(R, N)`.
    ///
    /// The pair must split the space: `dim R + dim N = n` and `R ∩ N = {0}`.
    pub fn from_range_and_kernel(range: Subspace<T>, kernel: Subspace<T>) -> Result<Self> {
        let n = range.ambient_dim();
        if kernel.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: kernel.ambient_dim(),
            });
        }
        let (r, k) = (range.dim(), kernel.dim());
        if r + k != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: r + k,
            });
        }

        let mut combined = DMatrix::zeros(n, n);
        for j in 0..r {
            combined.set_column(j, &range.basis().column(j));
        }
        for j in 0..k {
            combined.set_column(r + j, &kernel.basis().column(j));
        }
        let min_sigma = crate::linalg::min_singular_value(&combined);
        if min_sigma <= T::tol(tol::COMPLEMENTARITY) {
            return Err(Error::NotComplementary {
                min_singular_value: min_sigma.as_f64(),
            });
        }
        let inverse = combined.try_inverse().ok_or(Error::NotComplementary {
            min_singular_value: min_sigma.as_f64(),
        })?;

        let matrix = if r == 0 {
            DMatrix::zeros(n, n)
        } else {
            range.basis() * inverse.rows(0, r)
        };
        Ok(Self { matrix, range, kernel })
    }

    /// Reads a projection off an idempotent matrix, extracting the range
    /// from its column space and the kernel from the column space of
    /// `I − P`.
    pub fn from_matrix(matrix: DMatrix<T>, tol: T) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n || n == 0 {
            return Err(Error::DimensionMismatch {
                expected: n.max(1),
                got: matrix.ncols(),
            });
        }
        let scale = T::one() + matrix.norm();
        let defect = (&matrix * &matrix - &matrix).norm();
        if defect > tol * scale {
            return Err(Error::NotIdempotent {
                defect: (defect / scale).as_f64(),
            });
        }
        // Non-zero singular values of an idempotent are at least 1.
        let half = T::c(0.5);
        let range = Subspace::span_columns_absolute(&matrix, half);
        let kernel =
            Subspace::span_columns_absolute(&(DMatrix::identity(n, n) - &matrix), half);
        if range.dim() + kernel.dim() != n {
            return Err(Error::NotComplementary {
                min_singular_value: 0.0,
            });
        }
        let range_defect = (&matrix * range.basis() - range.basis()).norm();
        let kernel_defect = (&matrix * kernel.basis()).norm();
        if range_defect > tol * scale || kernel_defect > tol * scale {
            return Err(Error::NotIdempotent {
                defect: (range_defect.max(kernel_defect) / scale).as_f64(),
            });
        }
        Ok(Self { matrix, range, kernel })
    }

    pub fn matrix(&self) -> &DMatrix<T> {
        &self.matrix
    }

    pub fn range(&self) -> &Subspace<T> {
        &self.range
    }

    pub fn kernel(&self) -> &Subspace<T> {
        &self.kernel
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn rank(&self) -> usize {
        self.range.dim()
    }

    pub fn apply(&self, v: &DVector<T>) -> DVector<T> {
        &self.matrix * v
    }

    /// The complementary projection `I − P`, which swaps range and kernel.
    pub fn complement(&self) -> Self {
        let n = self.ambient_dim();
        Self {
            matrix: DMatrix::identity(n, n) - &self.matrix,
            range: self.kernel.clone(),
            kernel: self.range.clone(),
        }
    }

    /// Block-diagonal direct sum acting on `ℝ^{m+n}`; its range and kernel
    /// are the direct sums of the parts.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (m, n) = (self.ambient_dim(), other.ambient_dim());
        let mut matrix = DMatrix::zeros(m + n, m + n);
        matrix.view_mut((0, 0), (m, m)).copy_from(&self.matrix);
        matrix.view_mut((m, m), (n, n)).copy_from(&other.matrix);

        let embed = |top: &Subspace<T>, bottom: &Subspace<T>| {
            let dim = top.dim() + bottom.dim();
            let mut basis = DMatrix::zeros(m + n, dim);
            basis
                .view_mut((0, 0), (m, top.dim()))
                .copy_from(top.basis());
            basis
                .view_mut((m, top.dim()), (n, bottom.dim()))
                .copy_from(bottom.basis());
            Subspace::from_orthonormal_columns(basis)
                .expect("block-embedded orthonormal bases stay orthonormal")
        };
        Self {
            matrix,
            range: embed(&self.range, &other.range),
            kernel: embed(&self.kernel, &other.kernel),
        }
    }

    /// Idempotence defect `‖P² − P‖_F / (1 + ‖P‖_F)`.
    pub fn idempotence_defect(&self) -> T {
        let defect = (&self.matrix * &self.matrix - &self.matrix).norm();
        defect / (T::one() + self.matrix.norm())
    }

    /// A random projection of the given rank, for sampling-based checks.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> Self {
        assert!(rank <= n, "rank exceeds ambient dimension");
        loop {
            let range = Subspace::random(n, rank, rng);
            let kernel = Subspace::random(n, n - rank, rng);
            if let Ok(p) = Self::from_range_and_kernel(range, kernel) {
                return p;
            }
        }
    }
}
