//! In-crate singular value decomposition by one-sided Jacobi rotations.
//!
//! Every rank, angle and norm decision in the crate goes through this
//! decomposition. The matrices here never exceed a handful of rows, where
//! one-sided Jacobi delivers singular values with high relative accuracy
//! and factors orthonormal to machine precision.

use nalgebra::DMatrix;

use crate::scalar::Real;

/// Thin singular value decomposition `A = U Σ Vᵀ` with `Σ` descending.
#[derive(Debug, Clone)]
pub(crate) struct Svd<T: Real> {
    /// `n×k` with orthonormal columns (columns of zero singular value are
    /// zero vectors).
    pub u: DMatrix<T>,
    /// Singular values, non-increasing, length `k = min(nrows, ncols)` of
    /// the input when the input is tall, else `nrows`.
    pub sigma: Vec<T>,
    /// `ncols×k` with orthonormal columns.
    pub v: DMatrix<T>,
}

/// One-sided Jacobi SVD. Column pairs of a working copy are rotated until
/// mutually orthogonal; the rotations accumulate into `V`, the column
/// norms become the singular values, and the normalized columns form `U`.
pub(crate) fn svd<T: Real>(a: &DMatrix<T>) -> Svd<T> {
    if a.nrows() < a.ncols() {
        let transposed = svd(&a.transpose());
        return Svd {
            u: transposed.v,
            sigma: transposed.sigma,
            v: transposed.u,
        };
    }

    let (n, k) = (a.nrows(), a.ncols());
    let mut work = a.clone();
    let mut v = DMatrix::<T>::identity(k, k);
    if k > 0 {
        let eps = T::machine_epsilon() * T::c(4.0);
        let max_sweeps = 60;
        for _ in 0..max_sweeps {
            let mut rotated = false;
            for p in 0..k.saturating_sub(1) {
                for q in (p + 1)..k {
                    let alpha = work.column(p).dot(&work.column(p));
                    let beta = work.column(q).dot(&work.column(q));
                    let gamma = work.column(p).dot(&work.column(q));
                    if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == T::zero() {
                        continue;
                    }
                    rotated = true;
                    let zeta = (beta - alpha) / (T::c(2.0) * gamma);
                    let tan = {
                        let sign = if zeta >= T::zero() { T::one() } else { -T::one() };
                        sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt())
                    };
                    let cos = T::one() / (T::one() + tan * tan).sqrt();
                    let sin = cos * tan;
                    for i in 0..n {
                        let wp = work[(i, p)];
                        let wq = work[(i, q)];
                        work[(i, p)] = cos * wp - sin * wq;
                        work[(i, q)] = sin * wp + cos * wq;
                    }
                    for i in 0..k {
                        let vp = v[(i, p)];
                        let vq = v[(i, q)];
                        v[(i, p)] = cos * vp - sin * vq;
                        v[(i, q)] = sin * vp + cos * vq;
                    }
                }
            }
            if !rotated {
                break;
            }
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    let norms: Vec<T> = (0..k).map(|j| work.column(j).norm()).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).expect("finite norms"));

    let mut u = DMatrix::zeros(n, k);
    let mut v_sorted = DMatrix::zeros(k, k);
    let mut sigma = Vec::with_capacity(k);
    for (slot, &j) in order.iter().enumerate() {
        let s = norms[j];
        sigma.push(s);
        if s > T::zero() {
            u.set_column(slot, &(work.column(j) / s));
        }
        v_sorted.set_column(slot, &v.column(j));
    }
    Svd { u, sigma, v: v_sorted }
}

/// Largest singular value; 0 for an empty matrix.
pub(crate) fn spectral_norm<T: Real>(a: &DMatrix<T>) -> T {
    svd(a).sigma.first().copied().unwrap_or_else(T::zero)
}

/// Smallest singular value of a square matrix.
pub(crate) fn min_singular_value<T: Real>(a: &DMatrix<T>) -> T {
    svd(a).sigma.last().copied().unwrap_or_else(T::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn reconstruction_error(a: &DMatrix<f64>, svd: &Svd<f64>) -> f64 {
        let k = svd.sigma.len();
        let mut sigma = DMatrix::zeros(k, k);
        for (i, s) in svd.sigma.iter().enumerate() {
            sigma[(i, i)] = *s;
        }
        (&svd.u * sigma * svd.v.transpose() - a).norm()
    }

    #[test]
    fn exact_projector_complement_has_clean_spectrum() {
        // This configuration defeats QR-iteration SVDs that accumulate U.
        let b = DMatrix::from_column_slice(2, 1, &[0.9494342524628168, -0.3139659221163549]);
        let q = DMatrix::<f64>::identity(2, 2) - &b * b.transpose();
        let svd = svd(&q);
        assert!((svd.sigma[0] - 1.0).abs() < 1e-14, "{:?}", svd.sigma);
        assert!(svd.sigma[1].abs() < 1e-14, "{:?}", svd.sigma);
        // The leading left singular vector is orthogonal to b.
        let dot = svd.u.column(0).dot(&b.column(0));
        assert!(dot.abs() < 1e-14, "dot {dot}");
    }

    #[test]
    fn factors_are_orthonormal_and_reconstruct() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for trial in 0..300 {
            let n = 1 + rng.gen_range(0..8);
            let k = 1 + rng.gen_range(0..8);
            let mut a = DMatrix::from_fn(n, k, |_, _| rng.gen_range(-1.0..1.0));
            // Mix in rank-deficient cases.
            if trial % 3 == 0 && k >= 2 {
                let col0 = a.column(0).into_owned();
                a.set_column(k - 1, &(col0 * rng.gen_range(-2.0..2.0)));
            }
            let svd = svd(&a);
            assert!(reconstruction_error(&a, &svd) < 1e-12 * (1.0 + a.norm()));
            for i in 0..svd.sigma.len() {
                for j in (i + 1)..svd.sigma.len() {
                    assert!(svd.sigma[i] >= svd.sigma[j]);
                    if svd.sigma[i] > 0.0 && svd.sigma[j] > 0.0 {
                        assert!(svd.u.column(i).dot(&svd.u.column(j)).abs() < 1e-13);
                    }
                    assert!(svd.v.column(i).dot(&svd.v.column(j)).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn singular_values_match_symmetric_eigenvalues() {
        // Independent route: σ² are the eigenvalues of AᵀA.
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = 2 + rng.gen_range(0..5);
            let k = 1 + rng.gen_range(0..n);
            let a = DMatrix::from_fn(n, k, |_, _| rng.gen_range(-1.0..1.0));
            let svd = svd(&a);
            let mut eigs: Vec<f64> = (a.transpose() * &a)
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .map(|e: &f64| e.max(0.0).sqrt())
                .collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
            for (s, e) in svd.sigma.iter().zip(&eigs) {
                assert!((s - e).abs() <= 1e-10 * (1.0 + e), "{s} vs {e}");
            }
        }
    }

    #[test]
    fn zero_and_empty_matrices() {
        let z = DMatrix::<f64>::zeros(3, 2);
        let svd = svd(&z);
        assert_eq!(svd.sigma, vec![0.0, 0.0]);
        assert_eq!(spectral_norm(&DMatrix::<f64>::zeros(3, 0)), 0.0);
    }
}
