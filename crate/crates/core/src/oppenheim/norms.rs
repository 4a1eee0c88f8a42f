//! Vector norms and the operator norms they induce.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::scalar::Real;
use crate::tol;

/// The vector norm inducing an operator norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormSpec {
    /// `‖x‖ = √Σ xᵢ²`.
    Euclidean,
    /// `‖x‖ = Σ |xᵢ|`.
    AbsSum,
    /// `‖x‖ = √Σ xᵢ² + Σ |xᵢ|`, uniformly convex but not smooth.
    EuclidPlusAbsSum,
}

/// Evaluates the chosen vector norm.
pub fn vector_norm<T: Real>(v: &DVector<T>, norm: NormSpec) -> T {
    let euclid = v.norm();
    let abs_sum = v.iter().fold(T::zero(), |a, x| a + x.abs());
    match norm {
        NormSpec::Euclidean => euclid,
        NormSpec::AbsSum => abs_sum,
        NormSpec::EuclidPlusAbsSum => euclid + abs_sum,
    }
}

/// Operator norm of `m` induced by the vector norm.
///
/// The Euclidean case is the largest singular value and the
/// sum-of-absolute-values case is the maximum absolute column sum, both
/// exact. The mixed norm has no closed form; it is maximized over
/// deterministic sampled unit directions followed by a coordinate-wise
/// refinement, so the returned value is a lower bound on the true norm
/// (within about `1e-3` for matrices of size up to four).
pub fn operator_norm<T: Real>(m: &DMatrix<T>, norm: NormSpec) -> T {
    match norm {
        NormSpec::Euclidean => crate::linalg::spectral_norm(m),
        NormSpec::AbsSum => (0..m.ncols())
            .map(|j| m.column(j).iter().fold(T::zero(), |a, x| a + x.abs()))
            .fold(T::zero(), |a, s| a.max(s)),
        NormSpec::EuclidPlusAbsSum => sampled_operator_norm(m, norm, tol::NORM_SAMPLES),
    }
}

/// Ratio `‖Mx‖ / ‖x‖` maximized over `samples` deterministic unit
/// directions, then refined by a coordinate search around the best one.
///
/// Usable with every [`NormSpec`]; the result never exceeds the true
/// operator norm.
pub fn sampled_operator_norm<T: Real>(m: &DMatrix<T>, norm: NormSpec, samples: usize) -> T {
    let n = m.ncols();
    if n == 0 {
        return T::zero();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f70_6e6f_726d); // fixed stream
    let mut image = DVector::zeros(m.nrows());
    let mut ratio_of = |x: &DVector<T>| {
        m.mul_to(x, &mut image);
        vector_norm(&image, norm) / vector_norm(x, norm)
    };

    let mut best = DVector::from_element(n, T::one());
    let mut best_ratio = ratio_of(&best);
    // Canonical anchors: exact maximizers of the column-sum norm and good
    // starts elsewhere.
    let mut x = DVector::zeros(n);
    for j in 0..n {
        x.fill(T::zero());
        x[j] = T::one();
        let r = ratio_of(&x);
        if r > best_ratio {
            best_ratio = r;
            best.copy_from(&x);
        }
    }
    for _ in 0..samples {
        for i in 0..n {
            x[i] = T::c(rng.sample::<f64, _>(StandardNormal));
        }
        if x.norm() == T::zero() {
            continue;
        }
        let r = ratio_of(&x);
        if r > best_ratio {
            best_ratio = r;
            best.copy_from(&x);
        }
    }

    // Coordinate-wise refinement with a shrinking step; the ratio is
    // scale-invariant, so the iterate is renormalized freely.
    let scale = best.norm();
    best /= scale;
    let mut step = T::c(0.5);
    let min_step = T::tol(tol::SEARCH_MIN_STEP);
    let mut budget = 100_000usize;
    while step > min_step && budget > 0 {
        let mut improved = false;
        for i in 0..n {
            for sign in [T::one(), -T::one()] {
                let mut candidate = best.clone();
                candidate[i] += sign * step;
                let scale = candidate.norm();
                if scale == T::zero() {
                    continue;
                }
                candidate /= scale;
                let r = ratio_of(&candidate);
                budget = budget.saturating_sub(1);
                if r > best_ratio {
                    best_ratio = r;
                    best = candidate;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= T::c(0.5);
        }
    }
    best_ratio
}
