//! The Oppenheim cosine for a given consistency projection, its infimum
//! over the admissible family, and the two alternating limits.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::oppenheim::consistency::{check_consistency_projection, consistency_family};
use crate::oppenheim::norms::{operator_norm, sampled_operator_norm, NormSpec};
use crate::projections::{iterate_product_default, ObliqueProjection};
use crate::scalar::Real;
use crate::tol;

/// `cos_{P12}∠(P1, P2) = max(‖P1(P2 − P12)‖, ‖P2(P1 − P12)‖)` for an
/// admissible consistency projection.
pub fn oppenheim_cos_given<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    p12: &DMatrix<T>,
    norm: NormSpec,
) -> Result<T> {
    let report = check_consistency_projection(p12, p1, p2, T::tol(tol::CONSISTENCY))?;
    if let Some(failure) = report.failure() {
        return Err(Error::InadmissibleConsistencyProjection(failure.to_string()));
    }
    Ok(cos_given_unchecked(p1, p2, p12, norm))
}

fn cos_given_unchecked<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    p12: &DMatrix<T>,
    norm: NormSpec,
) -> T {
    let first = operator_norm(&(p1.matrix() * (p2.matrix() - p12)), norm);
    let second = operator_norm(&(p2.matrix() * (p1.matrix() - p12)), norm);
    first.max(second)
}

/// Result of the infimum search over the consistency family.
#[derive(Debug, Clone)]
pub struct OppenheimInfimum<T: Real> {
    /// Best cosine found; an upper bound on the true infimum.
    pub value: T,
    /// The minimizing consistency projection.
    pub minimizer: DMatrix<T>,
    /// Family parameters of the minimizer.
    pub parameters: Vec<T>,
    /// Number of cosine evaluations spent.
    pub evaluations: usize,
}

/// Approximates `cos∠(P1, P2) = inf over admissible P12` by a multi-start
/// coordinate search over the affine consistency family.
///
/// The search is deterministic; the reported value is an upper bound on
/// the true infimum, with no claim of global optimality.
pub fn oppenheim_cos_inf<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    norm: NormSpec,
) -> Result<OppenheimInfimum<T>> {
    let family = consistency_family(p1, p2)?;
    let dims = family.free_dim();
    let mut evaluations = 0usize;

    let mut objective = |params: &[T]| -> Option<T> {
        evaluations += 1;
        family
            .member(params)
            .ok()
            .map(|p12| cos_given_unchecked(p1, p2, &p12, norm))
    };

    let base = vec![T::zero(); dims];
    let mut best_params = base.clone();
    let mut best_value = objective(&base).expect("the base point is always a member");

    if dims > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6f70_7069_6e66); // fixed stream
        let min_step = T::tol(tol::SEARCH_MIN_STEP);
        for start_index in 0..tol::SEARCH_STARTS {
            let start: Vec<T> = if start_index == 0 {
                base.clone()
            } else {
                let radius = T::c(2.0f64.powi((start_index as i32 - 1) % 8 - 2));
                (0..dims)
                    .map(|_| T::c(rng.sample::<f64, _>(StandardNormal)) * radius)
                    .collect()
            };
            let Some((params, value)) =
                coordinate_search(&mut objective, start, T::one(), min_step)
            else {
                continue;
            };
            if value < best_value {
                best_value = value;
                best_params = params;
            }
        }
    }

    let minimizer = family.member(&best_params)?;
    Ok(OppenheimInfimum {
        value: best_value,
        minimizer,
        parameters: best_params,
        evaluations,
    })
}

/// Greedy coordinate descent with a halving step, stopping below
/// `min_step`.
fn coordinate_search<T: Real>(
    objective: &mut impl FnMut(&[T]) -> Option<T>,
    start: Vec<T>,
    initial_step: T,
    min_step: T,
) -> Option<(Vec<T>, T)> {
    let mut point = start;
    let mut value = objective(&point)?;
    let mut step = initial_step;
    let mut budget = 200_000usize;
    while step > min_step && budget > 0 {
        let mut improved = false;
        for i in 0..point.len() {
            for sign in [T::one(), -T::one()] {
                let mut candidate = point.clone();
                candidate[i] += sign * step;
                budget = budget.saturating_sub(1);
                if let Some(v) = objective(&candidate) {
                    if v < value {
                        value = v;
                        point = candidate;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            step *= T::c(0.5);
        }
    }
    Some((point, value))
}

/// The two alternating limits and a sampled norm-one certificate for both
/// projections.
#[derive(Debug, Clone)]
pub struct AlternatingLimits<T: Real> {
    /// `lim (P1 P2)^n` when the powers converge.
    pub forward: Option<DMatrix<T>>,
    /// `lim (P2 P1)^n` when the powers converge.
    pub backward: Option<DMatrix<T>>,
    /// Sampled operator norm of `P1` in the chosen norm.
    pub first_sampled_norm: T,
    /// Sampled operator norm of `P2` in the chosen norm.
    pub second_sampled_norm: T,
    /// Whether the sampled norm of `P1` stays within `1 + slack`.
    pub first_norm_one: bool,
    /// Whether the sampled norm of `P2` stays within `1 + slack`.
    pub second_norm_one: bool,
}

/// Limits of `(P1 P2)^n` and `(P2 P1)^n`; the norm only enters the
/// norm-one certification, sampled over deterministic unit directions.
pub fn alternating_limits<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    norm: NormSpec,
) -> Result<AlternatingLimits<T>> {
    let forward = iterate_product_default(p1, p2)?.limit;
    let backward = iterate_product_default(p2, p1)?.limit;
    let first_sampled_norm = sampled_operator_norm(p1.matrix(), norm, tol::NORM_SAMPLES);
    let second_sampled_norm = sampled_operator_norm(p2.matrix(), norm, tol::NORM_SAMPLES);
    let bound = T::one() + T::tol(tol::NORM_ONE_SLACK);
    Ok(AlternatingLimits {
        forward,
        backward,
        first_sampled_norm,
        second_sampled_norm,
        first_norm_one: first_sampled_norm <= bound,
        second_norm_one: second_sampled_norm <= bound,
    })
}
