//! Power iteration of a product of two projections, and the dense
//! eigensolver used as the numerical oracle for every closed form.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::projections::ObliqueProjection;
use crate::scalar::Real;
use crate::tol;

/// Outcome of iterating `(P1 P2)^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Converges,
    Diverges,
    Inconclusive,
}

/// Trajectory and verdict of the power sequence `(P1 P2)^n`.
#[derive(Debug, Clone)]
pub struct IterationReport<T: Real> {
    pub verdict: Verdict,
    /// Final power when the sequence settled; absent otherwise.
    pub limit: Option<DMatrix<T>>,
    /// Number of multiplications performed.
    pub steps: usize,
    /// Frobenius distances between consecutive powers.
    pub step_norms: Vec<T>,
    /// Gelfand-style estimate `‖A_k‖_F^{1/k}` at the final step.
    pub radius_estimate: T,
}

/// Runs `A_k = (P1 P2)^k` until consecutive powers differ by less than
/// `tol` in Frobenius norm (converges), the norm passes the divergence
/// threshold (diverges), or `max_steps` multiplications are exhausted
/// (inconclusive).
pub fn iterate_product<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    max_steps: usize,
    tol: T,
) -> Result<IterationReport<T>> {
    if p1.ambient_dim() != p2.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p1.ambient_dim(),
            got: p2.ambient_dim(),
        });
    }
    let max_steps = max_steps.max(1);
    let product = p1.matrix() * p2.matrix();
    let mut power = product.clone();
    let mut step_norms = Vec::new();
    let divergence = T::c(tol::DIVERGENCE);

    for step in 1..=max_steps {
        let next = &power * &product;
        let diff = (&next - &power).norm();
        step_norms.push(diff);
        if diff < tol {
            let radius_estimate = gelfand(&next, step + 1);
            return Ok(IterationReport {
                verdict: Verdict::Converges,
                limit: Some(next),
                steps: step,
                step_norms,
                radius_estimate,
            });
        }
        if next.norm() > divergence {
            let radius_estimate = gelfand(&next, step + 1);
            return Ok(IterationReport {
                verdict: Verdict::Diverges,
                limit: None,
                steps: step,
                step_norms,
                radius_estimate,
            });
        }
        power = next;
    }

    let radius_estimate = gelfand(&power, max_steps + 1);
    Ok(IterationReport {
        verdict: Verdict::Inconclusive,
        limit: None,
        steps: max_steps,
        step_norms,
        radius_estimate,
    })
}

/// [`iterate_product`] with the default step cap and tolerance.
pub fn iterate_product_default<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<IterationReport<T>> {
    iterate_product(p1, p2, tol::MAX_STEPS, T::tol(tol::ITERATE))
}

fn gelfand<T: Real>(power: &DMatrix<T>, exponent: usize) -> T {
    let norm = power.norm();
    if norm == T::zero() {
        T::zero()
    } else {
        norm.powf(T::one() / T::c(exponent as f64))
    }
}

/// Spectral radius through the dense eigensolver: the largest eigenvalue
/// modulus.
pub fn spectral_radius_numeric<T: Real>(m: &DMatrix<T>) -> T {
    assert_eq!(m.nrows(), m.ncols(), "spectral radius needs a square matrix");
    m.complex_eigenvalues()
        .iter()
        .map(|e| (e.re * e.re + e.im * e.im).sqrt())
        .fold(T::zero(), |a, b| a.max(b))
}
