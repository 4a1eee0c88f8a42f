//! Closed-form eigenvalue and spectral-radius formulas for products of two
//! projections in two and three dimensions.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::projections::ObliqueProjection;
use crate::projective::{cross_ratio, plane_coordinates, ExtendedReal, ProjectivePoint};
use crate::scalar::Real;
use crate::subspace::Subspace;
use crate::tol;

fn line_as_point<T: Real>(line: &Subspace<T>) -> Result<ProjectivePoint<T>> {
    if line.ambient_dim() != 2 || line.dim() != 1 {
        return Err(Error::SectionGeometry(format!(
            "expected a line in the plane, got dimension {} in ambient {}",
            line.dim(),
            line.ambient_dim()
        )));
    }
    let b = line.basis_vector(0);
    ProjectivePoint::new(b[0], b[1])
}

fn require_plane_rank_one<T: Real>(p: &ObliqueProjection<T>) -> Result<()> {
    if p.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: p.ambient_dim(),
        });
    }
    if p.rank() != 1 {
        return Err(Error::TrivialProjection {
            rank: p.rank(),
            dim: 2,
        });
    }
    Ok(())
}

/// The unique possibly non-zero eigenvalue of `P1 P2` for two rank-one
/// projections of the plane: the cross-ratio `[R1, R2, N2, N1]` of the two
/// ranges and kernels, signed.
pub fn nonzero_eigenvalue_2d<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<T> {
    require_plane_rank_one(p1)?;
    require_plane_rank_one(p2)?;
    let r1 = line_as_point(p1.range())?;
    let r2 = line_as_point(p2.range())?;
    let n1 = line_as_point(p1.kernel())?;
    let n2 = line_as_point(p2.kernel())?;
    match cross_ratio(r1, r2, n2, n1)? {
        ExtendedReal::Finite(v) => Ok(v),
        // Complementary range/kernel pairs keep the denominator away from 0.
        ExtendedReal::Infinity => Err(Error::SectionGeometry(
            "cross-ratio denominator vanished for a complementary pair".into(),
        )),
    }
}

/// Spectral radius of `P1 P2` for two rank-one projections of the plane,
/// through the sine ratio
/// `s(R1, N2) s(R2, N1) / (s(R1, N1) s(R2, N2))`.
pub fn spectral_radius_formula_2d<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<T> {
    require_plane_rank_one(p1)?;
    require_plane_rank_one(p2)?;
    let numerator =
        p1.range().sine_between(p2.kernel())? * p2.range().sine_between(p1.kernel())?;
    let denominator =
        p1.range().sine_between(p1.kernel())? * p2.range().sine_between(p2.kernel())?;
    Ok(numerator / denominator)
}

fn section_lines<T: Real>(
    plane: &Subspace<T>,
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<[Subspace<T>; 4]> {
    let mut lines = Vec::with_capacity(4);
    for (name, s) in [
        ("range of P1", p1.range()),
        ("range of P2", p2.range()),
        ("kernel of P1", p1.kernel()),
        ("kernel of P2", p2.kernel()),
    ] {
        let section = plane.intersect(s)?;
        if section.dim() != 1 {
            return Err(Error::SectionGeometry(format!(
                "section with the {name} has dimension {}",
                section.dim()
            )));
        }
        lines.push(section);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if !lines[i].intersect(&lines[j])?.is_zero() {
                return Err(Error::SectionGeometry(format!(
                    "sections {i} and {j} coincide"
                )));
            }
        }
    }
    Ok([
        lines[0].clone(),
        lines[1].clone(),
        lines[2].clone(),
        lines[3].clone(),
    ])
}

/// The invariant plane `E_v = span(v, P2 v)` attached to a non-trivial
/// eigenvector `v` of `P1 P2`. Its sections with both ranges and kernels
/// are one-dimensional with pairwise trivial intersections.
pub fn eigen_plane<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    v: &DVector<T>,
) -> Result<Subspace<T>> {
    let n = p1.ambient_dim();
    if p2.ambient_dim() != n || v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p2.ambient_dim().max(v.len()),
        });
    }
    let image = p1.apply(&p2.apply(v));
    let v_norm_sq = v.dot(v);
    if v_norm_sq == T::zero() {
        return Err(Error::NotNontrivialEigenvector {
            residual: f64::INFINITY,
            eigenvalue: 0.0,
        });
    }
    let lambda = image.dot(v) / v_norm_sq;
    let residual = (&image - v * lambda).norm() / v_norm_sq.sqrt();
    let band = T::tol(tol::TRIVIAL_BAND);
    if residual > T::tol(tol::GEOMETRY) || lambda.abs() <= band || (lambda - T::one()).abs() <= band
    {
        return Err(Error::NotNontrivialEigenvector {
            residual: residual.as_f64(),
            eigenvalue: lambda.as_f64(),
        });
    }

    let plane = Subspace::span_vectors(&[v.clone(), p2.apply(v)])?;
    if plane.dim() != 2 {
        return Err(Error::SectionGeometry(
            "eigenvector and its image under P2 are collinear".into(),
        ));
    }
    section_lines(&plane, p1, p2)?;
    Ok(plane)
}

/// Eigenvalue of `P1 P2` read off an invariant plane: the cross-ratio of
/// the four section lines `[R1', R2', N2', N1']` in plane coordinates.
///
/// `E ∩ R1` is verified to be an eigenspace of `P1 P2` for the returned
/// value, which is never 0 or 1.
pub fn invariant_plane_eigenvalue<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    plane: &Subspace<T>,
) -> Result<T> {
    if plane.dim() != 2 {
        return Err(Error::SectionGeometry(format!(
            "invariant plane must be two-dimensional, got {}",
            plane.dim()
        )));
    }
    let [r1, r2, n1, n2] = section_lines(plane, p1, p2)?;
    let points = [
        plane_coordinates(&r1, plane)?,
        plane_coordinates(&r2, plane)?,
        plane_coordinates(&n2, plane)?,
        plane_coordinates(&n1, plane)?,
    ];
    let lambda = match cross_ratio(points[0], points[1], points[2], points[3])? {
        ExtendedReal::Finite(v) => v,
        ExtendedReal::Infinity => {
            return Err(Error::SectionGeometry(
                "cross-ratio of distinct sections cannot be infinite".into(),
            ))
        }
    };

    let u = r1.basis_vector(0);
    let residual = (p1.apply(&p2.apply(&u)) - &u * lambda).norm();
    if residual > T::tol(tol::GEOMETRY) * (T::one() + lambda.abs()) {
        return Err(Error::NotNontrivialEigenvector {
            residual: residual.as_f64(),
            eigenvalue: lambda.as_f64(),
        });
    }
    Ok(lambda)
}

/// Ambient-3 rank check; returns true for the rank-two case.
fn rank_profile_3d<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<bool> {
    if p1.ambient_dim() != 3 || p2.ambient_dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: p1.ambient_dim().max(p2.ambient_dim()),
        });
    }
    match (p1.rank(), p2.rank()) {
        (2, 2) => Ok(true),
        (1, 1) => Ok(false),
        (r1, r2) => Err(Error::UnsupportedRanks { rank1: r1, rank2: r2 }),
    }
}

/// Absolute value of the unique non-trivial eigenvalue of `P1 P2` for two
/// projections of `ℝ³` of equal rank, when it exists.
///
/// For rank-two projections the value is the directed-distance ratio
/// `δ(N2, R1) δ(N1, R2) / (δ(N1, R1) δ(N2, R2))`; for rank-one projections
/// the same ratio with ranges and kernels exchanged. `None` means the
/// configuration rules out a non-trivial eigenvalue.
pub fn nontrivial_eigenvalue_3d<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<Option<T>> {
    let rank_two = rank_profile_3d(p1, p2)?;

    // The only candidate invariant plane is spanned by the one-dimensional
    // pair: the kernels for rank two, the ranges for rank one.
    let (a, b) = if rank_two {
        (p1.kernel(), p2.kernel())
    } else {
        (p1.range(), p2.range())
    };
    if !a.intersect(b)?.is_zero() {
        return Ok(None);
    }
    let plane = a.sum(b)?;
    if plane.dim() != 2 || section_lines(&plane, p1, p2).is_err() {
        return Ok(None);
    }

    let value = if rank_two {
        p2.kernel().directed_distance(p1.range())?
            * p1.kernel().directed_distance(p2.range())?
            / (p1.kernel().directed_distance(p1.range())?
                * p2.kernel().directed_distance(p2.range())?)
    } else {
        p1.range().directed_distance(p2.kernel())?
            * p2.range().directed_distance(p1.kernel())?
            / (p1.range().directed_distance(p1.kernel())?
                * p2.range().directed_distance(p2.kernel())?)
    };
    Ok(Some(value))
}

/// The non-trivial eigenvalue `λ = 1 − μ` of `P1 P2` in the mixed case:
/// `P1` of rank one and `P2` of rank two on `ℝ³`, where `μ` is the
/// non-trivial eigenvalue of the pair `(P1, I − P2)`; `μ` is read off the
/// invariant plane so that its sign is carried by the cross-ratio.
pub fn mixed_case_eigenvalue<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<T> {
    if p1.ambient_dim() != 3 || p2.ambient_dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: p1.ambient_dim().max(p2.ambient_dim()),
        });
    }
    if p1.rank() != 1 || p2.rank() != 2 {
        return Err(Error::UnsupportedRanks {
            rank1: p1.rank(),
            rank2: p2.rank(),
        });
    }
    let q2 = p2.complement();
    if !p1.range().intersect(q2.range())?.is_zero() {
        return Err(Error::NoNontrivialEigenvalue);
    }
    let plane = p1.range().sum(q2.range())?;
    let mu = invariant_plane_eigenvalue(p1, &q2, &plane)
        .map_err(|_| Error::NoNontrivialEigenvalue)?;
    Ok(T::one() - mu)
}
