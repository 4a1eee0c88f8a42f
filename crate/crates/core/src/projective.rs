//! The projective line over a two-dimensional coordinate plane: points in
//! homogeneous coordinates and their cross-ratio.

use nalgebra::{DVector, Vector2};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::subspace::Subspace;
use crate::tol;

/// A point of the projective line: a one-dimensional subspace of a
/// coordinate plane, given by homogeneous coordinates `(λ, μ) ≠ (0, 0)`.
#[derive(Debug, Clone, Copy)]
pub struct ProjectivePoint<T: Real> {
    lambda: T,
    mu: T,
}

/// A cross-ratio value: a real number or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal<T: Real> {
    Finite(T),
    Infinity,
}

impl<T: Real> ExtendedReal<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            ExtendedReal::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedReal::Infinity)
    }
}

impl<T: Real> ProjectivePoint<T> {
    pub fn new(lambda: T, mu: T) -> Result<Self> {
        if lambda == T::zero() && mu == T::zero() {
            return Err(Error::ZeroHomogeneousCoordinates);
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn mu(&self) -> T {
        self.mu
    }

    fn magnitude(&self) -> T {
        self.lambda.abs().max(self.mu.abs())
    }

    /// Projective equality: coincidence up to a non-zero scalar factor.
    pub fn coincides_with(&self, other: &Self) -> bool {
        let scale = self.magnitude() * other.magnitude();
        det(*self, *other).abs() <= T::tol(tol::PROJECTIVE_EQ) * scale
    }

    /// The orthogonal direction `(μ, −λ)`.
    pub fn perp(&self) -> Self {
        Self {
            lambda: self.mu,
            mu: -self.lambda,
        }
    }
}

fn det<T: Real>(p: ProjectivePoint<T>, q: ProjectivePoint<T>) -> T {
    p.lambda * q.mu - p.mu * q.lambda
}

/// Cross-ratio `[a1, a2, a3, a4]` of four projective points, via the
/// determinant formula
/// `det(a3, a1) · det(a4, a2) / (det(a3, a2) · det(a4, a1))`.
///
/// The value is `Infinity` when only the denominator vanishes; a vanishing
/// numerator and denominator is reported as indeterminate.
pub fn cross_ratio<T: Real>(
    a1: ProjectivePoint<T>,
    a2: ProjectivePoint<T>,
    a3: ProjectivePoint<T>,
    a4: ProjectivePoint<T>,
) -> Result<ExtendedReal<T>> {
    let numerator = det(a3, a1) * det(a4, a2);
    let denominator = det(a3, a2) * det(a4, a1);
    let scale = a1.magnitude() * a2.magnitude() * a3.magnitude() * a4.magnitude();
    let cutoff = T::tol(tol::CROSS_RATIO_DENOM) * scale;
    match (numerator.abs() <= cutoff, denominator.abs() <= cutoff) {
        (true, true) => Err(Error::IndeterminateCrossRatio),
        (false, true) => Ok(ExtendedReal::Infinity),
        _ => Ok(ExtendedReal::Finite(numerator / denominator)),
    }
}

/// The inner-product form
/// `⟨a1,a3⟩⟨a2,a4⟩ / (⟨a1,a4⟩⟨a2,a3⟩)`
/// over four plane vectors, which equals the cross-ratio
/// `[span a1, span a2, (span a3)⊥, (span a4)⊥]`.
pub fn cross_ratio_from_inner_products<T: Real>(
    a1: &Vector2<T>,
    a2: &Vector2<T>,
    a3: &Vector2<T>,
    a4: &Vector2<T>,
) -> Result<T> {
    let numerator = a1.dot(a3) * a2.dot(a4);
    let denominator = a1.dot(a4) * a2.dot(a3);
    let scale = a1.norm() * a2.norm() * a3.norm() * a4.norm();
    if denominator.abs() <= T::tol(tol::CROSS_RATIO_DENOM) * scale {
        return Err(Error::VanishingDenominator);
    }
    Ok(numerator / denominator)
}

/// Homogeneous coordinates of a line inside a plane, expressed in the
/// plane's stored orthonormal basis.
pub fn plane_coordinates<T: Real>(
    line: &Subspace<T>,
    plane: &Subspace<T>,
) -> Result<ProjectivePoint<T>> {
    if line.ambient_dim() != plane.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: plane.ambient_dim(),
            got: line.ambient_dim(),
        });
    }
    if line.dim() != 1 || plane.dim() != 2 {
        return Err(Error::SectionGeometry(format!(
            "plane coordinates need a line in a plane, got dimensions {} and {}",
            line.dim(),
            plane.dim()
        )));
    }
    let direction: DVector<T> = line.basis_vector(0);
    let coords = plane.basis().transpose() * &direction;
    let reconstruction = plane.basis() * &coords;
    let defect = (&direction - reconstruction).norm();
    if defect > T::tol(tol::GEOMETRY) {
        return Err(Error::LineNotInPlane {
            defect: defect.as_f64(),
        });
    }
    ProjectivePoint::new(coords[0], coords[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p(l: f64, m: f64) -> ProjectivePoint<f64> {
        ProjectivePoint::new(l, m).unwrap()
    }

    fn finite(v: Result<ExtendedReal<f64>>) -> f64 {
        v.unwrap().finite().expect("finite cross-ratio")
    }

    #[test]
    fn zero_coordinates_rejected() {
        assert!(matches!(
            ProjectivePoint::<f64>::new(0.0, 0.0),
            Err(Error::ZeroHomogeneousCoordinates)
        ));
    }

    #[test]
    fn cross_ratio_known_quadruples() {
        // Section lines of the three-dimensional mixed configuration.
        let v = finite(cross_ratio(p(1.0, -1.0), p(1.0, 1.0), p(3.0, -1.0), p(1.0, 0.0)));
        assert_relative_eq!(v, 0.5, epsilon = 1e-14);

        let v = finite(cross_ratio(p(1.0, -1.0), p(1.0, 1.0), p(3.0, -1.0), p(0.0, 1.0)));
        assert_relative_eq!(v, -0.5, epsilon = 1e-14);

        // Harmonic quadruple.
        let v = finite(cross_ratio(p(1.0, 0.0), p(0.0, 1.0), p(1.0, 1.0), p(1.0, -1.0)));
        assert_relative_eq!(v, -1.0, epsilon = 1e-14);
    }

    #[test]
    fn cross_ratio_degenerate_values() {
        // Coincidence in the numerator gives 0, in the denominator ∞.
        let v = cross_ratio(p(1.0, 0.0), p(0.0, 1.0), p(1.0, 0.0), p(1.0, 1.0)).unwrap();
        assert_eq!(v.finite(), Some(0.0));

        let v = cross_ratio(p(1.0, 0.0), p(0.0, 1.0), p(0.0, 1.0), p(1.0, 1.0)).unwrap();
        assert!(v.is_infinite());

        assert!(matches!(
            cross_ratio(p(1.0, 0.0), p(1.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)),
            Err(Error::IndeterminateCrossRatio)
        ));
    }

    #[test]
    fn inner_product_form_vanishing_denominator() {
        let e1 = Vector2::new(1.0, 0.0);
        let e2 = Vector2::new(0.0, 1.0);
        assert!(matches!(
            cross_ratio_from_inner_products(&e1, &e2, &e1, &e2),
            Err(Error::VanishingDenominator)
        ));
    }

    #[test]
    fn inner_product_form_matches_cross_ratio() {
        // A quadruple with orthogonal members lands on the vanishing
        // denominator; a skew one must match the mapped cross-ratio.
        let a1 = Vector2::new(1.0, 0.0);
        let a2 = Vector2::new(1.0, 1.0);
        let a3 = Vector2::new(2.0, 1.0);
        let a4 = Vector2::new(1.0, 2.0);
        let lhs = cross_ratio_from_inner_products(&a1, &a2, &a3, &a4).unwrap();
        let rhs = finite(cross_ratio(
            p(a1.x, a1.y),
            p(a2.x, a2.y),
            p(a3.x, a3.y).perp(),
            p(a4.x, a4.y).perp(),
        ));
        assert_relative_eq!(lhs, rhs, epsilon = 1e-10);
    }

    #[test]
    fn plane_coordinates_cases() {
        use nalgebra::DMatrix;

        let plane = Subspace::span_columns(&DMatrix::from_column_slice(
            3,
            2,
            &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0],
        ))
        .unwrap();
        let e1 = Subspace::span_vectors(&[DVector::from_column_slice(&[1.0, 0.0, 0.0])]).unwrap();
        let q = plane_coordinates(&e1, &plane).unwrap();
        assert!(q.coincides_with(&p(1.0, 0.0)));

        let diag =
            Subspace::span_vectors(&[DVector::from_column_slice(&[1.0, 1.0, 0.0])]).unwrap();
        let q = plane_coordinates(&diag, &plane).unwrap();
        assert!(q.coincides_with(&p(1.0, 1.0)));

        let outside =
            Subspace::span_vectors(&[DVector::from_column_slice(&[0.0, 0.0, 1.0])]).unwrap();
        assert!(plane_coordinates(&outside, &plane).is_err());
    }

    #[test]
    fn cross_ratio_independent_of_plane_basis() {
        use nalgebra::DMatrix;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            // A random plane in ℝ⁴ and four random coplanar lines.
            let plane = Subspace::<f64>::random(4, 2, &mut rng);
            let lines: Vec<Subspace<f64>> = (0..4)
                .map(|_| {
                    let a: f64 = rng.gen_range(-1.0..1.0);
                    let b: f64 = rng.gen_range(-1.0..1.0);
                    let v = plane.basis() * DVector::from_column_slice(&[a, b + 1.5]);
                    Subspace::span_vectors(&[v]).unwrap()
                })
                .collect();

            // Re-express the same plane in a rotated basis.
            let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let rot =
                DMatrix::from_column_slice(2, 2, &[angle.cos(), angle.sin(), -angle.sin(), angle.cos()]);
            let plane2 = Subspace::from_orthonormal_columns(plane.basis() * rot).unwrap();

            let cr = |pl: &Subspace<f64>| {
                let pts: Vec<ProjectivePoint<f64>> = lines
                    .iter()
                    .map(|l| plane_coordinates(l, pl).unwrap())
                    .collect();
                finite(cross_ratio(pts[0], pts[1], pts[2], pts[3]))
            };
            let (v1, v2) = (cr(&plane), cr(&plane2));
            assert!((v1 - v2).abs() <= 1e-9 * (1.0 + v1.abs()), "{v1} vs {v2}");
        }
    }

    /// Strategy for a projective point kept away from scale extremes.
    fn point_strategy() -> impl Strategy<Value = ProjectivePoint<f64>> {
        (-1.0f64..1.0, -1.0f64..1.0)
            .prop_filter("not both near zero", |(l, m)| l.abs() + m.abs() > 1e-2)
            .prop_map(|(l, m)| p(l, m))
    }

    fn distinct(points: &[ProjectivePoint<f64>]) -> bool {
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let scale = points[i].magnitude() * points[j].magnitude();
                if det(points[i], points[j]).abs() <= 1e-3 * scale {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn reversal_identity(
            a in point_strategy(),
            b in point_strategy(),
            c in point_strategy(),
            d in point_strategy(),
        ) {
            prop_assume!(distinct(&[a, b, c, d]));
            let lhs = finite(cross_ratio(a, b, c, d));
            let rhs = finite(cross_ratio(d, c, b, a));
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));
        }

        #[test]
        fn exchange_identity(
            a in point_strategy(),
            b in point_strategy(),
            c in point_strategy(),
            d in point_strategy(),
        ) {
            prop_assume!(distinct(&[a, b, c, d]));
            let swapped = finite(cross_ratio(a, c, b, d));
            let plain = finite(cross_ratio(a, b, c, d));
            prop_assert!((swapped - (1.0 - plain)).abs() <= 1e-10 * (1.0 + plain.abs()));
        }

        #[test]
        fn scale_invariance(
            a in point_strategy(),
            b in point_strategy(),
            c in point_strategy(),
            d in point_strategy(),
            factor in prop_oneof![(-8.0f64..-0.125), (0.125f64..8.0)],
        ) {
            prop_assume!(distinct(&[a, b, c, d]));
            let plain = finite(cross_ratio(a, b, c, d));
            let scaled_point = p(a.lambda() * factor, a.mu() * factor);
            let scaled = finite(cross_ratio(scaled_point, b, c, d));
            prop_assert!((plain - scaled).abs() <= 1e-10 * (1.0 + plain.abs()));
        }

        #[test]
        fn distinct_points_avoid_exceptional_values(
            a in point_strategy(),
            b in point_strategy(),
            c in point_strategy(),
            d in point_strategy(),
        ) {
            prop_assume!(distinct(&[a, b, c, d]));
            let v = cross_ratio(a, b, c, d).unwrap();
            prop_assert!(!v.is_infinite());
            let v = v.finite().unwrap();
            prop_assert!(v.abs() > 1e-9);
            prop_assert!((v - 1.0).abs() > 1e-9);
        }

        #[test]
        fn inner_product_lemma(
            a1 in (-1.0f64..1.0, -1.0f64..1.0),
            a2 in (-1.0f64..1.0, -1.0f64..1.0),
            a3 in (-1.0f64..1.0, -1.0f64..1.0),
            a4 in (-1.0f64..1.0, -1.0f64..1.0),
        ) {
            let vs = [a1, a2, a3, a4].map(|(x, y)| Vector2::new(x, y));
            prop_assume!(vs.iter().all(|v| v.norm() > 1e-2));
            let scale: f64 = vs.iter().map(|v| v.norm()).product();
            let denominator = vs[0].dot(&vs[3]) * vs[1].dot(&vs[2]);
            prop_assume!(denominator.abs() > 1e-3 * scale);
            let spans_distinct = distinct(&[
                p(vs[0].x, vs[0].y),
                p(vs[1].x, vs[1].y),
                p(vs[2].x, vs[2].y).perp(),
                p(vs[3].x, vs[3].y).perp(),
            ]);
            prop_assume!(spans_distinct);

            let lhs = cross_ratio_from_inner_products(&vs[0], &vs[1], &vs[2], &vs[3]).unwrap();
            let rhs = finite(cross_ratio(
                p(vs[0].x, vs[0].y),
                p(vs[1].x, vs[1].y),
                p(vs[2].x, vs[2].y).perp(),
                p(vs[3].x, vs[3].y).perp(),
            ));
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));
        }
    }
}
