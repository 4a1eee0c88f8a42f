//! Cross-module properties that tie the Oppenheim machinery to the
//! spectral quantities, plus a check that the single-precision
//! instantiation stays usable.

mod common;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projang::oppenheim::{consistency_family, oppenheim_cos_given, NormSpec};
use projang::projections::{
    nonzero_eigenvalue_2d, spectral_radius_formula_2d, spectral_radius_numeric,
    ObliqueProjection,
};
use projang::projective::{cross_ratio, ProjectivePoint};
use projang::subspace::Subspace;

use common::separated_rank1_pair_2d;

#[test]
fn zero_candidate_cosine_dominates_the_spectral_radius() {
    // With trivial range intersection the zero map is admissible, and
    // cos_{0}∠(P1, P2) = max(‖P1P2‖, ‖P2P1‖) ≥ ρ(P1P2).
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let mut done = 0;
    while done < 100 {
        let (p1, p2) = separated_rank1_pair_2d(&mut rng);
        let family = match consistency_family(&p1, &p2) {
            Ok(f) => f,
            Err(_) => continue, // shared range: no admissible candidate
        };
        if !family.intersection().is_zero() {
            continue;
        }
        let zero = DMatrix::<f64>::zeros(2, 2);
        let cos = oppenheim_cos_given(&p1, &p2, &zero, NormSpec::Euclidean).unwrap();
        let rho = spectral_radius_numeric(&(p1.matrix() * p2.matrix()));
        assert!(cos >= rho - 1e-8, "cos {cos} < rho {rho}");
        done += 1;
    }
}

#[test]
fn friedrichs_number_governs_orthogonal_rank_one_products() {
    // For orthogonal projections onto distinct lines, all three readings
    // agree: ρ via the sine formula, the cross-ratio eigenvalue, and the
    // squared Friedrichs cosine.
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    for _ in 0..100 {
        let theta: f64 = rng.gen_range(0.05..std::f64::consts::FRAC_PI_2 - 0.05);
        let l1 = Subspace::<f64>::random(2, 1, &mut rng);
        let rotation = DMatrix::from_row_slice(
            2,
            2,
            &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()],
        );
        let l2 = Subspace::span_columns(&(rotation * l1.basis())).unwrap();
        let p1 = ObliqueProjection::from_range_and_kernel(l1.clone(), l1.orthogonal_complement())
            .unwrap();
        let p2 = ObliqueProjection::from_range_and_kernel(l2.clone(), l2.orthogonal_complement())
            .unwrap();

        let c = l1.friedrichs_cosine(&l2).unwrap();
        let rho = spectral_radius_formula_2d(&p1, &p2).unwrap();
        let lambda = nonzero_eigenvalue_2d(&p1, &p2).unwrap();
        assert!((rho - c * c).abs() <= 1e-9);
        assert!((lambda - c * c).abs() <= 1e-9);
    }
}

#[test]
fn single_precision_instantiation_stays_coherent() {
    // The f32 tower runs the same code paths with epsilon-scaled
    // tolerances; results agree with f64 at single precision.
    let l1 = Subspace::<f32>::span_vectors(&[DVector::from_column_slice(&[1.0f32, 0.0])])
        .unwrap();
    let l2 = Subspace::<f32>::span_vectors(&[DVector::from_column_slice(&[1.0f32, 1.0])])
        .unwrap();
    let angle = l1.principal_angles(&l2).unwrap().angles()[0];
    assert!((angle - std::f32::consts::FRAC_PI_4).abs() < 1e-6);

    let p1 = ObliqueProjection::from_range_and_kernel(l1.clone(), l1.orthogonal_complement())
        .unwrap();
    let p2 = ObliqueProjection::from_range_and_kernel(l2.clone(), l2.orthogonal_complement())
        .unwrap();
    let rho32 = spectral_radius_formula_2d(&p1, &p2).unwrap();
    assert!((rho32 - 0.5).abs() < 1e-5, "rho {rho32}");

    let cr = cross_ratio(
        ProjectivePoint::new(1.0f32, -1.0).unwrap(),
        ProjectivePoint::new(1.0f32, 1.0).unwrap(),
        ProjectivePoint::new(3.0f32, -1.0).unwrap(),
        ProjectivePoint::new(1.0f32, 0.0).unwrap(),
    )
    .unwrap()
    .finite()
    .unwrap();
    assert!((cr - 0.5).abs() < 1e-6);

    // The crate-root aliases name the same types.
    let _alias: projang::Subspace32 = l1;
    let _alias: projang::Projection32 = p1;
}
