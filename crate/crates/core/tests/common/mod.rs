#![allow(dead_code)]

//! Samplers and oracles shared by the integration suites. Instances near
//! a degenerate configuration are rejected and redrawn.

use nalgebra::DMatrix;
use projang::projections::{mixed_case_eigenvalue, ObliqueProjection};
use projang::subspace::Subspace;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Rejection margin: anything within this distance of a degeneracy is
/// resampled.
pub const DEGENERACY_MARGIN: f64 = 1e-4;

/// Band around 0 and 1 classifying an eigenvalue as trivial.
pub const TRIVIAL_BAND: f64 = 1e-8;

pub fn direction(theta: f64) -> Subspace<f64> {
    Subspace::span_vectors(&[nalgebra::DVector::from_column_slice(&[
        theta.cos(),
        theta.sin(),
    ])])
    .unwrap()
}

/// A rank-one planar pair whose four formula angles stay off coincidence.
pub fn separated_rank1_pair_2d(
    rng: &mut ChaCha8Rng,
) -> (ObliqueProjection<f64>, ObliqueProjection<f64>) {
    loop {
        let t: Vec<f64> = (0..4)
            .map(|_| rng.gen_range(0.0..std::f64::consts::PI))
            .collect();
        let (r1, n1, r2, n2) = (t[0], t[1], t[2], t[3]);
        let sep = |a: f64, b: f64| (a - b).sin().abs();
        if [sep(r1, n1), sep(r2, n2), sep(r1, n2), sep(r2, n1)]
            .iter()
            .all(|s| *s > DEGENERACY_MARGIN)
        {
            let p1 = ObliqueProjection::from_range_and_kernel(direction(r1), direction(n1))
                .unwrap();
            let p2 = ObliqueProjection::from_range_and_kernel(direction(r2), direction(n2))
                .unwrap();
            return (p1, p2);
        }
    }
}

fn sine_between_lines(a: &Subspace<f64>, b: &Subspace<f64>) -> f64 {
    a.principal_angles(b).unwrap().angles()[0].sin()
}

/// Sections of `plane` with the ranges and kernels of the pair; `None`
/// when any section degenerates or two sections come within the margin.
fn separated_sections(
    plane: &Subspace<f64>,
    p1: &ObliqueProjection<f64>,
    p2: &ObliqueProjection<f64>,
) -> Option<Vec<Subspace<f64>>> {
    let mut sections = Vec::with_capacity(4);
    for s in [p1.range(), p2.range(), p1.kernel(), p2.kernel()] {
        let line = plane.intersect(s).unwrap();
        if line.dim() != 1 {
            return None;
        }
        sections.push(line);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if sine_between_lines(&sections[i], &sections[j]) <= DEGENERACY_MARGIN {
                return None;
            }
        }
    }
    Some(sections)
}

/// A same-rank pair on ℝ³ guaranteed to carry one non-trivial eigenvalue
/// at least `DEGENERACY_MARGIN` away from 0 and 1.
pub fn separated_pair_3d(
    rank: usize,
    rng: &mut ChaCha8Rng,
) -> (ObliqueProjection<f64>, ObliqueProjection<f64>) {
    loop {
        let p1 = ObliqueProjection::<f64>::random(3, rank, rng);
        let p2 = ObliqueProjection::<f64>::random(3, rank, rng);
        let (a, b) = if rank == 2 {
            (p1.kernel(), p2.kernel())
        } else {
            (p1.range(), p2.range())
        };
        if sine_between_lines(a, b) <= DEGENERACY_MARGIN {
            continue;
        }
        let plane = a.sum(b).unwrap();
        if plane.dim() != 2 || separated_sections(&plane, &p1, &p2).is_none() {
            continue;
        }
        match projang::projections::nontrivial_eigenvalue_3d(&p1, &p2) {
            Ok(Some(v))
                if v > DEGENERACY_MARGIN && (v - 1.0).abs() > DEGENERACY_MARGIN =>
            {
                return (p1, p2)
            }
            _ => continue,
        }
    }
}

/// A mixed pair (rank one, rank two) on ℝ³ whose swapped companion pair is
/// well separated.
pub fn separated_mixed_pair_3d(
    rng: &mut ChaCha8Rng,
) -> (ObliqueProjection<f64>, ObliqueProjection<f64>) {
    loop {
        let p1 = ObliqueProjection::<f64>::random(3, 1, rng);
        let p2 = ObliqueProjection::<f64>::random(3, 2, rng);
        let companion = p2.complement();
        if sine_between_lines(p1.range(), companion.range()) <= DEGENERACY_MARGIN {
            continue;
        }
        let plane = p1.range().sum(companion.range()).unwrap();
        if plane.dim() != 2 || separated_sections(&plane, &p1, &companion).is_none() {
            continue;
        }
        match mixed_case_eigenvalue(&p1, &p2) {
            Ok(lambda)
                if lambda.abs() > DEGENERACY_MARGIN
                    && (lambda - 1.0).abs() > DEGENERACY_MARGIN =>
            {
                return (p1, p2)
            }
            _ => continue,
        }
    }
}

/// The signed non-trivial eigenvalue of a small matrix: the unique real
/// eigenvalue outside the trivial band, when there is exactly one.
pub fn nontrivial_eigenvalue_oracle(m: &DMatrix<f64>) -> Option<f64> {
    let mut found: Option<f64> = None;
    for e in m.complex_eigenvalues().iter() {
        let dist_zero = (e.re * e.re + e.im * e.im).sqrt();
        let dist_one = ((e.re - 1.0) * (e.re - 1.0) + e.im * e.im).sqrt();
        if dist_zero <= TRIVIAL_BAND || dist_one <= TRIVIAL_BAND {
            continue;
        }
        if e.im.abs() > 1e-7 || found.is_some() {
            return None; // complex pair or not unique
        }
        found = Some(e.re);
    }
    found
}

/// Orthogonal projection onto a subspace.
pub fn orthogonal_projection(s: &Subspace<f64>) -> ObliqueProjection<f64> {
    ObliqueProjection::from_range_and_kernel(s.clone(), s.orthogonal_complement()).unwrap()
}

/// A pair of random subspaces whose Friedrichs cosine stays below 0.95,
/// so alternating orthogonal projections settle quickly.
pub fn well_conditioned_subspace_pair(
    n: usize,
    rng: &mut ChaCha8Rng,
) -> (Subspace<f64>, Subspace<f64>) {
    loop {
        let d1 = 1 + rng.gen_range(0..(n - 1));
        let d2 = 1 + rng.gen_range(0..(n - 1));
        let s1 = Subspace::<f64>::random(n, d1, rng);
        let s2 = Subspace::<f64>::random(n, d2, rng);
        if s1.friedrichs_cosine(&s2).unwrap() <= 0.95 {
            return (s1, s2);
        }
    }
}
