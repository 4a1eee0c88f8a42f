//! Best-effort closed-form prediction of the spectral radius of `P1 P2`,
//! combining the 2D and 3D formulas across common coordinate blocks.

use nalgebra::DMatrix;

use crate::error::Result;
use crate::projections::{
    mixed_case_eigenvalue, nontrivial_eigenvalue_3d, nonzero_eigenvalue_2d, ObliqueProjection,
};
use crate::scalar::Real;
use crate::tol;

/// Predicts `ρ(P1 P2)` from the closed-form eigenvalue formulas alone.
///
/// The pair is split along the finest common block-diagonal structure of
/// both matrices; blocks of dimension up to three are handled by the 2D
/// cross-ratio, the 3D directed-distance ratios and the mixed-case
/// formula, and the block radii combine by maximum since the spectrum of a
/// direct-sum product is the union of the block spectra. `None` means some
/// block falls outside the scope of the formulas.
pub fn predicted_spectral_radius<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
) -> Result<Option<T>> {
    let n = p1.ambient_dim();
    if p2.ambient_dim() != n {
        return Err(crate::error::Error::DimensionMismatch {
            expected: n,
            got: p2.ambient_dim(),
        });
    }
    let blocks = common_blocks(p1.matrix(), p2.matrix());
    let mut radius = T::zero();
    for block in blocks {
        match block_radius(p1, p2, &block)? {
            Some(r) => radius = radius.max(r),
            None => return Ok(None),
        }
    }
    Ok(Some(radius))
}

/// Finest partition of the coordinates into blocks on which both matrices
/// act independently.
fn common_blocks<T: Real>(m1: &DMatrix<T>, m2: &DMatrix<T>) -> Vec<Vec<usize>> {
    let n = m1.nrows();
    let scale = T::one() + m1.amax().max(m2.amax());
    let threshold = T::tol(1e-12) * scale;

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let coupled = m1[(i, j)].abs() > threshold
                || m1[(j, i)].abs() > threshold
                || m2[(i, j)].abs() > threshold
                || m2[(j, i)].abs() > threshold;
            if coupled {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_of_block: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        match root_of_block[root] {
            Some(b) => blocks[b].push(i),
            None => {
                root_of_block[root] = Some(blocks.len());
                blocks.push(vec![i]);
            }
        }
    }
    blocks
}

fn restrict<T: Real>(m: &DMatrix<T>, block: &[usize]) -> DMatrix<T> {
    DMatrix::from_fn(block.len(), block.len(), |i, j| m[(block[i], block[j])])
}

fn block_radius<T: Real>(
    p1: &ObliqueProjection<T>,
    p2: &ObliqueProjection<T>,
    block: &[usize],
) -> Result<Option<T>> {
    let d = block.len();
    if d > 3 {
        return Ok(None);
    }
    // A diagonal block of an idempotent block-diagonal matrix is idempotent.
    let geometry = T::tol(tol::GEOMETRY);
    let Ok(q1) = ObliqueProjection::from_matrix(restrict(p1.matrix(), block), geometry) else {
        return Ok(None);
    };
    let Ok(q2) = ObliqueProjection::from_matrix(restrict(p2.matrix(), block), geometry) else {
        return Ok(None);
    };

    // Trivial factors first: zero or identity blocks.
    if q1.rank() == 0 || q2.rank() == 0 {
        return Ok(Some(T::zero()));
    }
    if q1.rank() == d {
        return Ok(Some(if q2.rank() > 0 { T::one() } else { T::zero() }));
    }
    if q2.rank() == d {
        return Ok(Some(T::one()));
    }

    match d {
        1 => unreachable!("rank 0 and rank 1 blocks are trivial"),
        2 => Ok(Some(nonzero_eigenvalue_2d(&q1, &q2)?.abs())),
        _ => three_dimensional_radius(&q1, &q2),
    }
}

fn three_dimensional_radius<T: Real>(
    q1: &ObliqueProjection<T>,
    q2: &ObliqueProjection<T>,
) -> Result<Option<T>> {
    let one = T::one();
    let coincide = T::tol(tol::GEOMETRY);
    match (q1.rank(), q2.rank()) {
        (2, 2) => {
            // The intersection of the ranges is at least a line, so 1 is
            // always in the spectrum.
            let radius = match nontrivial_eigenvalue_3d(q1, q2)? {
                Some(v) => one.max(v),
                None => one,
            };
            Ok(Some(radius))
        }
        (1, 1) => {
            if let Some(v) = nontrivial_eigenvalue_3d(q1, q2)? {
                return Ok(Some(v));
            }
            // Shared range: the product fixes it.
            if q1.range().coincides_with(q2.range(), coincide) {
                return Ok(Some(one));
            }
            // A range feeding a kernel makes the product nilpotent.
            if q1.kernel().contains_subspace(q2.range(), coincide)
                || q2.kernel().contains_subspace(q1.range(), coincide)
            {
                return Ok(Some(T::zero()));
            }
            Ok(None)
        }
        (1, 2) => Ok(mixed_case_eigenvalue(q1, q2).ok().map(|l| l.abs())),
        (2, 1) => {
            // ρ(AB) = ρ(BA): reduce to the (1, 2) profile.
            Ok(mixed_case_eigenvalue(q2, q1).ok().map(|l| l.abs()))
        }
        _ => Ok(None),
    }
}
