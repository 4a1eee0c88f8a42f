//! Oblique projections, products of two projections, their closed-form
//! eigenvalue formulas and the power-iteration engine.

mod iterate;
mod oblique;
mod predict;
mod spectra;

pub use iterate::{iterate_product, iterate_product_default, spectral_radius_numeric, IterationReport, Verdict};
pub use oblique::ObliqueProjection;
pub use predict::predicted_spectral_radius;
pub use spectra::{
    eigen_plane, invariant_plane_eigenvalue, mixed_case_eigenvalue, nontrivial_eigenvalue_3d,
    nonzero_eigenvalue_2d, spectral_radius_formula_2d,
};
