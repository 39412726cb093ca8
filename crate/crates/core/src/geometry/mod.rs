//! Exact rational geometry on the moment curve, used as an independent check
//! of the combinatorial predicates.

mod fourier_motzkin;
mod linalg;
pub(crate) mod predicates;

pub use fourier_motzkin::{Affine, Inequality, LinearSystem};
pub use linalg::{determinant, kernel_basis, power, rat, sign, Rational};
pub use predicates::{
    geometric_classify, geometric_classify_with_witness, geometric_overlap, height_witness,
    moment_point, orientation, orientation_by_determinant, simplex_volume,
    simplex_volume_by_determinant, vandermonde, visible_facets, HeightWitness, MomentPoint,
};
