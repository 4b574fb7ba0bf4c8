//! Matrix models for the spherical cases: points of `𝔥⊥`, their invariant
//! coordinates, and the dual representations.

mod case;
pub mod charpoly;
mod coords;
mod hperp;
pub mod kron;
pub mod pfaffian;

pub use case::CaseTag;
pub use charpoly::{charpoly_coeffs, even_wedge_traces};
pub use coords::{git_coords, off_diagonal_blocks, GitCoords};
pub use hperp::{build_hperp, HPerpParams, HPerpPoint};
pub use kron::{kronecker_product, kronecker_sum, kronecker_sum3};
pub use pfaffian::{preserves_form, skew_pfaffian, split_form, symplectic_form, SkewForm};
mod dual;
pub mod sample;

pub use dual::{
    constant_matrices, diagonal_dual_point, dual_coords, dual_rep_matrix, dual_shapes, full_dual_matrix, random_dual_point,
    rational_det, validate_dual,
};
mod fixtures;
pub use fixtures::{gross_prasad_fixture_dictionary, tridiagonal_skew, FixtureDictionary};
