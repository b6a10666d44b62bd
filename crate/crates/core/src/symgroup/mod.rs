//! Symmetric groups, compositions, parabolic subgroups and the matrices
//! labelling double cosets.

pub mod composition;
pub mod cosets;
pub mod matrix;
pub mod permutation;

pub use composition::{weak_compositions, Composition};
pub use cosets::{
    is_increasing_on_blocks, is_min_double_coset_rep, is_min_left_coset_rep, jmath, jmath_inv,
    min_double_coset_reps,
};
pub use matrix::{enumerate_matrices, CosetMatrix, MatrixVariant};
pub use permutation::{length_and_reduced_word, Permutation, DEFAULT_GUARD};
