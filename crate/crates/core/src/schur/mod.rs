//! The q-Schur superalgebra `S(m|n, r)`: the `φ_A` and `[A]` bases, matrix
//! statistics, closed multiplication formulas, generators and their
//! regular representation.

mod ajr;
mod checks;
mod element;
mod formulas;
mod generators;
mod product;
mod stats;
mod triangular;

pub use ajr::element_ajr;
pub use checks::{
    classical_coefficients_check, ef_commutator_check, sign_comparison, SignComparison,
};
pub use element::{Basis, SchurElement};
pub use formulas::{d_minus, d_plus, mul_bracket_simple, mul_phi_simple};
pub use generators::{
    act_generator, act_on, act_word, divided_power_from_products, regular_rep_matrix,
    GeneratorSpec, RegularRepMatrix,
};
pub use product::{bracket_product, phi_product, product};
pub use stats::{
    a_bar, a_hat, bracket_scalar, d_stat, epsilon, f_minus, f_minus_q, f_plus, f_plus_q,
    matrix_stats, parity_scalars, MatrixStats, ParityScalars,
};
pub use triangular::{
    check_triangular, hook_le, strictly_lower, triangular_product, triangular_word, TriangularCheck,
};
