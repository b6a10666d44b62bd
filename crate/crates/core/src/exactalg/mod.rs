//! Exact scalars: Laurent polynomials in `v`, quantum numbers, and
//! specialization at roots of unity.

pub mod field;
pub mod laurent;
pub mod quantum;

pub use field::{CycScalar, CyclotomicField, Field, PrimeField, PrimeFieldScalar};
pub use laurent::{sign, LaurentPoly};
pub use quantum::{
    balanced_factorial, balanced_gauss, balanced_qint, gauss_binom, qfactorial, qint,
    super_poincare,
};
