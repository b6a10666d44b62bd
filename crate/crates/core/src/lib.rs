//! Exact computations in Hecke algebras and q-Schur superalgebras.
//!
//! Scalars are Laurent polynomials in `v` with `q = v^2`. Permutations
//! compose right to left and act on `{1..r}`.

pub mod dcoset;
pub mod error;
pub mod exactalg;
pub mod hecke;
pub mod schur;
pub mod spectra;
pub mod subalg;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
