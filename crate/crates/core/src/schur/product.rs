use super::element::{Basis, SchurElement};
use super::stats::bracket_scalar;
use crate::error::Result;
use crate::hecke::oracle_product;
use crate::symgroup::CosetMatrix;

/// `φ_B φ_A` from the Hecke oracle, in the `φ` basis.
pub fn phi_product(b: &CosetMatrix, a: &CosetMatrix) -> Result<SchurElement> {
    let map = oracle_product(b, a)?;
    Ok(SchurElement::from_terms(a.m, a.n, a.degree(), Basis::Phi, map))
}

/// `[B][A]` from the Hecke oracle, in the `[ ]` basis.
pub fn bracket_product(b: &CosetMatrix, a: &CosetMatrix) -> Result<SchurElement> {
    let scalar = &bracket_scalar(b) * &bracket_scalar(a);
    Ok(phi_product(b, a)?.scale(&scalar).to_basis(Basis::Bracket))
}

/// Product of two elements through the oracle, in the basis of `x`.
pub fn product(x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
    let xb = x.to_basis(Basis::Bracket);
    let yb = y.to_basis(Basis::Bracket);
    let mut out = SchurElement::zero(x.m, x.n, x.r, Basis::Bracket);
    for (b, cb) in xb.terms() {
        for (a, ca) in yb.terms() {
            if b.co() != a.ro() {
                continue;
            }
            out.add_scaled(&bracket_product(b, a)?, &(cb * ca))?;
        }
    }
    Ok(out.to_basis(x.basis))
}
