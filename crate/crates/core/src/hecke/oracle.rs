use std::collections::BTreeMap;

use super::{phi_generator_image, t_wdw_matrix, HeckeElement};
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symgroup::{jmath, Composition, CosetMatrix};

/// Writes `x ∈ [xy]_λ H ∩ H [xy]_μ` as `Σ_C c_C T_{W d_C W}` over matrices
/// `C` with `ro(C) = λ`, `co(C) = μ`. Each double coset element has
/// coefficient 1 at its shortest element, so the coefficients are read off
/// at shortest support elements, taken in (length, one-line) order.
pub fn peel_double_cosets(
    x: &HeckeElement,
    lambda: &Composition,
    mu: &Composition,
) -> Result<BTreeMap<CosetMatrix, LaurentPoly>> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let w = rest
            .terms()
            .map(|(w, _)| w)
            .min_by(|a, b| (a.length(), *a).cmp(&(b.length(), *b)))
            .unwrap()
            .clone();
        let c = jmath(lambda, &w, mu).map_err(|e| {
            Error::InternalInconsistency(format!("peeling reached {w}, which is not shortest: {e}"))
        })?;
        if !c.is_super_distinguished() {
            return Err(Error::InternalInconsistency(format!(
                "peeling produced {c}, outside M(m|n,r)"
            )));
        }
        let coeff = rest.coeff(&w);
        rest.add_scaled(&*t_wdw_matrix(&c)?, &(-&coeff));
        if !rest.coeff(&w).is_zero() {
            return Err(Error::InternalInconsistency(format!("residual at {w}")));
        }
        out.insert(c, coeff);
    }
    Ok(out)
}

/// Structure constants of `φ_B φ_A` in the `φ` basis, computed in the
/// Hecke algebra: `φ_B(φ_A([xy]_μ)) = T_{W d_B W} T_{d_A} T_{D_A}` is
/// expanded back into double coset elements. Empty when `co(B) ≠ ro(A)`.
pub fn oracle_product(b: &CosetMatrix, a: &CosetMatrix) -> Result<BTreeMap<CosetMatrix, LaurentPoly>> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(b.degree(), a.degree()));
    }
    if b.co() != a.ro() {
        return Ok(BTreeMap::new());
    }
    let x = t_wdw_matrix(b)?.mul(&*phi_generator_image(a)?)?;
    peel_double_cosets(&x, &b.ro(), &a.co())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{enumerate_matrices, MatrixVariant};

    #[test]
    fn identity_and_mismatch() {
        for a in enumerate_matrices(2, 1, 3, MatrixVariant::All) {
            let id = CosetMatrix::diag(&a.ro());
            let prod = oracle_product(&id, &a).unwrap();
            assert_eq!(prod.len(), 1);
            assert!(prod[&a].is_one());
            let id_right = CosetMatrix::diag(&a.co());
            assert!(oracle_product(&a, &id_right).unwrap()[&a].is_one());
            let other = CosetMatrix::diag(&Composition::new(vec![3, 0, 0], 2));
            if other.co() != a.ro() {
                assert!(oracle_product(&other, &a).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn associativity() {
        let basis = enumerate_matrices(1, 1, 2, MatrixVariant::All);
        let mul = |x: &BTreeMap<CosetMatrix, LaurentPoly>, c: &CosetMatrix, left: bool| {
            let mut out: BTreeMap<CosetMatrix, LaurentPoly> = BTreeMap::new();
            for (b, coeff) in x {
                let prod = if left { oracle_product(c, b) } else { oracle_product(b, c) }.unwrap();
                for (d, k) in prod {
                    *out.entry(d).or_default() += &(&k * coeff);
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        };
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let ab = oracle_product(a, b).unwrap();
                    let bc = oracle_product(b, c).unwrap();
                    assert_eq!(mul(&ab, c, false), mul(&bc, a, true), "{a} {b} {c}");
                }
            }
        }
    }
}
