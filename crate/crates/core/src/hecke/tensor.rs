use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::{right_coset_reps, signed_sum, xy_element, HeckeElement};
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symgroup::{jmath_inv, Composition, CosetMatrix};

/// A vector of `⊕_λ [xy]_λ H`. Each block stores `h` with the block's
/// value being `[xy]_λ h`; [`TensorSpaceVector::materialize`] expands it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpaceVector {
    pub r: usize,
    pub blocks: BTreeMap<Composition, HeckeElement>,
}

impl TensorSpaceVector {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            blocks: BTreeMap::new(),
        }
    }

    /// The generator `[xy]_λ` of block `λ`.
    pub fn generator(lambda: &Composition) -> Self {
        let mut v = Self::zero(lambda.degree());
        v.blocks.insert(lambda.clone(), HeckeElement::one(lambda.degree()));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(HeckeElement::is_zero)
    }

    fn add_block(&mut self, lambda: Composition, h: HeckeElement) {
        let entry = self
            .blocks
            .entry(lambda)
            .or_insert_with(|| HeckeElement::zero(self.r));
        entry.add_scaled(&h, &LaurentPoly::one());
    }

    /// Right action `v · h`.
    pub fn mul_right(&self, h: &HeckeElement) -> Result<TensorSpaceVector> {
        let mut out = TensorSpaceVector::zero(self.r);
        for (lam, x) in &self.blocks {
            out.add_block(lam.clone(), x.mul(h)?);
        }
        Ok(out)
    }

    /// Each block as an element of `H`, i.e. `[xy]_λ h`.
    pub fn materialize(&self) -> Result<BTreeMap<Composition, HeckeElement>> {
        let mut out = BTreeMap::new();
        for (lam, h) in &self.blocks {
            let x = xy_element(lam)?.mul(h)?;
            if cfg!(debug_assertions) {
                // left eigen-property of the right ideal [xy]_λ H
                let (even, odd) = lam.generators();
                for k in even {
                    debug_assert_eq!(x.mul_s_left(k), x.scale(&LaurentPoly::q()));
                }
                for k in odd {
                    debug_assert_eq!(x.mul_s_left(k), x.scale(&LaurentPoly::constant(-1)));
                }
            }
            if !x.is_zero() {
                out.insert(lam.clone(), x);
            }
        }
        Ok(out)
    }
}

fn generator_cache() -> &'static RwLock<HashMap<CosetMatrix, Arc<HeckeElement>>> {
    static CACHE: OnceLock<RwLock<HashMap<CosetMatrix, Arc<HeckeElement>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `T_d T_{D_ν ∩ W_μ}`: the image of the generator `[xy]_μ` under `φ_A`
/// is `[xy]_λ` times this element.
pub fn phi_generator_image(a: &CosetMatrix) -> Result<Arc<HeckeElement>> {
    if let Some(x) = generator_cache().read().unwrap().get(a) {
        return Ok(x.clone());
    }
    let (_, d, mu) = jmath_inv(a);
    let nu = Composition::even(a.column_reading());
    let reps = right_coset_reps(&nu, &mu);
    let td = signed_sum(&reps, &mu);
    let x = Arc::new(HeckeElement::basis(d).mul(&td)?);
    generator_cache().write().unwrap().insert(a.clone(), x.clone());
    Ok(x)
}

/// `φ_A`: sends block `co(A)` (value `[xy]_μ h`) to block `ro(A)` with
/// value `T_{W_λ d W_μ} h`, and kills every other block.
pub fn phi_apply(a: &CosetMatrix, v: &TensorSpaceVector) -> Result<TensorSpaceVector> {
    if !a.is_super_distinguished() {
        return Err(Error::InvalidRepresentative(a.to_string()));
    }
    if a.degree() != v.r {
        return Err(Error::DegreeMismatch(a.degree(), v.r));
    }
    let mut out = TensorSpaceVector::zero(v.r);
    if let Some(h) = v.blocks.get(&a.co()) {
        let image = phi_generator_image(a)?.mul(h)?;
        out.add_block(a.ro(), image);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::t_wdw_matrix;
    use crate::symgroup::{enumerate_matrices, MatrixVariant, Permutation};

    #[test]
    fn identity_and_definition() {
        let lam = Composition::new(vec![2, 1], 1);
        let v = TensorSpaceVector::generator(&lam);
        let id = CosetMatrix::diag(&lam);
        assert_eq!(phi_apply(&id, &v).unwrap(), v);
        for a in enumerate_matrices(1, 1, 3, MatrixVariant::All) {
            let v = TensorSpaceVector::generator(&a.co());
            let image = phi_apply(&a, &v).unwrap().materialize().unwrap();
            assert_eq!(image.get(&a.ro()), Some(&*t_wdw_matrix(&a).unwrap()));
            let other = Composition::new(vec![a.co().parts[1], a.co().parts[0]], 1);
            if other != a.co() {
                assert!(phi_apply(&a, &TensorSpaceVector::generator(&other)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn right_linearity() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            for r in 1..=4 {
                for a in enumerate_matrices(m, n, r, MatrixVariant::All) {
                    let v = TensorSpaceVector::generator(&a.co());
                    for k in 1..r {
                        let ts = HeckeElement::basis(Permutation::s(k, r));
                        let lhs = phi_apply(&a, &v.mul_right(&ts).unwrap()).unwrap();
                        let rhs = phi_apply(&a, &v).unwrap().mul_right(&ts).unwrap();
                        assert_eq!(lhs.materialize().unwrap(), rhs.materialize().unwrap());
                    }
                }
            }
        }
    }
}
