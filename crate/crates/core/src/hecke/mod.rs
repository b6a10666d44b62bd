//! The Hecke algebra of `S_r` in the `T_w` basis, signed parabolic sums,
//! double coset elements, the tensor space and a brute-force product oracle.

mod element;
mod oracle;
mod tensor;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub use element::HeckeElement;
pub use oracle::{oracle_product, peel_double_cosets};
pub use tensor::{phi_apply, phi_generator_image, TensorSpaceVector};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symgroup::{
    is_increasing_on_blocks, jmath, jmath_inv, Composition, CosetMatrix, Permutation,
    DEFAULT_GUARD,
};

/// `(-q)^{-len}`.
fn neg_q_inverse_power(len: usize) -> LaurentPoly {
    LaurentPoly::signed_power(len as i64, -2 * len as i64)
}

fn check_guard(r: usize) -> Result<()> {
    if r > DEFAULT_GUARD {
        return Err(Error::ResourceLimit {
            what: format!("Hecke computation in degree {r}"),
            guard: DEFAULT_GUARD,
        });
    }
    Ok(())
}

/// `Σ_{w ∈ D} T_{w_0} (-q)^{-ℓ(w_1)} T_{w_1}` where `w = w_0 w_1` splits
/// along the even and odd blocks of `eta`.
pub fn signed_sum(set: &[Permutation], eta: &Composition) -> HeckeElement {
    let mut out = HeckeElement::zero(eta.degree());
    for w in set {
        let (_, odd_len) = eta.parity_lengths(w);
        out.add_term(w.clone(), &neg_q_inverse_power(odd_len));
    }
    out
}

fn xy_cache() -> &'static RwLock<HashMap<Composition, Arc<HeckeElement>>> {
    static CACHE: OnceLock<RwLock<HashMap<Composition, Arc<HeckeElement>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `[xy]_λ = x_{λ^{(0)}} y_{λ^{(1)}}`.
pub fn xy_element(lambda: &Composition) -> Result<Arc<HeckeElement>> {
    check_guard(lambda.degree())?;
    if let Some(x) = xy_cache().read().unwrap().get(lambda) {
        return Ok(x.clone());
    }
    let x = Arc::new(signed_sum(&lambda.subgroup_elements(), lambda));
    xy_cache().write().unwrap().insert(lambda.clone(), x.clone());
    Ok(x)
}

/// `[yx]_λ = y_{λ^{(0)}} x_{λ^{(1)}}`.
pub fn yx_element(lambda: &Composition) -> Result<HeckeElement> {
    check_guard(lambda.degree())?;
    let mut out = HeckeElement::zero(lambda.degree());
    for w in lambda.subgroup_elements() {
        let (even_len, _) = lambda.parity_lengths(&w);
        out.add_term(w, &neg_q_inverse_power(even_len));
    }
    Ok(out)
}

/// `D_ν ∩ W_μ`: elements of `W_μ` that are shortest in their coset `W_ν w`.
pub fn right_coset_reps(nu: &Composition, mu: &Composition) -> Vec<Permutation> {
    mu.subgroup_elements()
        .into_iter()
        .filter(|w| is_increasing_on_blocks(nu, &w.inverse()))
        .collect()
}

/// Elements of `W_λ` that are shortest in their coset `w W_ν`.
pub fn left_coset_reps(nu: &Composition, lambda: &Composition) -> Vec<Permutation> {
    lambda
        .subgroup_elements()
        .into_iter()
        .filter(|w| is_increasing_on_blocks(nu, w))
        .collect()
}

fn twdw_cache() -> &'static RwLock<HashMap<CosetMatrix, Arc<HeckeElement>>> {
    static CACHE: OnceLock<RwLock<HashMap<CosetMatrix, Arc<HeckeElement>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `T_{W_λ d W_μ} = [xy]_λ T_d T_{D_ν ∩ W_μ}` for `A = ȷ(λ, d, μ)`, where
/// `ν` is the column reading of `A`.
pub fn t_wdw_matrix(a: &CosetMatrix) -> Result<Arc<HeckeElement>> {
    if !a.is_super_distinguished() {
        return Err(Error::InvalidRepresentative(format!(
            "{a} is not in M({}|{},{})",
            a.m,
            a.n,
            a.degree()
        )));
    }
    check_guard(a.degree())?;
    if let Some(x) = twdw_cache().read().unwrap().get(a) {
        return Ok(x.clone());
    }
    let (lambda, _, _) = jmath_inv(a);
    let xy = xy_element(&lambda)?;
    let x = Arc::new(xy.mul(&*phi_generator_image(a)?)?);
    twdw_cache().write().unwrap().insert(a.clone(), x.clone());
    Ok(x)
}

/// `T_{W_λ d W_μ}` from the triple; `d` must be a shortest representative
/// and the resulting matrix super-distinguished.
pub fn t_wdw(lambda: &Composition, d: &Permutation, mu: &Composition) -> Result<Arc<HeckeElement>> {
    let a = jmath(lambda, d, mu)?;
    t_wdw_matrix(&a)
}

/// The left-handed expression `T_{D'} T_d [xy]_μ`, where `D'` runs over
/// the shortest representatives of `W_λ / W_{ν'}` and `ν'` is the row
/// reading of `A`. Equal to [`t_wdw_matrix`].
pub fn t_wdw_left_form(a: &CosetMatrix) -> Result<HeckeElement> {
    if !a.is_super_distinguished() {
        return Err(Error::InvalidRepresentative(a.to_string()));
    }
    check_guard(a.degree())?;
    let (lambda, d, mu) = jmath_inv(a);
    let nu_prime = Composition::even(a.row_reading());
    let reps = left_coset_reps(&nu_prime, &lambda);
    let td = signed_sum(&reps, &lambda);
    td.mul_basis_right(&d).mul(&*xy_element(&mu)?)
}
