use super::element::{Basis, SchurElement};
use super::stats::a_bar;
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symgroup::{weak_compositions, CosetMatrix};

/// `A(j, r) = Σ_λ (-1)^{bar(A+λ)} v^{λ*j} [A + λ]` over `λ ∈ Λ(m|n, r - |A|)`,
/// where `λ*j = Σ (-1)^î λ_i j_i`. Zero when `|A| > r`.
pub fn element_ajr(aoff: &CosetMatrix, j: &[i64], r: usize) -> Result<SchurElement> {
    let (m, n) = (aoff.m, aoff.n);
    let size = aoff.size();
    if j.len() != size {
        return Err(Error::InvalidParameters(format!(
            "j has length {}, expected {size}",
            j.len()
        )));
    }
    if aoff.diagonal().iter().any(|&x| x != 0) {
        return Err(Error::InvalidParameters(format!("{aoff} has a nonzero diagonal")));
    }
    if !aoff.is_super_distinguished() {
        return Err(Error::InvalidRepresentative(aoff.to_string()));
    }
    let mut out = SchurElement::zero(m, n, r, Basis::Bracket);
    let total = aoff.degree();
    if total > r {
        return Ok(out);
    }
    for lam in weak_compositions(size, r - total) {
        let b = aoff.with_diagonal(&lam);
        let dot: i64 = (1..=size)
            .map(|i| crate::exactalg::sign(aoff.parity(i) as i64) * lam[i - 1] as i64 * j[i - 1])
            .sum();
        out.add_term(b.clone(), &LaurentPoly::signed_power(a_bar(&b) as i64, dot));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{act_generator, GeneratorSpec};
    use crate::symgroup::Composition;

    #[test]
    fn too_large_is_zero() {
        let mut a = CosetMatrix::zero(1, 1);
        a.set(1, 2, 1);
        a.set(2, 1, 1);
        assert!(element_ajr(&a, &[0, 0], 1).unwrap().is_zero());
    }

    #[test]
    fn k_is_a_weight_sum() {
        for r in 0..4 {
            for i in 1..=3 {
                let mut j = vec![0; 3];
                j[i - 1] = 1;
                let k = element_ajr(&CosetMatrix::zero(2, 1), &j, r).unwrap();
                let mut expect = SchurElement::zero(2, 1, r, Basis::Bracket);
                for lam in Composition::all(3, r, 2) {
                    let d = CosetMatrix::diag(&lam);
                    expect.add_scaled(&act_generator(&GeneratorSpec::K(i), &d).unwrap(), &LaurentPoly::one())
                        .unwrap();
                }
                assert_eq!(k, expect);
            }
        }
    }

    #[test]
    fn simple_root_matrix_gives_e_and_f() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            for r in 1..=3 {
                for h in 1..m + n {
                    for (plus, row, col) in [(true, h, h + 1), (false, h + 1, h)] {
                        let mut a = CosetMatrix::zero(m, n);
                        a.set(row, col, 1);
                        let x = element_ajr(&a, &vec![0; m + n], r).unwrap();
                        let g = if plus { GeneratorSpec::e(h) } else { GeneratorSpec::f(h) };
                        let mut expect = SchurElement::zero(m, n, r, Basis::Bracket);
                        for lam in Composition::all(m + n, r, m) {
                            let d = CosetMatrix::diag(&lam);
                            expect.add_scaled(&act_generator(&g, &d).unwrap(), &LaurentPoly::one()).unwrap();
                        }
                        assert_eq!(x, expect, "{m}|{n} r={r} h={h} plus={plus}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_diagonal_and_bad_length() {
        let a = CosetMatrix::diag(&Composition::new(vec![1, 0], 1));
        assert!(element_ajr(&a, &[0, 0], 1).is_err());
        assert!(element_ajr(&CosetMatrix::zero(1, 1), &[0], 1).is_err());
    }
}
