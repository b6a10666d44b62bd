use std::collections::BTreeMap;

use serde::Serialize;

use super::algebra::{build_specialized, simple_counts, specialize_element, SimpleCounts, StructureConstants, DEFAULT_GUARD};
use super::linalg::rank;
use crate::error::{Error, Result};
use crate::exactalg::{balanced_qint, qint, CyclotomicField, Field, LaurentPoly};
use crate::schur::{act_on, Basis, GeneratorSpec, SchurElement};
use crate::symgroup::{Composition, CosetMatrix};

fn s11(rows: [[usize; 2]; 2]) -> CosetMatrix {
    CosetMatrix::new(1, 1, rows.iter().map(|r| r.to_vec()).collect()).expect("2x2")
}

/// `1_a = [diag(a, r - a)]`.
fn one(a: usize, r: usize) -> CosetMatrix {
    s11([[a, 0], [0, r - a]])
}

/// `A_a^+`, `A_a^-`, `A_a^±` in `M(1|1, r)`.
fn plus(a: usize, r: usize) -> CosetMatrix {
    s11([[a, 1], [0, r - a - 1]])
}

fn minus(a: usize, r: usize) -> CosetMatrix {
    s11([[a, 0], [1, r - a - 1]])
}

fn both(a: usize, r: usize) -> CosetMatrix {
    s11([[a, 1], [1, r - a - 2]])
}

fn elem(a: &CosetMatrix) -> SchurElement {
    SchurElement::basis_element(a, Basis::Bracket)
}

fn term(a: &CosetMatrix, c: LaurentPoly) -> SchurElement {
    elem(a).scale(&c)
}

/// `v^{-(r-1)} [[x]]_q` and `v^{r-1} [[x]]_{q^{-1}}`.
fn down_coeff(x: usize, r: usize) -> LaurentPoly {
    qint(x as u32).shift(-(r as i32 - 1))
}

fn up_coeff(x: usize, r: usize) -> LaurentPoly {
    qint(x as u32).substitute_power(-1).shift(r as i32 - 1)
}

/// Verification of the module structure of `S(1|1, r)` at `q` a primitive
/// `l`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S11Report {
    pub r: usize,
    pub l: u32,
    pub dimension: usize,
    /// `S 1_a` is spanned by the listed `[A]` with `co(A) = (a, r - a)`.
    pub spans_ok: bool,
    /// The closed-form `e_1`, `f_1` actions on `1_a`, `[A_a^+]`, `[A_{a-1}^-]`, `[A_{a-1}^±]`.
    pub action_formulas_ok: bool,
    /// `e_1 f_1 [A_a^+] = [r]_v [A_a^+]` and `f_1 e_1 [A_{a-1}^-] = [r]_v [A_{a-1}^-]`.
    pub casimir_ok: bool,
    /// `[r]_v` is nonzero at the root.
    pub casimir_nonzero: bool,
    /// For `l ∤ r`: `S 1_a = L(a+1) ⊕ L(a)` for every `a`.
    pub direct_sums: bool,
    pub simples: usize,
    pub simple_dim: usize,
    pub oracle: SimpleCounts,
    pub passed: bool,
}

pub fn s11_structure(r: usize, l: u32) -> Result<S11Report> {
    if r == 0 || l < 2 {
        return Err(Error::InvalidParameters(format!("need r >= 1 and l >= 2, got r = {r}, l = {l}")));
    }
    let field = CyclotomicField::new(l)?;
    let sc = StructureConstants::compute(1, 1, r, DEFAULT_GUARD)?;
    let sp = |x: &SchurElement| specialize_element(&sc, &field, x);
    let (e, f) = (GeneratorSpec::e(1), GeneratorSpec::f(1));

    let mut spans_ok = true;
    for a in 0..=r {
        let mut listed = vec![one(a, r)];
        if a < r {
            listed.push(plus(a, r));
        }
        if a >= 1 {
            listed.push(minus(a - 1, r));
        }
        if a >= 1 && a < r {
            listed.push(both(a - 1, r));
        }
        let mut actual: Vec<CosetMatrix> = sc.basis.iter().filter(|b| b.co().parts == [a, r - a]).cloned().collect();
        listed.sort();
        actual.sort();
        spans_ok &= listed == actual;
    }

    let mut formulas_ok = true;
    let mut check = |lhs: SchurElement, rhs: SchurElement| formulas_ok &= lhs == rhs;
    let zero = SchurElement::zero(1, 1, r, Basis::Bracket);
    check(act_on(&e, &elem(&plus(0, r)))?, zero.clone());
    check(act_on(&f, &elem(&plus(0, r)))?, term(&one(0, r), down_coeff(r, r)));
    check(act_on(&e, &elem(&one(0, r)))?, elem(&plus(0, r)));
    check(act_on(&f, &elem(&one(0, r)))?, zero.clone());
    check(act_on(&f, &elem(&minus(r - 1, r)))?, zero.clone());
    check(act_on(&e, &elem(&minus(r - 1, r)))?, term(&one(r, r), up_coeff(r, r)));
    check(act_on(&e, &elem(&one(r, r)))?, zero.clone());
    check(act_on(&f, &elem(&one(r, r)))?, elem(&minus(r - 1, r)));
    for a in 1..r {
        let lhs = act_on(&f, &elem(&plus(a, r)))?;
        check(act_on(&e, &elem(&plus(a, r)))?, zero.clone());
        check(lhs, term(&one(a, r), down_coeff(r - a, r)).add(&elem(&both(a - 1, r)))?);
        check(act_on(&f, &elem(&minus(a - 1, r)))?, zero.clone());
        check(
            act_on(&e, &elem(&minus(a - 1, r)))?,
            term(&one(a, r), up_coeff(a, r)).sub(&elem(&both(a - 1, r)))?,
        );
        check(act_on(&e, &elem(&both(a - 1, r)))?, term(&plus(a, r), up_coeff(a, r)));
        check(act_on(&e, &elem(&one(a, r)))?, elem(&plus(a, r)));
        check(
            act_on(&f, &elem(&both(a - 1, r)))?,
            term(&minus(a - 1, r), down_coeff(r - a, r).scale(-1)),
        );
        check(act_on(&f, &elem(&one(a, r)))?, elem(&minus(a - 1, r)));
    }

    let kappa = balanced_qint(r as u32);
    let casimir_nonzero = !field.is_zero(&field.specialize(&kappa));
    let mut casimir_ok = true;
    let mut direct_sums = true;
    for a in 0..=r {
        let mut vectors = Vec::new();
        if a < r {
            let u = elem(&plus(a, r));
            let fu = act_on(&f, &u)?;
            casimir_ok &= act_on(&e, &fu)? == u.scale(&kappa);
            vectors.push(sp(&u)?);
            vectors.push(sp(&fu)?);
        }
        if a >= 1 {
            let w = elem(&minus(a - 1, r));
            let ew = act_on(&e, &w)?;
            casimir_ok &= act_on(&f, &ew)? == w.scale(&kappa);
            vectors.push(sp(&w)?);
            vectors.push(sp(&ew)?);
        }
        let block_dim = sc.basis.iter().filter(|b| b.co().parts == [a, r - a]).count();
        direct_sums &= rank(&field, &vectors) == block_dim && vectors.len() == block_dim;
    }

    let (simples, simple_dim) = if casimir_nonzero { (r, 2) } else { (r + 1, 1) };
    let alg = build_specialized(&sc, l, field);
    let oracle = simple_counts(&alg)?;
    let divides = r % l as usize == 0;
    let oracle_ok = if divides {
        oracle.simples == r + 1 && oracle.one_dimensional == r + 1 && oracle.quotient_dim == r + 1
    } else {
        oracle.simples == r && oracle.one_dimensional == 0 && oracle.quotient_dim == 4 * r
    };
    let explicit_ok = if divides {
        !casimir_nonzero
    } else {
        casimir_nonzero && direct_sums
    };
    Ok(S11Report {
        r,
        l,
        dimension: sc.basis.len(),
        spans_ok,
        action_formulas_ok: formulas_ok,
        casimir_ok,
        casimir_nonzero,
        direct_sums,
        simples,
        simple_dim,
        passed: spans_ok && formulas_ok && casimir_ok && explicit_ok && oracle_ok && oracle.simples == simples,
        oracle,
    })
}

/// A highest-weight vector in `S(2|1, r) 1_{(r,0,0)}` killed by every
/// `E_h^{(p)}` at the root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalVector {
    pub r: usize,
    pub l: u32,
    /// The generator word applied to `1_{(r,0,0)}`.
    pub word: Vec<String>,
    pub vector: BTreeMap<String, String>,
    pub nonzero: bool,
    pub annihilated: bool,
}

/// `F_1^{(b+1)} 1_{(r,0,0)}` when `r = al + b` with `b <= l - 2`, and
/// `F_2 F_1^{(l)} 1_{(r,0,0)}` when `l | r + 1`.
pub fn maximal_vector_witness(r: usize, l: u32) -> Result<MaximalVector> {
    let l_us = l as usize;
    if l < 2 || r < l_us {
        return Err(Error::InvalidParameters(format!("need r >= l >= 2, got r = {r}, l = {l}")));
    }
    let word = if (r + 1) % l_us != 0 {
        vec![GeneratorSpec::F { h: 1, p: r % l_us + 1 }]
    } else {
        vec![GeneratorSpec::f(2), GeneratorSpec::F { h: 1, p: l_us }]
    };
    let field = CyclotomicField::new(l)?;
    let start = elem(&CosetMatrix::diag(&Composition::new(vec![r, 0, 0], 2)));
    let v = crate::schur::act_word(&word, &start)?;
    let spec = |x: &SchurElement| x.terms().any(|(_, c)| !field.is_zero(&field.specialize(c)));
    let mut annihilated = !spec(&act_on(&GeneratorSpec::e(2), &v)?);
    for p in 1..=r {
        annihilated &= !spec(&act_on(&GeneratorSpec::E { h: 1, p }, &v)?);
    }
    Ok(MaximalVector {
        r,
        l,
        word: word.iter().map(ToString::to_string).collect(),
        vector: v.to_string_map(),
        nonzero: spec(&v),
        annihilated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_small() {
        let rep = s11_structure(3, 2).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!((rep.simples, rep.simple_dim), (3, 2));
        let rep = s11_structure(2, 2).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!((rep.simples, rep.simple_dim), (3, 1));
    }

    #[test]
    fn witnesses() {
        for (r, l) in [(2, 2), (3, 2), (3, 3)] {
            let w = maximal_vector_witness(r, l).unwrap();
            assert!(w.nonzero && w.annihilated, "{w:?}");
        }
    }
}
