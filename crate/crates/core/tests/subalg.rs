use qschur::exactalg::{CyclotomicField, Field};
use qschur::schur::{act_generator, act_word, GeneratorSpec};
use qschur::spectra::{predict_semisimple, SpecParams, Variant, DEFAULT_GUARD};
use qschur::subalg::{
    closure_check, default_field, expand_xi_bar, outside_restricted, subalgebra_basis, subalgebra_certificate, Kind,
};
use qschur::symgroup::CosetMatrix;

const SHAPES: [(usize, usize); 9] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];

/// Little configurations whose ξ̄ span is not closed: `l = 2` with three
/// indices and `r > l`, and the odd-generator sign at `(1|2, 4)`, `l = 3`.
fn little_not_closed(m: usize, n: usize, r: usize, l: u32) -> bool {
    (m + n == 3 && l == 2 && r > 2) || ((m, n, r, l) == (1, 2, 4, 3))
}

#[test]
fn closure_sweep() {
    for (m, n) in SHAPES {
        for r in 1..=4 {
            for l in [2, 3] {
                for kind in [Kind::Infinitesimal, Kind::Little] {
                    let b = subalgebra_basis(kind, m, n, r, l).unwrap();
                    let rep = closure_check(&b, &default_field(l).unwrap(), false, DEFAULT_GUARD).unwrap();
                    let expected = !(kind == Kind::Little && little_not_closed(m, n, r, l));
                    assert_eq!(rep.closed, expected, "{rep:?}");
                    if expected {
                        assert_eq!(rep.generated_dim, rep.dimension);
                    }
                }
            }
        }
    }
}

#[test]
fn exhaustive_products_agree() {
    for (m, n, r, l) in [(1, 1, 3, 2), (2, 1, 3, 2), (1, 1, 3, 3), (2, 1, 3, 3)] {
        for kind in [Kind::Infinitesimal, Kind::Little] {
            let b = subalgebra_basis(kind, m, n, r, l).unwrap();
            let rep = closure_check(&b, &default_field(l).unwrap(), true, DEFAULT_GUARD).unwrap();
            assert_eq!(rep.exhaustive, Some(rep.closed), "{rep:?}");
        }
    }
}

/// `E_2 F_2 1̄_x - F_2 E_2 1̄_x = Σ_{μ ≡ x} [μ_2 - μ_3]_v 1_μ` must be a
/// multiple of `1̄_x` inside `u`; at `l = 2` the coefficients differ in sign.
#[test]
fn little_cartan_part_obstruction() {
    let f = CyclotomicField::new(2).unwrap();
    let one_bar = expand_xi_bar(&CosetMatrix::new(3, 0, vec![vec![0; 3], vec![0, 1, 0], vec![0; 3]]).unwrap(), 3, 2).unwrap();
    let ef = act_word(&[GeneratorSpec::e(2), GeneratorSpec::f(2)], &one_bar).unwrap();
    let fe = act_word(&[GeneratorSpec::f(2), GeneratorSpec::e(2)], &one_bar).unwrap();
    let k = ef.sub(&fe).unwrap();
    assert!(k.support().all(CosetMatrix::is_diagonal));
    let coeffs: Vec<_> = k.terms().map(|(_, c)| f.specialize(c)).collect();
    assert_eq!(coeffs.len(), 3);
    assert!(coeffs.iter().any(|c| *c != coeffs[0]));
}

/// With `v` of order `2l` the same obstruction appears at `l = 3`; `v` of
/// order `l` removes it.
#[test]
fn odd_l_needs_v_of_order_l() {
    let b = subalgebra_basis(Kind::Little, 2, 1, 4, 3).unwrap();
    assert!(!closure_check(&b, &CyclotomicField::new(3).unwrap(), false, DEFAULT_GUARD).unwrap().closed);
    assert!(closure_check(&b, &CyclotomicField::with_v_order(3, 3).unwrap(), false, DEFAULT_GUARD).unwrap().closed);
}

#[test]
fn small_r_is_everything() {
    for (m, n) in [(1, 1), (2, 1)] {
        let full = qschur::symgroup::enumerate_matrices(m, n, 2, qschur::symgroup::MatrixVariant::All).len();
        for kind in [Kind::Infinitesimal, Kind::Little] {
            assert_eq!(subalgebra_basis(kind, m, n, 2, 3).unwrap().dim(), full);
        }
    }
}

#[test]
fn little_no_larger_than_infinitesimal() {
    for (m, n) in SHAPES {
        for r in 0..=5 {
            for l in [2, 3] {
                let s = subalgebra_basis(Kind::Infinitesimal, m, n, r, l).unwrap();
                let u = subalgebra_basis(Kind::Little, m, n, r, l).unwrap();
                assert!(u.dim() <= s.dim(), "({m}|{n},{r}) l={l}");
            }
        }
    }
}

#[test]
fn generators_preserve_restricted_support() {
    for (m, n) in SHAPES {
        for r in 1..=4 {
            for l in [2u32, 3] {
                let b = subalgebra_basis(Kind::Infinitesimal, m, n, r, l).unwrap();
                for a in &b.items {
                    for h in 1..m + n {
                        for g in [GeneratorSpec::e(h), GeneratorSpec::f(h)] {
                            let x = act_generator(&g, a).unwrap();
                            assert!(outside_restricted(&x, l).is_empty(), "{g} on {a}, l = {l}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn xi_bar_is_homogeneous() {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        for r in 1..=4 {
            let u = subalgebra_basis(Kind::Little, m, n, r, 2).unwrap();
            for x in u.elements().unwrap() {
                let parities: std::collections::BTreeSet<usize> = x.support().map(|a| a.super_parity()).collect();
                assert!(parities.len() <= 1);
            }
        }
    }
}

#[test]
fn semisimplicity_matches_prediction() {
    for r in 1..=4 {
        for l in [2u32, 3] {
            let predicted =
                predict_semisimple(Variant::InfinitesimalLittle, SpecParams { m: 1, n: 1, r, l: Some(l), p: 0 }).unwrap();
            for kind in [Kind::Infinitesimal, Kind::Little] {
                let b = subalgebra_basis(kind, 1, 1, r, l).unwrap();
                let cert = subalgebra_certificate(&b, &default_field(l).unwrap(), DEFAULT_GUARD).unwrap();
                assert_eq!(cert.semisimple, predicted, "{kind} r = {r} l = {l}");
            }
        }
    }
}
