use qschur::exactalg::{balanced_factorial, LaurentPoly};
use qschur::schur::{
    act_generator, bracket_product, d_minus, d_plus, divided_power_from_products,
    mul_bracket_simple, mul_phi_simple, phi_product, Basis, GeneratorSpec,
};
use qschur::symgroup::{enumerate_matrices, CosetMatrix, MatrixVariant};
use qschur::Error;

const CONFIGS: [(usize, usize); 5] = [(1, 1), (2, 1), (1, 2), (2, 0), (0, 2)];

fn generator_matrix(a: &CosetMatrix, h: usize, p: usize, plus: bool) -> Option<CosetMatrix> {
    let lam = a.ro();
    let d = if plus { d_plus(&lam, h, p) } else { d_minus(&lam, h, p) };
    match d {
        Ok(d) => Some(d),
        Err(Error::InvalidWeight(_)) => None,
        Err(e) => panic!("{e:?}"),
    }
}

#[test]
fn simple_products_match_oracle() {
    for (m, n) in CONFIGS {
        for r in 0..=4 {
            for a in enumerate_matrices(m, n, r, MatrixVariant::All) {
                for h in 1..m + n {
                    for plus in [true, false] {
                        let formula = mul_phi_simple(plus, h, &a).unwrap();
                        match generator_matrix(&a, h, 1, plus) {
                            Some(d) => {
                                let oracle = phi_product(&d, &a).unwrap();
                                assert_eq!(formula, oracle, "A={a} h={h} plus={plus}");
                                let bracket = mul_bracket_simple(plus, h, &a).unwrap();
                                assert_eq!(bracket, bracket_product(&d, &a).unwrap(), "A={a} h={h} plus={plus}");
                                assert_eq!(bracket.len(), formula.len());
                                assert_eq!(bracket.to_basis(Basis::Phi).len(), formula.len());
                            }
                            None => assert!(formula.is_zero()),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn divided_powers_match_oracle() {
    for (m, n) in CONFIGS {
        for r in 0..=4 {
            for a in enumerate_matrices(m, n, r, MatrixVariant::All) {
                for h in (1..m + n).filter(|&h| h != m) {
                    for p in 1..=3 {
                        for plus in [true, false] {
                            let g = if plus { GeneratorSpec::E { h, p } } else { GeneratorSpec::F { h, p } };
                            let formula = act_generator(&g, &a).unwrap();
                            match generator_matrix(&a, h, p, plus) {
                                Some(d) => {
                                    let oracle = bracket_product(&d, &a).unwrap();
                                    assert_eq!(formula, oracle, "{g} A={a}");
                                }
                                None => assert!(formula.is_zero(), "{g} A={a}"),
                            }
                            let chained = divided_power_from_products(plus, h, p, &a).unwrap();
                            assert_eq!(formula, chained, "{g} A={a}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn balanced_factorial_divides_chained_products() {
    let fact = balanced_factorial(3);
    assert!(fact.is_bar_invariant());
    assert_eq!(fact, LaurentPoly::from_terms([(-3, 1), (-1, 2), (1, 2), (3, 1)]));
}
