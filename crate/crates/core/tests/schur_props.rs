use proptest::prelude::*;
use qschur::exactalg::LaurentPoly;
use qschur::schur::{act_generator, act_on, regular_rep_matrix, Basis, GeneratorSpec, SchurElement};
use qschur::symgroup::{enumerate_matrices, Composition, MatrixVariant};

const SHAPES: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 0)];

fn generator(m: usize, n: usize, pick: usize, h: usize, p: usize) -> GeneratorSpec {
    let h = 1 + h % (m + n - 1);
    let p = if h == m { 1 } else { 1 + p % 2 };
    match pick % 3 {
        0 => GeneratorSpec::E { h, p },
        1 => GeneratorSpec::F { h, p },
        _ => GeneratorSpec::K(1 + h % (m + n)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The product of two generator matrices acts on `[A]` as the composite action.
    #[test]
    fn regular_rep_is_multiplicative(
        shape in 0usize..4, r in 1usize..=3, picks in (0usize..3, 0usize..3), hs in (0usize..3, 0usize..3),
        ps in (0usize..2, 0usize..2), idx in 0usize..1000,
    ) {
        let (m, n) = SHAPES[shape];
        let g1 = generator(m, n, picks.0, hs.0, ps.0);
        let g2 = generator(m, n, picks.1, hs.1, ps.1);
        let m1 = regular_rep_matrix(&g1, m, n, r).unwrap();
        let m2 = regular_rep_matrix(&g2, m, n, r).unwrap();
        let j = idx % m1.dim();
        let composite = act_on(&g1, &act_generator(&g2, &m1.basis[j]).unwrap()).unwrap();
        prop_assert_eq!(m1.mul(&m2).column(j), composite);
    }

    /// `Σ_λ 1_λ` fixes every basis element.
    #[test]
    fn idempotents_sum_to_identity(shape in 0usize..4, r in 0usize..=4, idx in 0usize..1000) {
        let (m, n) = SHAPES[shape];
        let basis = enumerate_matrices(m, n, r, MatrixVariant::All);
        let a = &basis[idx % basis.len()];
        let x = SchurElement::basis_element(a, Basis::Bracket);
        let mut sum = SchurElement::zero(m, n, r, Basis::Bracket);
        for lam in Composition::all(m + n, r, m) {
            sum.add_scaled(&act_on(&GeneratorSpec::One(lam), &x).unwrap(), &LaurentPoly::one()).unwrap();
        }
        prop_assert_eq!(sum, x);
    }
}

#[test]
fn swapping_parities_preserves_dimension() {
    for m in 0..=2 {
        for n in 0..=2 {
            for r in 0..=5 {
                let a = enumerate_matrices(m, n, r, MatrixVariant::All).len();
                let b = enumerate_matrices(n, m, r, MatrixVariant::All).len();
                assert_eq!(a, b, "({m}|{n},{r})");
            }
        }
    }
}
