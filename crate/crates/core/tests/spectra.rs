use qschur::exactalg::CyclotomicField;
use qschur::spectra::{
    build_specialized, maximal_vector_witness, predict_semisimple, s11_structure, semisimple_oracle,
    weyl_irreducible_sl2, weyl_semisimple_sl2, SpecParams, StructureConstants, Variant, DEFAULT_GUARD,
};

#[test]
fn oracle_agrees_with_prediction() {
    let shapes = [(1, 1), (2, 1), (1, 2), (1, 0), (2, 0), (3, 0)];
    for (m, n) in shapes {
        for r in 1..=4 {
            let sc = StructureConstants::compute(m, n, r, DEFAULT_GUARD).unwrap();
            for l in [2u32, 3, 4] {
                let alg = build_specialized(&sc, l, CyclotomicField::new(l).unwrap());
                assert!(alg.unit_is_identity());
                let cert = semisimple_oracle(&alg).unwrap();
                let variant = if n == 0 { Variant::Classical } else { Variant::Super };
                let predicted = predict_semisimple(variant, SpecParams { m, n, r, l: Some(l), p: 0 }).unwrap();
                assert_eq!(cert.semisimple, predicted, "({m}|{n},{r}) l={l}");
                if cert.semisimple {
                    assert_eq!(cert.rank, cert.dim);
                    assert!(cert.radical_vector.is_none());
                } else {
                    assert!(cert.rank < cert.dim);
                    assert_eq!(cert.radical_nilpotent, Some(true), "({m}|{n},{r}) l={l}");
                }
            }
        }
    }
}

#[test]
fn s11_profiles() {
    for r in 1..=6 {
        for l in [2u32, 3] {
            let rep = s11_structure(r, l).unwrap();
            assert!(rep.passed, "{rep:?}");
            let expected = if r % l as usize == 0 { (r + 1, 1) } else { (r, 2) };
            assert_eq!((rep.simples, rep.simple_dim), expected);
        }
    }
}

#[test]
fn maximal_vectors_exist() {
    for (r, l) in [(2, 2), (3, 2), (3, 3), (4, 2), (5, 3)] {
        let w = maximal_vector_witness(r, l).unwrap();
        assert!(w.nonzero && w.annihilated, "{w:?}");
    }
}

/// At `l = 2` and odd `r`, the binomial test on every Weyl module
/// reproduces the classical criterion for `S(2, r)`.
#[test]
fn weyl_modules_reproduce_criterion() {
    for p in [0u64, 3, 5, 7] {
        for r in (1..=20).filter(|r| r % 2 == 1) {
            let predicted = predict_semisimple(Variant::Classical, SpecParams { m: 2, n: 0, r, l: Some(2), p }).unwrap();
            assert_eq!(weyl_semisimple_sl2(r, 2, p).unwrap(), predicted, "r={r} p={p}");
        }
    }
    for r in 0..=20 {
        for lambda2 in 0..=r / 2 {
            // Even highest-weight differences always contain a vanishing [2]_v factor.
            if (r - 2 * lambda2) % 2 == 0 && r - 2 * lambda2 >= 2 {
                assert!(!weyl_irreducible_sl2(r - lambda2, lambda2, 2, 0).unwrap());
            }
        }
    }
}
