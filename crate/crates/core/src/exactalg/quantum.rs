//! Quantum integers, factorials and Gaussian binomials, in both the
//! `q`-polynomial form and the bar-invariant balanced form.

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};
use crate::symgroup::Composition;

/// `[[i]] = 1 + q + ... + q^{i-1}`.
pub fn qint(i: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..i as i32).map(|k| (2 * k, 1)))
}

/// `[[i]]! = [[1]][[2]]...[[i]]`.
pub fn qfactorial(i: u32) -> LaurentPoly {
    (1..=i).map(qint).product()
}

/// Gaussian polynomial `[[s over t]]`, computed from factorials by exact
/// division.
pub fn gauss_binom(s: u32, t: u32) -> Result<LaurentPoly> {
    if t > s {
        return Err(Error::Domain(format!("gauss_binom({s}, {t}): t > s")));
    }
    let num: LaurentPoly = (s - t + 1..=s).map(qint).product();
    num.div_exact(&qfactorial(t))
        .ok_or_else(|| Error::InternalInconsistency("Gaussian division left a remainder".into()))
}

/// `[i] = v^{-(i-1)} [[i]]`, symmetric under `v -> v^{-1}`.
pub fn balanced_qint(i: u32) -> LaurentPoly {
    if i == 0 {
        return LaurentPoly::zero();
    }
    qint(i).shift(-(i as i32 - 1))
}

/// `[p]! = [1][2]...[p]`.
pub fn balanced_factorial(p: u32) -> LaurentPoly {
    (1..=p).map(balanced_qint).product()
}

/// `v^{-t(s-t)} [[s over t]]`.
pub fn balanced_gauss(s: u32, t: u32) -> Result<LaurentPoly> {
    let g = gauss_binom(s, t)?;
    Ok(g.shift(-((t * (s - t)) as i32)))
}

/// Length generating function of `W_λ` with `q` on the even parts and
/// `q^{-1}` on the odd parts.
pub fn super_poincare(lambda: &Composition) -> LaurentPoly {
    let even: LaurentPoly = lambda.even_parts().iter().map(|&p| qfactorial(p as u32)).product();
    let odd: LaurentPoly = lambda
        .odd_parts()
        .iter()
        .map(|&p| qfactorial(p as u32).bar())
        .product();
    &even * &odd
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Permutation;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn pascal(s: u32, t: u32) -> LaurentPoly {
        if t == 0 || t == s {
            return LaurentPoly::one();
        }
        &pascal(s - 1, t - 1) + &(&q().pow(t) * &pascal(s - 1, t))
    }

    #[test]
    fn small_values() {
        assert_eq!(gauss_binom(2, 1).unwrap(), &LaurentPoly::one() + &q());
        assert!(gauss_binom(4, 0).unwrap().is_one());
        assert!(gauss_binom(1, 2).is_err());
        let expect = LaurentPoly::from_terms([(0, 1), (2, 1), (4, 2), (6, 1), (8, 1)]);
        assert_eq!(gauss_binom(4, 2).unwrap(), expect);
        assert_eq!(balanced_qint(2), LaurentPoly::from_terms([(-1, 1), (1, 1)]));
        assert!(balanced_qint(1).is_one());
        assert_eq!(balanced_gauss(2, 1).unwrap(), balanced_qint(2));
    }

    #[test]
    fn pascal_recurrence_and_symmetry() {
        for s in 0..=10 {
            for t in 0..=s {
                let g = gauss_binom(s, t).unwrap();
                assert_eq!(g, pascal(s, t));
                assert_eq!(g, gauss_binom(s, s - t).unwrap());
                assert!(g.terms().all(|(e, _)| e % 2 == 0));
                assert!(balanced_gauss(s, t).unwrap().is_bar_invariant());
            }
            assert!(balanced_qint(s).is_bar_invariant());
        }
    }

    #[test]
    fn poincare_matches_enumeration() {
        for r in 0..=6usize {
            for lambda in Composition::all_with_splits(r, 3) {
                let mut brute = LaurentPoly::zero();
                for w in Permutation::all(r) {
                    if !lambda.contains(&w) {
                        continue;
                    }
                    let (even_len, odd_len) = lambda.parity_lengths(&w);
                    brute.add_term(2 * (even_len as i32 - odd_len as i32), 1);
                }
                assert_eq!(super_poincare(&lambda), brute, "{lambda:?}");
            }
        }
    }

    #[test]
    fn poincare_examples() {
        let one_plus_q = &LaurentPoly::one() + &q();
        let one_plus_qinv = one_plus_q.bar();
        assert_eq!(super_poincare(&Composition::new(vec![2], 1)), one_plus_q);
        assert_eq!(super_poincare(&Composition::new(vec![2], 0)), one_plus_qinv);
        assert_eq!(
            super_poincare(&Composition::new(vec![2, 2], 1)),
            &one_plus_q * &one_plus_qinv
        );
    }
}
