use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{sign, LaurentPoly};
use crate::symgroup::CosetMatrix;

/// `(q̇_h, q̈_h, v_h)` for an index `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityScalars {
    pub q_dot: LaurentPoly,
    pub q_ddot: LaurentPoly,
    pub v_h: LaurentPoly,
}

/// `(1, q, v)` for `h <= m` and `(-q^{-1}, -1, v^{-1})` for `h > m`.
pub fn parity_scalars(h: usize, m: usize, n: usize) -> Result<ParityScalars> {
    if h == 0 || h > m + n {
        return Err(Error::IndexOutOfRange(format!("h = {h} for m + n = {}", m + n)));
    }
    Ok(if h <= m {
        ParityScalars {
            q_dot: LaurentPoly::one(),
            q_ddot: LaurentPoly::q(),
            v_h: LaurentPoly::v(),
        }
    } else {
        ParityScalars {
            q_dot: LaurentPoly::monomial(-1, -2),
            q_ddot: LaurentPoly::constant(-1),
            v_h: LaurentPoly::monomial(1, -1),
        }
    })
}

/// Exponent `±1` with `v_h = v^{±1}`.
pub(crate) fn v_exp(h: usize, m: usize) -> i32 {
    if h <= m {
        1
    } else {
        -1
    }
}

/// `q̇_h^e`.
pub(crate) fn q_dot_pow(h: usize, m: usize, e: usize) -> LaurentPoly {
    if h <= m {
        LaurentPoly::one()
    } else {
        LaurentPoly::signed_power(e as i64, -2 * e as i64)
    }
}

/// `q̈_h^e`.
pub(crate) fn q_ddot_pow(h: usize, m: usize, e: usize) -> LaurentPoly {
    if h <= m {
        LaurentPoly::monomial(1, 2 * e as i32)
    } else {
        LaurentPoly::constant(sign(e as i64))
    }
}

/// `Â = Σ a_{i,j} a_{k,l}` over `m < k < i` and `j < l`.
pub fn a_hat(a: &CosetMatrix) -> usize {
    let size = a.size();
    let mut s = 0;
    for i in a.m + 1..=size {
        for k in a.m + 1..i {
            for j in 1..=size {
                for l in j + 1..=size {
                    s += a.get(i, j) * a.get(k, l);
                }
            }
        }
    }
    s
}

/// `Ā = Σ a_{i,j} a_{k,l}` over `i > m >= k` and `m < j < l`.
pub fn a_bar(a: &CosetMatrix) -> usize {
    let size = a.size();
    let mut s = 0;
    for i in a.m + 1..=size {
        for k in 1..=a.m {
            for j in a.m + 1..=size {
                for l in j + 1..=size {
                    s += a.get(i, j) * a.get(k, l);
                }
            }
        }
    }
    s
}

/// `d(A) = Σ_{i>k, j<l} a_{i,j} a_{k,l} + Σ_{j<l} (-1)^î a_{i,j} a_{i,l}`.
pub fn d_stat(a: &CosetMatrix) -> i64 {
    let size = a.size();
    let mut s = 0i64;
    for i in 1..=size {
        for j in 1..=size {
            let x = a.get(i, j) as i64;
            if x == 0 {
                continue;
            }
            for l in j + 1..=size {
                for k in 1..i {
                    s += x * a.get(k, l) as i64;
                }
                s += sign(a.parity(i) as i64) * x * a.get(i, l) as i64;
            }
        }
    }
    s
}

/// `ε_{h,k}`: `Σ_{i>m, j<k} a_{i,j}` when `h = m`, else 0.
pub fn epsilon(a: &CosetMatrix, h: usize, k: usize) -> usize {
    if h != a.m || k == 1 {
        return 0;
    }
    a.block_sum(a.m + 1..=a.size(), 1..=k - 1)
}

fn row_sum(a: &CosetMatrix, i: usize, cols: impl Iterator<Item = usize>) -> usize {
    cols.map(|j| a.get(i, j)).sum()
}

/// `f^+_{h,k} = Σ_{j>=k} a_{h,j} - (-1)^{ĥ + (h+1)^} Σ_{j>k} a_{h+1,j}`.
pub fn f_plus(a: &CosetMatrix, h: usize, k: usize) -> i64 {
    let size = a.size();
    let s = sign((a.parity(h) + a.parity(h + 1)) as i64);
    row_sum(a, h, k..=size) as i64 - s * row_sum(a, h + 1, k + 1..=size) as i64
}

/// `f^-_{h,k} = Σ_{j<=k} a_{h+1,j} - (-1)^{ĥ + (h+1)^} Σ_{j<k} a_{h,j}`.
pub fn f_minus(a: &CosetMatrix, h: usize, k: usize) -> i64 {
    let s = sign((a.parity(h) + a.parity(h + 1)) as i64);
    row_sum(a, h + 1, 1..=k) as i64 - s * row_sum(a, h, 1..k) as i64
}

/// The `q`-form coefficient `q̇_{h+1}^{Σ_{j<k} a_{h+1,j}} q̈_h^{Σ_{j>k} a_{h,j}}`.
pub fn f_plus_q(a: &CosetMatrix, h: usize, k: usize) -> LaurentPoly {
    let below = row_sum(a, h + 1, 1..k);
    let right = row_sum(a, h, k + 1..=a.size());
    &q_dot_pow(h + 1, a.m, below) * &q_ddot_pow(h, a.m, right)
}

/// The `q`-form coefficient `q̇_h^{Σ_{j>k} a_{h,j}} q̈_{h+1}^{Σ_{j<k} a_{h+1,j}}`.
pub fn f_minus_q(a: &CosetMatrix, h: usize, k: usize) -> LaurentPoly {
    let right = row_sum(a, h, k + 1..=a.size());
    let below = row_sum(a, h + 1, 1..k);
    &q_dot_pow(h, a.m, right) * &q_ddot_pow(h + 1, a.m, below)
}

/// `(-1)^Â v^{-d(A)}`: the factor with `[A] = (-1)^Â v^{-d(A)} φ_A`.
pub fn bracket_scalar(a: &CosetMatrix) -> LaurentPoly {
    LaurentPoly::signed_power(a_hat(a) as i64, -d_stat(a))
}

/// Integer statistics of a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixStats {
    pub a_hat: usize,
    pub a_bar: usize,
    pub d: i64,
    pub diagonal: Vec<usize>,
    pub super_parity: usize,
}

pub fn matrix_stats(a: &CosetMatrix) -> MatrixStats {
    MatrixStats {
        a_hat: a_hat(a),
        a_bar: a_bar(a),
        d: d_stat(a),
        diagonal: a.diagonal(),
        super_parity: a.super_parity(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{enumerate_matrices, Composition, MatrixVariant};

    #[test]
    fn parity_table() {
        let s = parity_scalars(1, 1, 1).unwrap();
        assert_eq!((s.q_dot, s.q_ddot, s.v_h), (LaurentPoly::one(), LaurentPoly::q(), LaurentPoly::v()));
        let s = parity_scalars(2, 1, 1).unwrap();
        assert_eq!(s.q_dot, LaurentPoly::monomial(-1, -2));
        assert_eq!(s.q_ddot, LaurentPoly::constant(-1));
        assert_eq!(&s.v_h * &s.v_h, LaurentPoly::monomial(1, -2));
        assert!(parity_scalars(3, 1, 1).is_err());
        assert!(parity_scalars(0, 1, 1).is_err());
    }

    #[test]
    fn powers_match_scalars() {
        for (m, n) in [(1, 1), (2, 1), (0, 2)] {
            for h in 1..=m + n {
                let s = parity_scalars(h, m, n).unwrap();
                for e in 0..4 {
                    assert_eq!(q_dot_pow(h, m, e), s.q_dot.pow(e as u32));
                    assert_eq!(q_ddot_pow(h, m, e), s.q_ddot.pow(e as u32));
                }
            }
        }
    }

    #[test]
    fn statistics_examples() {
        let d = CosetMatrix::diag(&Composition::new(vec![2, 1, 3], 2));
        assert_eq!((a_hat(&d), a_bar(&d), d_stat(&d)), (0, 0, 0));
        let anti = CosetMatrix::new(1, 1, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((a_hat(&anti), a_bar(&anti), d_stat(&anti)), (0, 0, 1));
        for a in enumerate_matrices(2, 1, 3, MatrixVariant::All) {
            for h in 1..3 {
                if h != 2 {
                    for k in 1..=3 {
                        assert_eq!(epsilon(&a, h, k), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn d_stat_counts_both_sums() {
        // 2x2 even block with a_{1,1}=a_{1,2}=1: row term +1; (2,1),(1,2) term a21*a12.
        let a = CosetMatrix::new(2, 0, vec![vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(d_stat(&a), 1 + 1 + 0);
        let b = CosetMatrix::new(0, 2, vec![vec![1, 1], vec![0, 2]]).unwrap();
        assert_eq!(d_stat(&b), -1);
    }
}
