use super::composition::Composition;
use super::matrix::CosetMatrix;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// `d ∈ D_λ`: `d` is the shortest element of its coset `W_λ d`, i.e.
/// `d^{-1}` is increasing on every block of `λ`.
pub fn is_min_left_coset_rep(lambda: &Composition, d: &Permutation) -> bool {
    let dinv = d.inverse();
    is_increasing_on_blocks(lambda, &dinv)
}

/// `w` is increasing on every block of `λ`, i.e. `w ∈ D_λ^{-1}` (shortest in `w W_λ`).
pub fn is_increasing_on_blocks(lambda: &Composition, w: &Permutation) -> bool {
    (1..=lambda.len()).all(|i| {
        let b = lambda.block(i);
        (b.start..b.end.saturating_sub(1)).all(|k| w.apply(k) < w.apply(k + 1))
    })
}

/// `d ∈ D_{λμ} = D_λ ∩ D_μ^{-1}`.
pub fn is_min_double_coset_rep(lambda: &Composition, d: &Permutation, mu: &Composition) -> bool {
    is_min_left_coset_rep(lambda, d) && is_increasing_on_blocks(mu, d)
}

/// `D_{λμ}`, found by scanning all of `W`; refuses `r > guard`.
pub fn min_double_coset_reps(
    lambda: &Composition,
    mu: &Composition,
    guard: usize,
) -> Result<Vec<Permutation>> {
    let r = lambda.degree();
    if mu.degree() != r {
        return Err(Error::DegreeMismatch(r, mu.degree()));
    }
    Ok(Permutation::all_guarded(r, guard)?
        .into_iter()
        .filter(|d| is_min_double_coset_rep(lambda, d, mu))
        .collect())
}

/// `ȷ(λ, d, μ) = (|N^λ_i ∩ d(N^μ_j)|)`. The matrix takes its split from `λ`.
pub fn jmath(lambda: &Composition, d: &Permutation, mu: &Composition) -> Result<CosetMatrix> {
    let r = lambda.degree();
    if mu.degree() != r || d.degree() != r {
        return Err(Error::DegreeMismatch(r, mu.degree().max(d.degree())));
    }
    if lambda.len() != mu.len() {
        return Err(Error::Domain("λ and μ must have the same number of parts".into()));
    }
    if !is_min_double_coset_rep(lambda, d, mu) {
        return Err(Error::InvalidRepresentative(d.to_string()));
    }
    let size = lambda.len();
    let mut a = CosetMatrix::zero(lambda.split, size - lambda.split);
    for pos in 1..=r {
        let j = mu.block_of(pos);
        let i = lambda.block_of(d.apply(pos));
        a.rows[i - 1][j - 1] += 1;
    }
    Ok(a)
}

/// `ȷ^{-1}(A) = (ro(A), d_A, co(A))`, with `d_A` built from its standard
/// reduced expression.
pub fn jmath_inv(a: &CosetMatrix) -> (Composition, Permutation, Composition) {
    let (d, _) = crate::dcoset::standard_word_dm(a);
    (a.ro(), d, a.co())
}
