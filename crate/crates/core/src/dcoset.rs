//! Standard reduced expressions for the shortest double coset
//! representatives `d_M`, the shifted matrices `M^±_{h,k}`, and the
//! decomposition of products of double cosets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symgroup::{CosetMatrix, Permutation};

/// Tables attached to a matrix `M` (all `N × N`, 0-based storage, read
/// through the 1-based accessors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DCosetStats {
    /// `σ_{i,j} = μ̃_{j-1} + m^⌞_{i,j}`.
    pub sigma: Vec<Vec<usize>>,
    /// `m̃_{i,j}`: partial sums of the column reading of `M`.
    pub tilde: Vec<Vec<usize>>,
    /// `m^⌞_{i,j} = Σ_{k<=i, l>=j} m_{k,l}`.
    pub hook: Vec<Vec<usize>>,
}

impl DCosetStats {
    pub fn sigma(&self, i: usize, j: usize) -> usize {
        self.sigma[i - 1][j - 1]
    }

    pub fn tilde(&self, i: usize, j: usize) -> usize {
        self.tilde[i - 1][j - 1]
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        self.hook[i - 1][j - 1]
    }
}

pub fn dcoset_stats(m: &CosetMatrix) -> DCosetStats {
    let size = m.size();
    let mut hook = vec![vec![0; size]; size];
    for i in 1..=size {
        for j in 1..=size {
            hook[i - 1][j - 1] = m.block_sum(1..=i, j..=size);
        }
    }
    let mu_tilde = m.co().partial_sums();
    let mut sigma = vec![vec![0; size]; size];
    for i in 0..size {
        for j in 0..size {
            sigma[i][j] = mu_tilde[j] + hook[i][j];
        }
    }
    let mut tilde = vec![vec![0; size]; size];
    let mut acc = 0;
    for j in 0..size {
        for i in 0..size {
            acc += m.rows[i][j];
            tilde[i][j] = acc;
        }
    }
    DCosetStats { sigma, tilde, hook }
}

/// `[start, start+1, ..., start+len-1]`.
fn ascending(start: i64, len: i64) -> Vec<i64> {
    (0..len.max(0)).map(|t| start + t).collect()
}

/// `[start, start-1, ..., start-len+1]`.
fn descending(start: i64, len: i64) -> Vec<i64> {
    (0..len.max(0)).map(|t| start - t).collect()
}

/// `w_{i,j}` (`plus = false`) or `w^+_{i,j}` (`plus = true`) as a word in
/// the generator indices. The plus variant is emitted in the interleaved
/// form `s_{σ+1}(run) s_{σ+2}(run) ...`.
pub fn factor_word(m: &CosetMatrix, i: usize, j: usize, plus: bool) -> Result<Vec<usize>> {
    let size = m.size();
    if i < 2 || i > size || j < 1 || j >= size {
        return Err(Error::IndexOutOfRange(format!(
            "factor word ({i},{j}) for a {size}×{size} matrix"
        )));
    }
    let stats = dcoset_stats(m);
    Ok(factor_word_with(&stats, m, i, j, plus))
}

fn factor_word_with(stats: &DCosetStats, m: &CosetMatrix, i: usize, j: usize, plus: bool) -> Vec<usize> {
    let mij = m.get(i, j);
    let sigma = stats.sigma(i - 1, j);
    let tilde = stats.tilde(i - 1, j);
    let mut word = Vec::new();
    if mij == 0 || (!plus && sigma == tilde) {
        return word;
    }
    for t in 0..mij {
        if plus {
            word.push(sigma + 1 + t);
        }
        // run s_{σ+t} s_{σ+t-1} ... s_{m̃+1+t}; empty when σ = m̃
        let mut k = sigma + t;
        while k > tilde + t {
            word.push(k);
            k -= 1;
        }
    }
    word
}

/// All factor words `w_{i,j}` laid out as rows `i = 2..=N`, columns
/// `j = 1..N-1`.
pub fn factor_word_grid(m: &CosetMatrix) -> Vec<Vec<Vec<usize>>> {
    let size = m.size();
    let stats = dcoset_stats(m);
    (2..=size)
        .map(|i| (1..size).map(|j| factor_word_with(&stats, m, i, j, false)).collect())
        .collect()
}

/// `d_M` together with its standard reduced word: the factors `w_{i,j}`
/// multiplied down column 1, then down column 2, and so on.
pub fn standard_word_dm(m: &CosetMatrix) -> (Permutation, Vec<usize>) {
    let size = m.size();
    let stats = dcoset_stats(m);
    let mut word = Vec::new();
    for j in 1..size {
        for i in 2..=size {
            word.extend(factor_word_with(&stats, m, i, j, false));
        }
    }
    (Permutation::from_word(&word, m.degree()), word)
}

/// `Σ_{j<k} m_{h+1,j} - Σ_{j>k} m_{h,j}`.
fn plus_shift_delta(m: &CosetMatrix, h: usize, k: usize) -> i64 {
    let size = m.size();
    let a = if k > 1 { m.block_sum(h + 1..=h + 1, 1..=k - 1) } else { 0 };
    let b = if k < size { m.block_sum(h..=h, k + 1..=size) } else { 0 };
    a as i64 - b as i64
}

/// `M^+_{h,k} = M + E_{h,k} - E_{h+1,k}` (or `M^-_{h,k}`) together with
/// the predicted change `ℓ(d_{M^±}) - ℓ(d_M)`.
pub fn shifted_matrix(m: &CosetMatrix, h: usize, k: usize, plus: bool) -> Result<(CosetMatrix, i64)> {
    let size = m.size();
    if h == 0 || h >= size || k == 0 || k > size {
        return Err(Error::IndexOutOfRange(format!("(h,k) = ({h},{k})")));
    }
    let (gain, lose) = if plus { (h, h + 1) } else { (h + 1, h) };
    if m.get(lose, k) == 0 {
        return Err(Error::InvalidShift(format!(
            "entry ({lose},{k}) of {m} is zero"
        )));
    }
    let mut out = m.clone();
    out.set(lose, k, m.get(lose, k) - 1);
    out.set(gain, k, m.get(gain, k) + 1);
    let delta = plus_shift_delta(m, h, k);
    Ok((out, if plus { delta } else { -delta }))
}

/// The matrices `M^±_{h,k}` labelling the double cosets whose union is
/// `(W_{λ^{[h±]}} 1 W_λ)(W_λ d_M W_μ)`, in ascending `k`.
pub fn decompose_product(m: &CosetMatrix, h: usize, plus: bool) -> Result<Vec<CosetMatrix>> {
    let lambda = m.ro();
    lambda.shifted(h, plus)?;
    let size = m.size();
    let source_row = if plus { h + 1 } else { h };
    (1..=size)
        .filter(|&k| m.get(source_row, k) >= 1)
        .map(|k| shifted_matrix(m, h, k, plus).map(|(a, _)| a))
        .collect()
}

/// Elements of `W_λ d W_μ`.
pub fn double_coset_elements(m: &CosetMatrix) -> BTreeSet<Permutation> {
    let (d, _) = standard_word_dm(m);
    let left = m.ro().subgroup_elements();
    let right = m.co().subgroup_elements();
    let mut out = BTreeSet::new();
    for u in &left {
        let ud = u.compose(&d);
        for w in &right {
            out.insert(ud.compose(w));
        }
    }
    out
}

/// Checks the decomposition by brute force: the elementwise product of
/// `W_{λ^{[h±]}} W_λ` with `W_λ d_M W_μ` must be the disjoint union of the
/// double cosets returned by [`decompose_product`].
pub fn check_decomposition(m: &CosetMatrix, h: usize, plus: bool) -> Result<bool> {
    let parts = decompose_product(m, h, plus)?;
    let lambda = m.ro();
    let shifted = lambda.shifted(h, plus)?;
    let mut left = BTreeSet::new();
    for x in shifted.subgroup_elements() {
        for y in lambda.subgroup_elements() {
            left.insert(x.compose(&y));
        }
    }
    let coset = double_coset_elements(m);
    let mut product = BTreeSet::new();
    for x in &left {
        for y in &coset {
            product.insert(x.compose(y));
        }
    }
    let mut union = BTreeSet::new();
    let mut total = 0;
    for a in &parts {
        let elems = double_coset_elements(a);
        total += elems.len();
        union.extend(elems);
    }
    Ok(total == union.len() && union == product)
}

fn word_to_perm(word: &[i64], r: usize) -> Option<Permutation> {
    if word.iter().any(|&k| k < 1 || k as usize >= r) {
        return None;
    }
    let w: Vec<usize> = word.iter().map(|&k| k as usize).collect();
    Some(Permutation::from_word(&w, r))
}

/// Evaluates both sides of the word identities relating `d_M` and
/// `d_{M^±_{h,k}}`:
///
/// * plus, `0 <= p < m_{h+1,k}`:
///   `s_{λ̃_h+1} ... s_{λ̃_h+a+p} d_M = s_{λ̃_h} ... s_{λ̃_h-b+1} d_{M^+} s_{m̃_{h,k}+1} ... s_{m̃_{h,k}+p}`
/// * minus, `0 < p <= m_{h,k}`, `q = m_{h,k} - p`:
///   `s_{λ̃_h-1} ... s_{λ̃_h-b-q} d_M = s_{λ̃_h} ... s_{λ̃_h+a-1} d_{M^-} s_{m̃_{h,k}-1} ... s_{m̃_{h,k}-q}`
///
/// with `a = Σ_{j<k} m_{h+1,j}`, `b = Σ_{j>k} m_{h,j}`, and `m̃` taken
/// from `M`. Returns `false` if a side mentions a generator outside `S_r`.
pub fn verify_case1(m: &CosetMatrix, h: usize, k: usize, p: usize, plus: bool) -> Result<bool> {
    let size = m.size();
    if h == 0 || h >= size || k == 0 || k > size {
        return Err(Error::InvalidParameters(format!("(h,k) = ({h},{k})")));
    }
    if plus && p >= m.get(h + 1, k) {
        return Err(Error::InvalidParameters(format!(
            "p = {p} must be below m_{{h+1,k}} = {}",
            m.get(h + 1, k)
        )));
    }
    if !plus && (p == 0 || p > m.get(h, k)) {
        return Err(Error::InvalidParameters(format!(
            "p = {p} must lie in 1..={}",
            m.get(h, k)
        )));
    }
    let r = m.degree();
    let a = if k > 1 { m.block_sum(h + 1..=h + 1, 1..=k - 1) } else { 0 } as i64;
    let b = if k < size { m.block_sum(h..=h, k + 1..=size) } else { 0 } as i64;
    let lam_tilde = m.ro().partial_sums()[h] as i64;
    let tilde = dcoset_stats(m).tilde(h, k) as i64;
    let (d, _) = standard_word_dm(m);
    let (shifted, _) = shifted_matrix(m, h, k, plus)?;
    let (d_shift, _) = standard_word_dm(&shifted);
    let p = p as i64;
    let (lhs_word, pre, post) = if plus {
        (
            ascending(lam_tilde + 1, a + p),
            descending(lam_tilde, b),
            ascending(tilde + 1, p),
        )
    } else {
        let q = m.get(h, k) as i64 - p;
        (
            descending(lam_tilde - 1, b + q),
            ascending(lam_tilde, a),
            descending(tilde - 1, q),
        )
    };
    let (Some(lhs), Some(pre), Some(post)) = (
        word_to_perm(&lhs_word, r),
        word_to_perm(&pre, r),
        word_to_perm(&post, r),
    ) else {
        return Ok(false);
    };
    Ok(lhs.compose(&d) == pre.compose(&d_shift).compose(&post))
}
