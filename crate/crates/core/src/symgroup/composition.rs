use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A composition `λ = (λ_1, ..., λ_N)` with a super split `m`: parts
/// `1..=m` are even, the rest odd. Indices in the API are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    pub parts: Vec<usize>,
    pub split: usize,
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even: Vec<String> = self.even_parts().iter().map(|p| p.to_string()).collect();
        let odd: Vec<String> = self.odd_parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({}|{})", even.join(","), odd.join(","))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Composition {
    /// Panics if `split > parts.len()`; use [`Composition::try_new`] for
    /// untrusted input.
    pub fn new(parts: Vec<usize>, split: usize) -> Self {
        Self::try_new(parts, split).expect("split exceeds number of parts")
    }

    pub fn try_new(parts: Vec<usize>, split: usize) -> Result<Self> {
        if split > parts.len() {
            return Err(Error::Domain(format!(
                "split {split} exceeds {} parts",
                parts.len()
            )));
        }
        Ok(Self { parts, split })
    }

    /// All-even composition.
    pub fn even(parts: Vec<usize>) -> Self {
        let split = parts.len();
        Self { parts, split }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based).
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn even_parts(&self) -> &[usize] {
        &self.parts[..self.split]
    }

    pub fn odd_parts(&self) -> &[usize] {
        &self.parts[self.split..]
    }

    /// Parity `î` of index `i` (1-based): 0 if even, 1 if odd.
    pub fn parity(&self, i: usize) -> usize {
        usize::from(i > self.split)
    }

    /// `[λ̃_0, λ̃_1, ..., λ̃_N]` with `λ̃_0 = 0`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &p in &self.parts {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Block `N^λ_i` as the range of positions `λ̃_{i-1}+1 ..= λ̃_i`,
    /// returned half-open.
    pub fn block(&self, i: usize) -> Range<usize> {
        let start: usize = self.parts[..i - 1].iter().sum();
        start + 1..start + self.parts[i - 1] + 1
    }

    /// Block index (1-based) containing position `pos`, for `1 <= pos <= r`.
    pub fn block_of(&self, pos: usize) -> usize {
        let mut acc = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            acc += p;
            if pos <= acc {
                return i + 1;
            }
        }
        panic!("position {pos} beyond degree {}", self.degree())
    }

    /// Generators `s_k` of `W_λ`, split into those in even and odd blocks.
    pub fn generators(&self) -> (Vec<usize>, Vec<usize>) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 1..=self.len() {
            let b = self.block(i);
            for k in b.start..b.end.saturating_sub(1) {
                if self.parity(i) == 0 {
                    even.push(k);
                } else {
                    odd.push(k);
                }
            }
        }
        (even, odd)
    }

    /// Does `w` lie in the parabolic subgroup `W_λ`?
    pub fn contains(&self, w: &Permutation) -> bool {
        (1..=w.degree()).all(|i| self.block_of(i) == self.block_of(w.apply(i)))
    }

    /// For `w ∈ W_λ` written `w = w_0 w_1` (even and odd block parts),
    /// returns `(ℓ(w_0), ℓ(w_1))`.
    pub fn parity_lengths(&self, w: &Permutation) -> (usize, usize) {
        let r = w.degree();
        let (mut even, mut odd) = (0, 0);
        for i in 1..=r {
            for j in i + 1..=r {
                if w.apply(i) > w.apply(j) && self.block_of(i) == self.block_of(j) {
                    if self.parity(self.block_of(i)) == 0 {
                        even += 1;
                    } else {
                        odd += 1;
                    }
                }
            }
        }
        (even, odd)
    }

    /// Elements of `W_λ` in lexicographic one-line order.
    pub fn subgroup_elements(&self) -> Vec<Permutation> {
        let r = self.degree();
        let mut out = vec![Vec::with_capacity(r)];
        for i in 1..=self.len() {
            let b = self.block(i);
            let perms: Vec<Vec<usize>> = Permutation::all(b.len())
                .into_iter()
                .map(|p| p.images().iter().map(|&x| x + b.start - 1).collect())
                .collect();
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    perms.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(p);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Permutation::from_images_unchecked).collect()
    }

    /// `λ ± e_h ∓ e_{h+1}`; `plus = true` gives `λ + e_h - e_{h+1}`.
    pub fn shifted(&self, h: usize, plus: bool) -> Result<Composition> {
        if h == 0 || h >= self.len() {
            return Err(Error::IndexOutOfRange(format!("h = {h}")));
        }
        let mut parts = self.parts.clone();
        let (gain, lose) = if plus { (h - 1, h) } else { (h, h - 1) };
        if parts[lose] == 0 {
            return Err(Error::InvalidWeight(format!(
                "{self} shifted at h = {h} has a negative part"
            )));
        }
        parts[lose] -= 1;
        parts[gain] += 1;
        Ok(Composition { parts, split: self.split })
    }

    /// `Λ(N, r)` with the given split, in lexicographic order.
    pub fn all(num_parts: usize, r: usize, split: usize) -> Vec<Composition> {
        weak_compositions(num_parts, r)
            .into_iter()
            .map(|parts| Composition { parts, split })
            .collect()
    }

    /// Every composition of `r` with at most `max_len` parts, each with every
    /// possible split. Intended for exhaustive tests.
    pub fn all_with_splits(r: usize, max_len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            for parts in weak_compositions(len, r) {
                for split in 0..=len {
                    out.push(Composition { parts: parts.clone(), split });
                }
            }
        }
        out
    }
}

/// All vectors of `len` non-negative integers summing to `total`, lexicographic.
pub fn weak_compositions(len: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(len - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, total, &mut Vec::with_capacity(len), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_and_sums() {
        let l = Composition::new(vec![2, 0, 3], 1);
        assert_eq!(l.partial_sums(), vec![0, 2, 2, 5]);
        assert_eq!(l.block(1), 1..3);
        assert!(l.block(2).is_empty());
        assert_eq!(l.block(3), 3..6);
        assert_eq!(l.block_of(3), 3);
        assert_eq!(l.generators(), (vec![1], vec![3, 4]));
        assert_eq!(l.subgroup_elements().len(), 12);
        assert_eq!(format!("{l}"), "(2|0,3)");
    }

    #[test]
    fn shifting() {
        let l = Composition::new(vec![1, 0], 1);
        assert_eq!(l.shifted(1, false).unwrap().parts, vec![0, 1]);
        assert!(matches!(l.shifted(1, true), Err(Error::InvalidWeight(_))));
    }

    #[test]
    fn weak_composition_counts() {
        assert_eq!(weak_compositions(3, 4).len(), 15);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert!(weak_compositions(0, 1).is_empty());
        let all = weak_compositions(3, 3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
