use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `r` for anything that enumerates all of `S_r`.
pub const DEFAULT_GUARD: usize = 8;

/// A permutation of `{1..r}` in one-line notation. Products compose right
/// to left: `(x * y)(i) = x(y(i))`, and `s_k` swaps `k` and `k+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self {
            images: (1..=r).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &x in &images {
            if x == 0 || x > r || seen[x] {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Self { images }
    }

    /// The basic transposition `s_k` in `S_r`.
    pub fn s(k: usize, r: usize) -> Self {
        let mut p = Self::identity(r);
        p.images.swap(k - 1, k);
        p
    }

    /// `s_{k_1} s_{k_2} ... s_{k_t}`.
    pub fn from_word(word: &[usize], r: usize) -> Self {
        let mut p = Self::identity(r);
        for &k in word {
            p.images.swap(k - 1, k);
        }
        p
    }

    /// Parses `"2,1,3"`.
    pub fn parse_key(key: &str) -> Result<Self> {
        let images = key
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad permutation {key:?}")))?;
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut n = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `ℓ(w s_k) < ℓ(w)`.
    pub fn has_right_descent(&self, k: usize) -> bool {
        self.images[k - 1] > self.images[k]
    }

    /// `ℓ(s_k w) < ℓ(w)`.
    pub fn has_left_descent(&self, k: usize) -> bool {
        let pos_k = self.images.iter().position(|&x| x == k).unwrap();
        let pos_k1 = self.images.iter().position(|&x| x == k + 1).unwrap();
        pos_k > pos_k1
    }

    /// `w s_k`.
    pub fn mul_s_right(&self, k: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(k - 1, k);
        p
    }

    /// `s_k w`.
    pub fn mul_s_left(&self, k: usize) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| {
                    if x == k {
                        k + 1
                    } else if x == k + 1 {
                        k
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// A reduced word `[k_1, ..., k_t]` with `w = s_{k_1} ... s_{k_t}`,
    /// found by repeatedly stripping a right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(k) = (1..w.degree()).find(|&k| w.has_right_descent(k)) {
            rev.push(k);
            w.images.swap(k - 1, k);
        }
        rev.reverse();
        rev
    }

    /// All of `S_r` in lexicographic one-line order.
    pub fn all(r: usize) -> Vec<Permutation> {
        (1..=r)
            .permutations(r)
            .map(|images| Permutation { images })
            .collect()
    }

    /// Like [`Permutation::all`] but refuses `r > guard`.
    pub fn all_guarded(r: usize, guard: usize) -> Result<Vec<Permutation>> {
        if r > guard {
            return Err(Error::ResourceLimit {
                what: format!("enumerating S_{r}"),
                guard,
            });
        }
        Ok(Self::all(r))
    }
}

/// `(ℓ(w), reduced word)`.
pub fn length_and_reduced_word(w: &Permutation) -> (usize, Vec<usize>) {
    let word = w.reduced_word();
    (word.len(), word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(r: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=r).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(length_and_reduced_word(&Permutation::identity(5)), (0, vec![]));
        assert_eq!(length_and_reduced_word(&Permutation::s(2, 3)), (1, vec![2]));
        let w = Permutation::from_images(vec![1, 7, 8, 11, 2, 3, 4, 9, 5, 6, 10, 12, 13]).unwrap();
        assert_eq!(w.length(), 19);
        assert_eq!(w.reduced_word().len(), 19);
    }

    #[test]
    fn composition_convention() {
        let s1 = Permutation::s(1, 3);
        let s2 = Permutation::s(2, 3);
        // (s1 s2)(3) = s1(2) = 1.
        assert_eq!(s1.compose(&s2).apply(3), 1);
        assert_eq!(Permutation::from_word(&[1, 2], 3), s1.compose(&s2));
        assert_eq!(s1.compose(&s2).mul_s_right(1), s1.compose(&s2).compose(&s1));
        assert_eq!(s2.mul_s_left(1), s1.compose(&s2));
    }

    #[test]
    fn guard() {
        assert!(Permutation::all_guarded(9, DEFAULT_GUARD).is_err());
        assert_eq!(Permutation::all_guarded(4, DEFAULT_GUARD).unwrap().len(), 24);
    }

    #[test]
    fn descents_match_lengths() {
        for w in Permutation::all(5) {
            for k in 1..5 {
                assert_eq!(w.has_right_descent(k), w.mul_s_right(k).length() < w.length());
                assert_eq!(w.has_left_descent(k), w.mul_s_left(k).length() < w.length());
            }
        }
    }

    proptest! {
        #[test]
        fn reduced_word_reproduces(w in (1usize..9).prop_flat_map(perm)) {
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(&word, w.degree()), w.clone());
            prop_assert!(w.compose(&w.inverse()).is_identity());
            prop_assert_eq!(Permutation::parse_key(&w.to_string()).unwrap(), w);
        }
    }
}
