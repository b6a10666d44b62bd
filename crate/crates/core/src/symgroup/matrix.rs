use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::composition::{weak_compositions, Composition};
use crate::error::{Error, Result};

/// An `(m+n) × (m+n)` matrix of non-negative integers labelling a double
/// coset. Entry accessors are 1-based. The derived order is row-major
/// lexicographic for fixed `(m, n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CosetMatrix {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
}

impl fmt::Debug for CosetMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

impl fmt::Display for CosetMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// Which subset of matrices [`enumerate_matrices`] lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixVariant {
    All,
    /// Off-diagonal entries `< l`.
    LRestricted(usize),
    /// Representatives `A^± + diag(x)` of classes with the diagonal taken
    /// mod `l`; `x` has entries in `0..l`.
    BarClasses(usize),
}

impl CosetMatrix {
    pub fn new(m: usize, n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = m + n;
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(Error::Domain(format!(
                "matrix must be {size}×{size}, got {rows:?}"
            )));
        }
        Ok(Self { m, n, rows })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        let size = m + n;
        Self {
            m,
            n,
            rows: vec![vec![0; size]; size],
        }
    }

    pub fn diag(lambda: &Composition) -> Self {
        let mut a = Self::zero(lambda.split, lambda.len() - lambda.split);
        for i in 0..lambda.len() {
            a.rows[i][i] = lambda.parts[i];
        }
        a
    }

    /// Parses the key form `"1,0;0,1"`.
    pub fn parse_key(key: &str, m: usize, n: usize) -> Result<Self> {
        let rows = key
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad matrix {key:?}")))?;
        Self::new(m, n, rows)
    }

    /// `"1,0;0,1"`.
    pub fn key(&self) -> String {
        self.rows.iter().map(|r| r.iter().join(",")).join(";")
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// Entry `a_{i,j}` (1-based).
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.rows[i - 1][j - 1] = value;
    }

    /// Parity `î` of index `i`.
    pub fn parity(&self, i: usize) -> usize {
        usize::from(i > self.m)
    }

    pub fn degree(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn ro(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.iter().sum()).collect(), self.m)
    }

    pub fn co(&self) -> Composition {
        let size = self.size();
        Composition::new(
            (0..size).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect(),
            self.m,
        )
    }

    /// `ν_A`: entries read column by column.
    pub fn column_reading(&self) -> Vec<usize> {
        let size = self.size();
        (0..size)
            .flat_map(|j| self.rows.iter().map(move |r| r[j]))
            .collect()
    }

    /// Entries read row by row.
    pub fn row_reading(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Membership in `M(m|n, r)`: entries in mixed-parity positions are `<= 1`.
    pub fn is_super_distinguished(&self) -> bool {
        let size = self.size();
        (1..=size).all(|i| {
            (1..=size).all(|j| self.parity(i) == self.parity(j) || self.get(i, j) <= 1)
        })
    }

    pub fn is_diagonal(&self) -> bool {
        let size = self.size();
        (0..size).all(|i| (0..size).all(|j| i == j || self.rows[i][j] == 0))
    }

    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.size()).map(|i| self.rows[i][i]).collect()
    }

    /// `A^±`: the matrix with the diagonal zeroed.
    pub fn off_diagonal(&self) -> CosetMatrix {
        let mut a = self.clone();
        for i in 0..self.size() {
            a.rows[i][i] = 0;
        }
        a
    }

    pub fn with_diagonal(&self, diag: &[usize]) -> CosetMatrix {
        let mut a = self.clone();
        for (i, &d) in diag.iter().enumerate() {
            a.rows[i][i] = d;
        }
        a
    }

    /// Sum of the entries `a_{i,j}` over `i` in `rows` and `j` in `cols`
    /// (1-based inclusive ranges).
    pub fn block_sum(
        &self,
        rows: std::ops::RangeInclusive<usize>,
        cols: std::ops::RangeInclusive<usize>,
    ) -> usize {
        let mut s = 0;
        for i in rows {
            for j in cols.clone() {
                s += self.get(i, j);
            }
        }
        s
    }

    /// Adds `delta` to entry `(i, j)`; `None` if it would go negative.
    pub fn add_entry(&self, i: usize, j: usize, delta: i64) -> Option<CosetMatrix> {
        let v = self.get(i, j) as i64 + delta;
        if v < 0 {
            return None;
        }
        let mut a = self.clone();
        a.set(i, j, v as usize);
        Some(a)
    }

    /// Super parity of `[A]`: parity of the total of mixed-parity entries.
    pub fn super_parity(&self) -> usize {
        let size = self.size();
        let mut s = 0;
        for i in 1..=size {
            for j in 1..=size {
                if self.parity(i) != self.parity(j) {
                    s += self.get(i, j);
                }
            }
        }
        s % 2
    }
}

/// Matrices in `M(m|n, r)` (or a variant), row-major lexicographic.
pub fn enumerate_matrices(m: usize, n: usize, r: usize, variant: MatrixVariant) -> Vec<CosetMatrix> {
    let size = m + n;
    if size == 0 {
        return Vec::new();
    }
    match variant {
        MatrixVariant::All => enumerate_with_bounds(m, n, r, None, true),
        MatrixVariant::LRestricted(l) => enumerate_with_bounds(m, n, r, Some(l), true),
        MatrixVariant::BarClasses(l) => {
            let mut out = Vec::new();
            for total in 0..=r {
                let residues: Vec<Vec<usize>> = weak_compositions(size, r - total)
                    .into_iter()
                    .map(|lam| lam.iter().map(|x| x % l).collect())
                    .sorted()
                    .dedup()
                    .collect();
                for off in enumerate_with_bounds(m, n, total, Some(l), false) {
                    for x in &residues {
                        out.push(off.with_diagonal(x));
                    }
                }
            }
            out.sort();
            out.dedup();
            out
        }
    }
}

/// `include_diagonal = false` forces the diagonal to zero.
fn enumerate_with_bounds(
    m: usize,
    n: usize,
    r: usize,
    off_diag_bound: Option<usize>,
    include_diagonal: bool,
) -> Vec<CosetMatrix> {
    let size = m + n;
    let cells = size * size;
    let cap = |idx: usize| -> usize {
        let (i, j) = (idx / size, idx % size);
        if i == j {
            return if include_diagonal { r } else { 0 };
        }
        let mut c = r;
        if (i < m) != (j < m) {
            c = c.min(1);
        }
        if let Some(l) = off_diag_bound {
            c = c.min(l.saturating_sub(1));
        }
        c
    };
    let caps: Vec<usize> = (0..cells).map(cap).collect();
    // suffix capacity lets us prune branches that cannot reach the total
    let mut suffix = vec![0usize; cells + 1];
    for idx in (0..cells).rev() {
        suffix[idx] = suffix[idx + 1].saturating_add(caps[idx]);
    }
    let mut out = Vec::new();
    let mut entries = vec![0usize; cells];
    fn rec(
        idx: usize,
        remaining: usize,
        caps: &[usize],
        suffix: &[usize],
        entries: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if idx == caps.len() {
            if remaining == 0 {
                emit(entries);
            }
            return;
        }
        if suffix[idx] < remaining {
            return;
        }
        for v in 0..=caps[idx].min(remaining) {
            entries[idx] = v;
            rec(idx + 1, remaining - v, caps, suffix, entries, emit);
        }
        entries[idx] = 0;
    }
    rec(0, r, &caps, &suffix, &mut entries, &mut |e: &[usize]| {
        out.push(CosetMatrix {
            m,
            n,
            rows: e.chunks(size).map(|c| c.to_vec()).collect(),
        });
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for r in 2..=8 {
            assert_eq!(enumerate_matrices(1, 1, r, MatrixVariant::All).len(), 4 * r);
        }
        assert_eq!(enumerate_matrices(1, 0, 5, MatrixVariant::All).len(), 1);
        assert_eq!(enumerate_matrices(2, 0, 2, MatrixVariant::All).len(), 10);
        assert_eq!(enumerate_matrices(1, 1, 2, MatrixVariant::LRestricted(2)).len(), 8);
    }

    #[test]
    fn super_symmetry_of_counts() {
        for m in 0..=2 {
            for n in 0..=2 {
                if m + n == 0 {
                    continue;
                }
                for r in 0..=5 {
                    assert_eq!(
                        enumerate_matrices(m, n, r, MatrixVariant::All).len(),
                        enumerate_matrices(n, m, r, MatrixVariant::All).len()
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_super() {
        let all = enumerate_matrices(2, 1, 3, MatrixVariant::All);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|a| a.is_super_distinguished() && a.degree() == 3));
    }

    #[test]
    fn super_distinguished_examples() {
        let lam = Composition::new(vec![2, 1], 1);
        assert!(CosetMatrix::diag(&lam).is_super_distinguished());
        let a = CosetMatrix::new(1, 1, vec![vec![0, 2], vec![0, 0]]).unwrap();
        assert!(!a.is_super_distinguished());
    }

    #[test]
    fn key_round_trip() {
        let a = CosetMatrix::new(1, 2, vec![vec![1, 0, 1], vec![0, 2, 0], vec![1, 0, 3]]).unwrap();
        assert_eq!(a.key(), "1,0,1;0,2,0;1,0,3");
        assert_eq!(CosetMatrix::parse_key(&a.key(), 1, 2).unwrap(), a);
        assert_eq!(a.ro().parts, vec![2, 2, 4]);
        assert_eq!(a.co().parts, vec![2, 2, 4]);
        assert_eq!(a.column_reading(), vec![1, 0, 1, 0, 2, 0, 1, 0, 3]);
    }

    #[test]
    fn bar_classes_small() {
        // (1|1, r=2, l=2): off-diagonal parts of degree 0, 1, 2.
        let classes = enumerate_matrices(1, 1, 2, MatrixVariant::BarClasses(2));
        let inf = enumerate_matrices(1, 1, 2, MatrixVariant::LRestricted(2));
        assert!(classes.len() <= inf.len());
        assert_eq!(classes.len(), 7);
        assert!(classes.contains(&CosetMatrix::zero(1, 1)));
    }
}
