//! Sparse exact linear algebra over a [`Field`].

use std::collections::BTreeMap;

use crate::exactalg::Field;

/// Sparse vector: index to nonzero entry.
pub type SparseVec<E> = BTreeMap<usize, E>;

pub fn axpy<F: Field>(field: &F, y: &mut SparseVec<F::Elem>, a: &F::Elem, x: &SparseVec<F::Elem>) {
    if field.is_zero(a) {
        return;
    }
    for (&i, xi) in x {
        let t = field.mul(a, xi);
        match y.get_mut(&i) {
            Some(yi) => {
                *yi = field.add(yi, &t);
                if field.is_zero(yi) {
                    y.remove(&i);
                }
            }
            None => {
                y.insert(i, t);
            }
        }
    }
}

/// A subspace kept in echelon form: each row is normalized so its smallest
/// index (the pivot) carries 1.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    rows: BTreeMap<usize, SparseVec<F::Elem>>,
}

impl<F: Field> Default for Subspace<F> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<F: Field> Subspace<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The remainder of `v` after eliminating every pivot.
    pub fn reduce(&self, field: &F, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut v = v.clone();
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).find(|(i, _)| self.rows.contains_key(i)).map(|(&i, c)| (i, c.clone()));
            let Some((i, c)) = next else { break };
            axpy(field, &mut v, &field.neg(&c), &self.rows[&i]);
            cursor = i + 1;
        }
        v
    }

    pub fn contains(&self, field: &F, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(field, v).is_empty()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, field: &F, v: &SparseVec<F::Elem>) -> bool {
        let mut r = self.reduce(field, v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = field.inv(lead).expect("nonzero pivot");
        for x in r.values_mut() {
            *x = field.mul(x, &inv);
        }
        self.rows.insert(pivot, r);
        true
    }
}

pub fn rank<F: Field>(field: &F, rows: &[SparseVec<F::Elem>]) -> usize {
    let mut s = Subspace::<F>::new();
    rows.iter().filter(|r| s.insert(field, r)).count()
}

/// A basis of `{x : Σ_j m[i][j] x_j = 0 for all i}`; `rows` is a sparse row
/// list over `ncols` columns.
pub fn kernel_basis<F: Field>(field: &F, rows: &[SparseVec<F::Elem>], ncols: usize) -> Vec<SparseVec<F::Elem>> {
    // Reduced row echelon form, keyed by pivot column.
    let mut pivots: BTreeMap<usize, SparseVec<F::Elem>> = BTreeMap::new();
    for row in rows {
        let mut r = row.clone();
        for (&p, prow) in &pivots {
            if let Some(c) = r.get(&p).cloned() {
                axpy(field, &mut r, &field.neg(&c), prow);
            }
        }
        let Some((&p, lead)) = r.iter().next() else { continue };
        let inv = field.inv(lead).expect("nonzero pivot");
        for x in r.values_mut() {
            *x = field.mul(x, &inv);
        }
        for prow in pivots.values_mut() {
            if let Some(c) = prow.get(&p).cloned() {
                axpy(field, prow, &field.neg(&c), &r);
            }
        }
        pivots.insert(p, r);
    }
    (0..ncols)
        .filter(|j| !pivots.contains_key(j))
        .map(|free| {
            let mut x = SparseVec::new();
            x.insert(free, field.one());
            for (&p, prow) in &pivots {
                if let Some(c) = prow.get(&free) {
                    x.insert(p, field.neg(c));
                }
            }
            x
        })
        .collect()
}

pub fn kernel_vector<F: Field>(field: &F, rows: &[SparseVec<F::Elem>], ncols: usize) -> Option<SparseVec<F::Elem>> {
    kernel_basis(field, rows, ncols).into_iter().next()
}

/// Connected components of the bipartite graph of nonzero entries, as
/// `(row indices, column indices)`.
pub fn blocks<E>(rows: &[SparseVec<E>], ncols: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = rows.len() + ncols;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, row) in rows.iter().enumerate() {
        for &j in row.keys() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, rows.len() + j));
            parent[a] = b;
        }
    }
    let mut comps: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for i in 0..rows.len() {
        let root = find(&mut parent, i);
        comps.entry(root).or_default().0.push(i);
    }
    for j in 0..ncols {
        let root = find(&mut parent, rows.len() + j);
        comps.entry(root).or_default().1.push(j);
    }
    comps.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{CyclotomicField, PrimeField};

    fn vecf<F: Field>(f: &F, xs: &[i64]) -> SparseVec<F::Elem> {
        xs.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, f.from_int(x)))
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let f = CyclotomicField::new(3).unwrap();
        let rows = vec![vecf(&f, &[1, 2, 3]), vecf(&f, &[2, 4, 6]), vecf(&f, &[0, 1, 1])];
        assert_eq!(rank(&f, &rows), 2);
        let x = kernel_vector(&f, &rows, 3).unwrap();
        for row in &rows {
            let mut s = f.zero();
            for (j, c) in row {
                if let Some(xj) = x.get(j) {
                    s = f.add(&s, &f.mul(c, xj));
                }
            }
            assert!(f.is_zero(&s));
        }
        let full = vec![vecf(&f, &[1, 0]), vecf(&f, &[1, 1])];
        assert!(kernel_vector(&f, &full, 2).is_none());
    }

    #[test]
    fn subspace_membership() {
        let f = PrimeField::new(5, 1, 2).unwrap();
        let mut s = Subspace::<PrimeField>::new();
        assert!(s.insert(&f, &vecf(&f, &[0, 1, 1])));
        assert!(s.insert(&f, &vecf(&f, &[1, 1, 0])));
        assert!(s.contains(&f, &vecf(&f, &[1, 2, 1])));
        assert!(!s.contains(&f, &vecf(&f, &[0, 0, 1])));
        assert!(!s.insert(&f, &vecf(&f, &[2, 4, 2])));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn block_components() {
        let f = CyclotomicField::new(2).unwrap();
        let rows = vec![vecf(&f, &[1, 0, 0]), vecf(&f, &[0, 1, 1]), vecf(&f, &[0, 0, 0])];
        let b = blocks(&rows, 3);
        assert_eq!(b.len(), 3);
        assert!(b.contains(&(vec![0], vec![0])));
        assert!(b.contains(&(vec![1], vec![1, 2])));
        assert!(b.contains(&(vec![2], vec![])));
    }
}
