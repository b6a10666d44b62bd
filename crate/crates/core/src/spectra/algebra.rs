use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::linalg::{axpy, blocks, kernel_basis, rank, SparseVec, Subspace};
use crate::error::{Error, Result};
use crate::exactalg::{Field, LaurentPoly};
use crate::schur::{bracket_product, Basis, SchurElement};
use crate::symgroup::{enumerate_matrices, CosetMatrix, MatrixVariant};

/// Default bound on the basis size for full multiplication tables.
pub const DEFAULT_GUARD: usize = 600;

/// Generic structure constants of `S(m|n, r)` in the `[A]` basis:
/// `[b_i][b_j] = Σ_k c_{i,j}^k [b_k]`, stored for pairs with
/// `co(b_i) = ro(b_j)`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub basis: Vec<CosetMatrix>,
    pub products: BTreeMap<(usize, usize), Vec<(usize, LaurentPoly)>>,
    index: HashMap<CosetMatrix, usize>,
}

impl StructureConstants {
    /// All products from the Hecke oracle, computed in parallel.
    pub fn compute(m: usize, n: usize, r: usize, guard: usize) -> Result<Self> {
        let basis = enumerate_matrices(m, n, r, MatrixVariant::All);
        if basis.len() > guard {
            return Err(Error::ResourceLimit {
                what: format!("|M({m}|{n},{r})| = {}", basis.len()),
                guard,
            });
        }
        let index: HashMap<CosetMatrix, usize> = basis.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let pairs: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| basis[i].co() == basis[j].ro())
            .collect();
        let results: Vec<((usize, usize), Vec<(usize, LaurentPoly)>)> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let x = bracket_product(&basis[i], &basis[j])?;
                let terms = x.terms().map(|(b, c)| (index[b], c.clone())).collect();
                Ok(((i, j), terms))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            m,
            n,
            r,
            basis,
            products: results.into_iter().collect(),
            index,
        })
    }

    pub fn index_of(&self, a: &CosetMatrix) -> Option<usize> {
        self.index.get(a).copied()
    }
}

/// A finite-dimensional algebra over a specialization field, given by its
/// structure constants in a fixed basis.
#[derive(Clone, Debug)]
pub struct SpecializedAlgebra<F: Field> {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: u32,
    pub labels: Vec<String>,
    pub field: F,
    table: BTreeMap<(usize, usize), SparseVec<F::Elem>>,
    unit: SparseVec<F::Elem>,
}

/// Specializes a generic element of `S(m|n, r)` into coordinates over the
/// basis of `sc`.
pub fn specialize_element<F: Field>(
    sc: &StructureConstants,
    field: &F,
    x: &SchurElement,
) -> Result<SparseVec<F::Elem>> {
    let x = x.to_basis(Basis::Bracket);
    let mut out = SparseVec::new();
    for (a, c) in x.terms() {
        let i = sc
            .index_of(a)
            .ok_or_else(|| Error::InvalidParameters(format!("{a} is not in M({}|{},{})", sc.m, sc.n, sc.r)))?;
        let e = field.specialize(c);
        if !field.is_zero(&e) {
            out.insert(i, e);
        }
    }
    Ok(out)
}

/// The full algebra `S_F(m|n, r)` with `v` specialized by `field`.
pub fn build_specialized<F: Field>(sc: &StructureConstants, l: u32, field: F) -> SpecializedAlgebra<F> {
    let table = sc
        .products
        .iter()
        .filter_map(|(&key, terms)| {
            let v: SparseVec<F::Elem> = terms
                .iter()
                .map(|(k, c)| (*k, field.specialize(c)))
                .filter(|(_, e)| !field.is_zero(e))
                .collect();
            (!v.is_empty()).then_some((key, v))
        })
        .collect();
    let unit = sc
        .basis
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_diagonal())
        .map(|(i, _)| (i, field.one()))
        .collect();
    SpecializedAlgebra {
        m: sc.m,
        n: sc.n,
        r: sc.r,
        l,
        labels: sc.basis.iter().map(CosetMatrix::key).collect(),
        field,
        table,
        unit,
    }
}

impl<F: Field> SpecializedAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> &SparseVec<F::Elem> {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec<F::Elem> {
        SparseVec::from([(i, self.field.one())])
    }

    pub fn mul(&self, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut out = SparseVec::new();
        for (&i, xi) in x {
            for (&j, yj) in y {
                if let Some(p) = self.table.get(&(i, j)) {
                    axpy(f, &mut out, &f.mul(xi, yj), p);
                }
            }
        }
        out
    }

    /// `unit * b = b = b * unit` for every basis element.
    pub fn unit_is_identity(&self) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }

    /// The subalgebra spanned by `elements` (coordinates in this algebra).
    /// Each element needs an index not used by the others; products that
    /// leave the span are reported as an error.
    pub fn subalgebra(&self, labels: Vec<String>, elements: &[SparseVec<F::Elem>]) -> Result<SpecializedAlgebra<F>> {
        let f = &self.field;
        let mut owners: HashMap<usize, usize> = HashMap::new();
        for x in elements {
            for &i in x.keys() {
                *owners.entry(i).or_default() += 1;
            }
        }
        let pivots: Vec<usize> = elements
            .iter()
            .enumerate()
            .map(|(t, x)| {
                x.keys()
                    .copied()
                    .find(|i| owners[i] == 1)
                    .ok_or_else(|| Error::InvalidParameters(format!("element {t} has no private basis index")))
            })
            .collect::<Result<_>>()?;
        let coords = |v: &SparseVec<F::Elem>| -> Option<SparseVec<F::Elem>> {
            let mut c = SparseVec::new();
            let mut rebuilt = SparseVec::new();
            for (t, x) in elements.iter().enumerate() {
                if let Some(vp) = v.get(&pivots[t]) {
                    let ct = f.mul(vp, &f.inv(&x[&pivots[t]]).expect("pivot entry is nonzero"));
                    axpy(f, &mut rebuilt, &ct, x);
                    c.insert(t, ct);
                }
            }
            (rebuilt == *v).then_some(c)
        };
        let pairs: Vec<(usize, usize)> = (0..elements.len())
            .flat_map(|i| (0..elements.len()).map(move |j| (i, j)))
            .collect();
        let products: Vec<((usize, usize), SparseVec<F::Elem>)> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let p = self.mul(&elements[i], &elements[j]);
                let c = coords(&p).ok_or_else(|| {
                    Error::Domain(format!("product of {} and {} leaves the span", labels[i], labels[j]))
                })?;
                Ok(((i, j), c))
            })
            .collect::<Result<_>>()?;
        let unit = coords(&self.unit).ok_or_else(|| Error::Domain("the identity is not in the span".into()))?;
        Ok(SpecializedAlgebra {
            m: self.m,
            n: self.n,
            r: self.r,
            l: self.l,
            labels,
            field: self.field.clone(),
            table: products.into_iter().filter(|(_, v)| !v.is_empty()).collect(),
            unit,
        })
    }

    /// `trace(L_{b_k})` for each basis element.
    pub fn traces(&self) -> Vec<F::Elem> {
        let f = &self.field;
        let mut t = vec![f.zero(); self.dim()];
        for (&(k, i), p) in &self.table {
            if let Some(c) = p.get(&i) {
                t[k] = f.add(&t[k], c);
            }
        }
        t
    }

    /// Rows of the Gram matrix `G_{i,j} = trace(L_{b_i b_j})`.
    pub fn gram_rows(&self) -> Vec<SparseVec<F::Elem>> {
        let f = &self.field;
        let t = self.traces();
        let mut rows = vec![SparseVec::new(); self.dim()];
        for (&(i, j), p) in &self.table {
            let mut s = f.zero();
            for (k, c) in p {
                s = f.add(&s, &f.mul(c, &t[*k]));
            }
            if !f.is_zero(&s) {
                rows[i].insert(j, s);
            }
        }
        rows
    }

    /// Rank of the trace form and a basis of its kernel, block by block.
    pub fn trace_form_kernel(&self) -> (usize, Vec<SparseVec<F::Elem>>) {
        let rows = self.gram_rows();
        let mut total_rank = 0;
        let mut kernel = Vec::new();
        for (ri, ci) in blocks(&rows, self.dim()) {
            let local: HashMap<usize, usize> = ci.iter().enumerate().map(|(a, &j)| (j, a)).collect();
            let sub: Vec<SparseVec<F::Elem>> = ri
                .iter()
                .map(|&i| rows[i].iter().map(|(j, c)| (local[j], c.clone())).collect())
                .collect();
            total_rank += rank(&self.field, &sub);
            for v in kernel_basis(&self.field, &sub, ci.len()) {
                kernel.push(v.into_iter().map(|(a, c)| (ci[a], c)).collect());
            }
        }
        (total_rank, kernel)
    }

    pub fn is_nilpotent(&self, x: &SparseVec<F::Elem>) -> bool {
        let mut y = x.clone();
        let mut power = 1;
        while power < self.dim().max(1) {
            y = self.mul(&y, &y);
            power *= 2;
        }
        y.is_empty()
    }

    pub fn render(&self, x: &SparseVec<F::Elem>) -> BTreeMap<String, String> {
        x.iter().map(|(&i, c)| (self.labels[i].clone(), format!("{c:?}"))).collect()
    }

    fn commutators(&self) -> Vec<SparseVec<F::Elem>> {
        let f = &self.field;
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let (bi, bj) = (self.basis_vector(i), self.basis_vector(j));
                let mut c = self.mul(&bi, &bj);
                axpy(f, &mut c, &f.from_int(-1), &self.mul(&bj, &bi));
                if !c.is_empty() {
                    out.push(c);
                }
            }
        }
        out
    }
}

/// Outcome of the trace-form test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub dim: usize,
    pub rank: usize,
    pub semisimple: bool,
    /// A kernel vector of the trace form, when there is one.
    pub radical_vector: Option<BTreeMap<String, String>>,
    pub radical_nilpotent: Option<bool>,
}

/// Nondegeneracy of the trace form `(x, y) -> trace(L_{xy})`; in
/// characteristic zero this is equivalent to semisimplicity.
pub fn semisimple_oracle<F: Field>(alg: &SpecializedAlgebra<F>) -> Result<Certificate> {
    if alg.field.characteristic() != 0 {
        return Err(Error::Unsupported(
            "the trace-form test needs characteristic zero".into(),
        ));
    }
    let (rank, kernel) = alg.trace_form_kernel();
    let radical = kernel.first();
    Ok(Certificate {
        dim: alg.dim(),
        rank,
        semisimple: rank == alg.dim(),
        radical_vector: radical.map(|x| alg.render(x)),
        radical_nilpotent: radical.map(|x| alg.is_nilpotent(x)),
    })
}

/// Counts of simple modules read off the semisimple quotient `A / rad A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleCounts {
    pub radical_dim: usize,
    pub quotient_dim: usize,
    /// `dim A/rad - dim [A/rad, A/rad]`, the number of simples over a
    /// splitting field.
    pub simples: usize,
    /// Codimension of the ideal generated by commutators and the radical.
    pub one_dimensional: usize,
}

/// Simple-module counts in characteristic zero, where `rad A` is the kernel
/// of the trace form.
pub fn simple_counts<F: Field>(alg: &SpecializedAlgebra<F>) -> Result<SimpleCounts> {
    if alg.field.characteristic() != 0 {
        return Err(Error::Unsupported("radical via trace form needs characteristic zero".into()));
    }
    let f = &alg.field;
    let d = alg.dim();
    let (_, radical) = alg.trace_form_kernel();
    let comms = alg.commutators();

    let mut span = Subspace::<F>::new();
    for v in radical.iter().chain(&comms) {
        span.insert(f, v);
    }
    let simples = d - span.dim();

    let mut ideal = Subspace::<F>::new();
    let mut queue: Vec<SparseVec<F::Elem>> = radical.iter().chain(&comms).cloned().collect();
    while let Some(v) = queue.pop() {
        if !ideal.insert(f, &v) {
            continue;
        }
        for i in 0..d {
            let b = alg.basis_vector(i);
            for w in [alg.mul(&b, &v), alg.mul(&v, &b)] {
                if !w.is_empty() && !ideal.contains(f, &w) {
                    queue.push(w);
                }
            }
        }
    }
    Ok(SimpleCounts {
        radical_dim: radical.len(),
        quotient_dim: d - radical.len(),
        simples,
        one_dimensional: d - ideal.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::CyclotomicField;

    #[test]
    fn small_algebras() {
        let sc = StructureConstants::compute(1, 1, 2, DEFAULT_GUARD).unwrap();
        let alg = build_specialized(&sc, 2, CyclotomicField::new(2).unwrap());
        assert_eq!(alg.dim(), 8);
        assert!(alg.unit_is_identity());
        let cert = semisimple_oracle(&alg).unwrap();
        assert!(!cert.semisimple);
        assert_eq!(cert.radical_nilpotent, Some(true));

        let sc = StructureConstants::compute(1, 1, 3, DEFAULT_GUARD).unwrap();
        let alg = build_specialized(&sc, 2, CyclotomicField::new(2).unwrap());
        assert_eq!(alg.dim(), 12);
        let cert = semisimple_oracle(&alg).unwrap();
        assert!(cert.semisimple);
        assert!(cert.radical_vector.is_none());
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            StructureConstants::compute(2, 1, 3, 10),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn positive_characteristic_is_refused() {
        let sc = StructureConstants::compute(1, 1, 1, DEFAULT_GUARD).unwrap();
        let alg = build_specialized(&sc, 2, crate::exactalg::PrimeField::new(5, 1, 2).unwrap());
        assert!(matches!(semisimple_oracle(&alg), Err(Error::Unsupported(_))));
    }
}
