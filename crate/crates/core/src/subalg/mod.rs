//! The infinitesimal subalgebra `s(m|n, r)` and the little subalgebra
//! `u(m|n, r)` of `S(m|n, r)` at `q` a primitive `l`-th root of unity.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicField, Field, LaurentPoly};
use crate::schur::{act_generator, triangular_product, Basis, GeneratorSpec, SchurElement};
use crate::spectra::linalg::{axpy, SparseVec, Subspace};
use crate::spectra::{build_specialized, semisimple_oracle, specialize_element, Certificate, StructureConstants};
use crate::symgroup::{enumerate_matrices, Composition, CosetMatrix, MatrixVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Infinitesimal,
    Little,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinitesimal" => Ok(Kind::Infinitesimal),
            "little" => Ok(Kind::Little),
            _ => Err(Error::Parse(format!("unknown subalgebra kind {s:?}"))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Infinitesimal => "infinitesimal",
            Kind::Little => "little",
        })
    }
}

/// Infinitesimal items are matrices with off-diagonal entries `< l`; little
/// items are class representatives `A^± + diag(∂̄)` with `∂̄` in `0..l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraBasis {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: u32,
    pub items: Vec<CosetMatrix>,
}

pub fn subalgebra_basis(kind: Kind, m: usize, n: usize, r: usize, l: u32) -> Result<SubalgebraBasis> {
    if l < 2 {
        return Err(Error::InvalidParameters(format!("need l >= 2, got {l}")));
    }
    if m + n == 0 {
        return Err(Error::InvalidParameters("need m + n >= 1".into()));
    }
    let variant = match kind {
        Kind::Infinitesimal => MatrixVariant::LRestricted(l as usize),
        Kind::Little => MatrixVariant::BarClasses(l as usize),
    };
    Ok(SubalgebraBasis { kind, m, n, r, l, items: enumerate_matrices(m, n, r, variant) })
}

/// `ξ̄_A = Σ [A^± + diag(λ)]` over `λ ∈ Λ(m|n, r - |A^±|)` with `λ ≡ ∂̄ mod l`,
/// where `item = A^± + diag(∂̄)`.
pub fn expand_xi_bar(item: &CosetMatrix, r: usize, l: u32) -> Result<SchurElement> {
    let l = l as usize;
    let residues = item.diagonal();
    if residues.iter().any(|&x| x >= l) {
        return Err(Error::InvalidParameters(format!("{item} has a diagonal entry >= l = {l}")));
    }
    let off = item.off_diagonal();
    let mut out = SchurElement::zero(item.m, item.n, r, Basis::Bracket);
    let Some(rest) = r.checked_sub(off.degree()) else {
        return Ok(out);
    };
    for lam in Composition::all(item.size(), rest, item.m) {
        if lam.parts.iter().zip(&residues).all(|(a, b)| a % l == *b) {
            out.add_term(off.with_diagonal(&lam.parts), &LaurentPoly::one());
        }
    }
    Ok(out)
}

/// `Σ_x 1̄_{diag(x)}` over the diagonal little items.
pub fn little_identity(m: usize, n: usize, r: usize, l: u32) -> Result<SchurElement> {
    let mut out = SchurElement::zero(m, n, r, Basis::Bracket);
    for item in subalgebra_basis(Kind::Little, m, n, r, l)?.items.iter().filter(|a| a.is_diagonal()) {
        out = out.add(&expand_xi_bar(item, r, l)?)?;
    }
    Ok(out)
}

impl SubalgebraBasis {
    pub fn dim(&self) -> usize {
        self.items.len()
    }

    /// The element of `S(m|n, r)` for item `i`.
    pub fn element(&self, i: usize) -> Result<SchurElement> {
        match self.kind {
            Kind::Infinitesimal => Ok(SchurElement::basis_element(&self.items[i], Basis::Bracket)),
            Kind::Little => expand_xi_bar(&self.items[i], self.r, self.l),
        }
    }

    pub fn elements(&self) -> Result<Vec<SchurElement>> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.items.iter().map(CosetMatrix::key).collect()
    }

    /// The generating idempotents: `1_λ` for `s`, `1̄_λ` for `u`, keyed by
    /// `λ` (or its residue).
    fn idempotent_classes(&self) -> Vec<Vec<usize>> {
        let size = self.m + self.n;
        match self.kind {
            Kind::Infinitesimal => Composition::all(size, self.r, self.m).into_iter().map(|c| c.parts).collect(),
            Kind::Little => self.items.iter().filter(|a| a.is_diagonal()).map(CosetMatrix::diagonal).collect(),
        }
    }

    fn idempotent_matches(&self, class: &[usize], row_sums: &Composition) -> bool {
        match self.kind {
            Kind::Infinitesimal => row_sums.parts == class,
            Kind::Little => row_sums.parts.iter().zip(class).all(|(a, b)| a % self.l as usize == *b),
        }
    }
}

/// The specialization used for the subalgebras: `v` of order `l` when `l`
/// is odd, so that `v`-powers of diagonal entries only depend on their
/// residues mod `l`; otherwise `v` of order `2l`.
pub fn default_field(l: u32) -> Result<CyclotomicField> {
    if l % 2 == 1 {
        CyclotomicField::with_v_order(l, l)
    } else {
        CyclotomicField::new(l)
    }
}

/// `S(m|n, r)` specialized by `field`, with the generator actions tabulated
/// on demand.
struct Ambient {
    field: CyclotomicField,
    basis: Vec<CosetMatrix>,
    index: HashMap<CosetMatrix, usize>,
    actions: HashMap<(usize, usize), SparseVec<<CyclotomicField as Field>::Elem>>,
}

type Vector = SparseVec<<CyclotomicField as Field>::Elem>;

impl Ambient {
    fn new(m: usize, n: usize, r: usize, field: &CyclotomicField, guard: usize) -> Result<Self> {
        let basis = enumerate_matrices(m, n, r, MatrixVariant::All);
        if basis.len() > guard {
            return Err(Error::ResourceLimit { what: format!("dim S({m}|{n},{r}) = {}", basis.len()), guard });
        }
        let index = basis.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Ok(Self { field: field.clone(), basis, index, actions: HashMap::new() })
    }

    fn specialize(&self, x: &SchurElement) -> Vector {
        let x = x.to_basis(Basis::Bracket);
        x.terms()
            .map(|(a, c)| (self.index[a], self.field.specialize(c)))
            .filter(|(_, e)| !self.field.is_zero(e))
            .collect()
    }

    fn generator_on(&mut self, g: usize, gens: &[GeneratorSpec], i: usize) -> Result<Vector> {
        if let Some(v) = self.actions.get(&(g, i)) {
            return Ok(v.clone());
        }
        let v = self.specialize(&act_generator(&gens[g], &self.basis[i])?);
        self.actions.insert((g, i), v.clone());
        Ok(v)
    }

    fn act(&mut self, g: usize, gens: &[GeneratorSpec], x: &Vector) -> Result<Vector> {
        let mut out = Vector::new();
        for (&i, c) in x {
            let gi = self.generator_on(g, gens, i)?;
            axpy(&self.field, &mut out, c, &gi);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: u32,
    /// Multiplicative order of `v`.
    pub v_order: u32,
    pub dimension: usize,
    /// `E_h`, `F_h` and the idempotents map the span into itself.
    pub generator_stable: bool,
    /// Dimension of the span of all generator words applied to the
    /// idempotents; equal to `dimension` when the span is generated.
    pub generated_dim: usize,
    /// The idempotents sum to the identity of `S(m|n, r)`.
    pub unit_ok: bool,
    /// Infinitesimal only: the triangular products of the items lie in the
    /// span and span it.
    pub triangular_ok: Option<bool>,
    /// All pairwise products computed through the Hecke algebra.
    pub exhaustive: Option<bool>,
    pub witness: Option<String>,
    pub closed: bool,
}

/// Certifies that the span of `basis` is the subalgebra generated by
/// `E_h`, `F_h` and the idempotents, at `q` a primitive `l`-th root of unity.
pub fn closure_check(
    basis: &SubalgebraBasis,
    field: &CyclotomicField,
    exhaustive: bool,
    guard: usize,
) -> Result<ClosureReport> {
    let (m, n, r, l) = (basis.m, basis.n, basis.r, basis.l);
    if field.l() != l {
        return Err(Error::InvalidParameters(format!("field is for l = {}, basis for l = {l}", field.l())));
    }
    let mut amb = Ambient::new(m, n, r, field, guard)?;
    let field = amb.field.clone();
    let elements = basis.elements()?;
    let vectors: Vec<Vector> = elements.iter().map(|x| amb.specialize(x)).collect();
    let mut span = Subspace::<CyclotomicField>::new();
    for v in &vectors {
        span.insert(&field, v);
    }
    let mut witness = None;
    let mut fail = |w: String| {
        if witness.is_none() {
            witness = Some(w);
        }
    };
    if span.dim() != basis.dim() {
        fail(format!("the {} items span only {} dimensions", basis.dim(), span.dim()));
    }

    let gens: Vec<GeneratorSpec> = (1..m + n).flat_map(|h| [GeneratorSpec::e(h), GeneratorSpec::f(h)]).collect();
    let classes = basis.idempotent_classes();
    let idempotent = |class: &[usize], x: &Vector, amb: &Ambient| -> Vector {
        x.iter()
            .filter(|(&i, _)| basis.idempotent_matches(class, &amb.basis[i].ro()))
            .map(|(&i, c)| (i, c.clone()))
            .collect()
    };

    let mut generator_stable = true;
    for (t, v) in vectors.iter().enumerate() {
        for g in 0..gens.len() {
            if !span.contains(&field, &amb.act(g, &gens, v)?) {
                generator_stable = false;
                fail(format!("{} · {} leaves the span", gens[g], basis.items[t]));
            }
        }
        for class in &classes {
            if !span.contains(&field, &idempotent(class, v, &amb)) {
                generator_stable = false;
                fail(format!("idempotent {class:?} · {} leaves the span", basis.items[t]));
            }
        }
    }

    let one_all: Vector = amb.basis.iter().enumerate().filter(|(_, a)| a.is_diagonal()).map(|(i, _)| (i, field.one())).collect();
    let mut unit = Vector::new();
    let mut generated = Subspace::<CyclotomicField>::new();
    let mut queue = VecDeque::new();
    for class in &classes {
        let e = idempotent(class, &one_all, &amb);
        axpy(&field, &mut unit, &field.one(), &e);
        if generated.insert(&field, &e) {
            queue.push_back(e);
        }
    }
    let unit_ok = unit == one_all;
    while let Some(x) = queue.pop_front() {
        for g in 0..gens.len() {
            let y = amb.act(g, &gens, &x)?;
            if generated.insert(&field, &y) {
                if !span.contains(&field, &y) {
                    fail(format!("{} applied to a generated vector leaves the span", gens[g]));
                }
                queue.push_back(y);
            }
        }
    }
    let generated_dim = generated.dim();
    if generated_dim != span.dim() {
        fail(format!("generators span {generated_dim} dimensions, expected {}", span.dim()));
    }

    let triangular_ok = match basis.kind {
        Kind::Little => None,
        Kind::Infinitesimal => {
            let mut tri = Subspace::<CyclotomicField>::new();
            let mut ok = true;
            for a in &basis.items {
                let v = amb.specialize(&triangular_product(a)?);
                if !span.contains(&field, &v) {
                    ok = false;
                    fail(format!("the triangular product for {a} leaves the span"));
                }
                tri.insert(&field, &v);
            }
            ok &= tri.dim() == span.dim();
            Some(ok)
        }
    };

    let exhaustive = if exhaustive {
        let sc = StructureConstants::compute(m, n, r, guard)?;
        let alg = build_specialized(&sc, l, field.clone());
        let coords = elements.iter().map(|x| specialize_element(&sc, &field, x)).collect::<Result<Vec<_>>>()?;
        Some(match alg.subalgebra(basis.labels(), &coords) {
            Ok(_) => true,
            Err(Error::Domain(msg)) => {
                fail(msg);
                false
            }
            Err(e) => return Err(e),
        })
    } else {
        None
    };

    let closed = witness.is_none();
    Ok(ClosureReport {
        kind: basis.kind,
        m,
        n,
        r,
        l,
        v_order: field.v_order(),
        dimension: basis.dim(),
        generator_stable,
        generated_dim,
        unit_ok,
        triangular_ok,
        exhaustive,
        witness,
        closed: closed && unit_ok && generator_stable,
    })
}

/// The trace-form oracle on the subalgebra itself, in characteristic zero.
pub fn subalgebra_certificate(basis: &SubalgebraBasis, field: &CyclotomicField, guard: usize) -> Result<Certificate> {
    let sc = StructureConstants::compute(basis.m, basis.n, basis.r, guard)?;
    let field = field.clone();
    let alg = build_specialized(&sc, basis.l, field.clone());
    let coords = basis
        .elements()?
        .iter()
        .map(|x| specialize_element(&sc, &field, x))
        .collect::<Result<Vec<_>>>()?;
    semisimple_oracle(&alg.subalgebra(basis.labels(), &coords)?)
}

/// Matrices in the support of `x` with an off-diagonal entry `>= l`.
pub fn outside_restricted(x: &SchurElement, l: u32) -> Vec<CosetMatrix> {
    let field = default_field(l).expect("l >= 2");
    let l = l as usize;
    x.terms()
        .filter(|(a, c)| {
            let size = a.size();
            !field.is_zero(&field.specialize(c))
                && (0..size).any(|i| (0..size).any(|j| i != j && a.rows[i][j] >= l))
        })
        .map(|(a, _)| a.clone())
        .collect()
}

/// Item count by kind, for a quick dimension table.
pub fn dimensions(m: usize, n: usize, r: usize, l: u32) -> Result<BTreeMap<String, usize>> {
    Ok(BTreeMap::from([
        ("full".to_string(), enumerate_matrices(m, n, r, MatrixVariant::All).len()),
        (Kind::Infinitesimal.to_string(), subalgebra_basis(Kind::Infinitesimal, m, n, r, l)?.dim()),
        (Kind::Little.to_string(), subalgebra_basis(Kind::Little, m, n, r, l)?.dim()),
    ]))
}
