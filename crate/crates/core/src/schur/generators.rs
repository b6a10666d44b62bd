use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::element::{Basis, SchurElement};
use super::formulas::{bar_gauss, bar_qint, check_h, mul_bracket_simple, shift};
use super::stats::{epsilon, v_exp};
use crate::error::{Error, Result};
use crate::exactalg::{sign, LaurentPoly};
use crate::symgroup::{enumerate_matrices, weak_compositions, Composition, CosetMatrix, MatrixVariant};

/// One of the generators `K_i`, `1_λ`, `E_h^{(p)}`, `F_h^{(p)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    K(usize),
    One(Composition),
    E { h: usize, p: usize },
    F { h: usize, p: usize },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::K(i) => write!(f, "K{i}"),
            GeneratorSpec::One(lam) => {
                let parts: Vec<String> = lam.parts.iter().map(ToString::to_string).collect();
                write!(f, "1_{}", parts.join(","))
            }
            GeneratorSpec::E { h, p: 1 } => write!(f, "E{h}"),
            GeneratorSpec::E { h, p } => write!(f, "E{h}p{p}"),
            GeneratorSpec::F { h, p: 1 } => write!(f, "F{h}"),
            GeneratorSpec::F { h, p } => write!(f, "F{h}p{p}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    /// `K2`, `E1`, `E1p2`, `F3p2`, or `1_2,0,1` (split taken from the
    /// ambient algebra at validation time).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator {s:?}"));
        if let Some(rest) = s.strip_prefix("1_") {
            let parts = rest
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            return Ok(GeneratorSpec::One(Composition::new(parts, 0)));
        }
        let (kind, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let (idx, p) = match rest.split_once('p') {
            Some((i, p)) => (i, p.parse::<usize>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let idx = idx.parse::<usize>().map_err(|_| bad())?;
        match kind {
            "K" if p == 1 => Ok(GeneratorSpec::K(idx)),
            "E" => Ok(GeneratorSpec::E { h: idx, p }),
            "F" => Ok(GeneratorSpec::F { h: idx, p }),
            _ => Err(bad()),
        }
    }
}

impl GeneratorSpec {
    pub fn e(h: usize) -> Self {
        GeneratorSpec::E { h, p: 1 }
    }

    pub fn f(h: usize) -> Self {
        GeneratorSpec::F { h, p: 1 }
    }

    /// Checks the indices against `S(m|n, r)` and fixes the split of `1_λ`.
    pub fn validated(self, m: usize, n: usize, r: usize) -> Result<Self> {
        match self {
            GeneratorSpec::K(i) => {
                if i == 0 || i > m + n {
                    return Err(Error::InvalidGenerator(format!("K{i} for m + n = {}", m + n)));
                }
                Ok(self)
            }
            GeneratorSpec::One(lam) => {
                if lam.len() != m + n || lam.degree() != r {
                    return Err(Error::InvalidGenerator(format!(
                        "1_λ needs λ in Λ({m}|{n},{r}), got {:?}",
                        lam.parts
                    )));
                }
                Ok(GeneratorSpec::One(Composition::new(lam.parts, m)))
            }
            GeneratorSpec::E { h, p } | GeneratorSpec::F { h, p } => {
                check_h(h, m, n).map_err(|e| Error::InvalidGenerator(format!("{e:?}")))?;
                if p == 0 {
                    return Err(Error::InvalidGenerator("divided power p must be >= 1".into()));
                }
                if h == m && p >= 2 {
                    return Err(Error::InvalidGenerator(format!(
                        "divided powers of E_{m}, F_{m} vanish beyond p = 1"
                    )));
                }
                Ok(self)
            }
        }
    }
}

/// `Π_k bar[[a_k + ν_k over ν_k]]_{v_h^2}`.
fn binomial_product(row: impl Iterator<Item = usize>, nu: &[usize], h: usize, m: usize) -> LaurentPoly {
    row.zip(nu).map(|(a, &x)| bar_gauss(a + x, x, h, m)).product()
}

/// `E_h^{(p)}[A]` or `F_h^{(p)}[A]` for `h != m`.
fn divided_power(plus: bool, h: usize, p: usize, a: &CosetMatrix) -> SchurElement {
    let size = a.size();
    let mut out = SchurElement::zero(a.m, a.n, a.degree(), Basis::Bracket);
    let (gain, lose) = if plus { (h, h + 1) } else { (h + 1, h) };
    let v = v_exp(gain, a.m);
    for nu in weak_compositions(size, p) {
        if (1..=size).any(|t| nu[t - 1] > a.get(lose, t)) {
            continue;
        }
        let mut exponent = 0i64;
        for t in 1..=size {
            let (same, other) = if plus {
                (
                    (t..=size).map(|j| a.get(h, j)).sum::<usize>(),
                    (t + 1..=size).map(|j| a.get(h + 1, j)).sum::<usize>(),
                )
            } else {
                (
                    (1..=t).map(|j| a.get(h + 1, j)).sum::<usize>(),
                    (1..t).map(|j| a.get(h, j)).sum::<usize>(),
                )
            };
            exponent += (same as i64 - other as i64) * nu[t - 1] as i64;
            for t2 in t + 1..=size {
                exponent += (nu[t - 1] * nu[t2 - 1]) as i64;
            }
        }
        let mut b = a.clone();
        for t in 1..=size {
            b.set(gain, t, b.get(gain, t) + nu[t - 1]);
            b.set(lose, t, b.get(lose, t) - nu[t - 1]);
        }
        if !b.is_super_distinguished() {
            continue;
        }
        let coeff = &LaurentPoly::monomial(1, v * exponent as i32)
            * &binomial_product((1..=size).map(|t| a.get(gain, t)), &nu, gain, a.m);
        out.add_term(b, &coeff);
    }
    out
}

/// `E_m[A]` or `F_m[A]`.
fn odd_generator(plus: bool, a: &CosetMatrix) -> SchurElement {
    let m = a.m;
    let size = a.size();
    let mut out = SchurElement::zero(a.m, a.n, a.degree(), Basis::Bracket);
    let (gain, lose) = if plus { (m, m + 1) } else { (m + 1, m) };
    for k in 1..=size {
        if a.get(lose, k) == 0 {
            continue;
        }
        let Some(b) = shift(a, m, k, plus) else { continue };
        let eps = epsilon(a, m, k);
        let f = if plus {
            (k..=size).map(|j| a.get(m, j)).sum::<usize>()
                + (k + 1..=size).map(|j| a.get(m + 1, j)).sum::<usize>()
        } else {
            (1..=k).map(|j| a.get(m + 1, j)).sum::<usize>() + (1..k).map(|j| a.get(m, j)).sum::<usize>()
        };
        let coeff = &LaurentPoly::monomial(sign(eps as i64), v_exp(gain, m) * f as i32)
            * &bar_qint(a.get(gain, k) + 1, gain, m);
        out.add_term(b, &coeff);
    }
    out
}

/// The action of a generator on `[A]`, in the `[ ]` basis.
pub fn act_generator(g: &GeneratorSpec, a: &CosetMatrix) -> Result<SchurElement> {
    let g = g.clone().validated(a.m, a.n, a.degree())?;
    let lam = a.ro();
    let mut out = SchurElement::zero(a.m, a.n, a.degree(), Basis::Bracket);
    match g {
        GeneratorSpec::K(i) => {
            let e = sign(a.parity(i) as i64) * lam.part(i) as i64;
            out.add_term(a.clone(), &LaurentPoly::monomial(1, e as i32));
        }
        GeneratorSpec::One(mu) => {
            if mu == lam {
                out.add_term(a.clone(), &LaurentPoly::one());
            }
        }
        GeneratorSpec::E { h, p } | GeneratorSpec::F { h, p } => {
            let plus = matches!(g, GeneratorSpec::E { .. });
            out = if h == a.m {
                odd_generator(plus, a)
            } else {
                divided_power(plus, h, p, a)
            };
        }
    }
    Ok(out)
}

/// Left action of a generator on an element in the `[ ]` basis.
pub fn act_on(g: &GeneratorSpec, x: &SchurElement) -> Result<SchurElement> {
    let x = x.to_basis(Basis::Bracket);
    let mut out = SchurElement::zero(x.m, x.n, x.r, Basis::Bracket);
    for (a, c) in x.terms() {
        out.add_scaled(&act_generator(g, a)?, c)?;
    }
    Ok(out)
}

/// Applies a word of generators, rightmost first.
pub fn act_word(word: &[GeneratorSpec], x: &SchurElement) -> Result<SchurElement> {
    let mut out = x.to_basis(Basis::Bracket);
    for g in word.iter().rev() {
        out = act_on(g, &out)?;
    }
    Ok(out)
}

/// `E_h^{(p)}[A]` computed from the product `[D^+_h]^p [A]` divided by `[p]!`;
/// the `p = 1` case is the normalized simple formula.
pub fn divided_power_from_products(plus: bool, h: usize, p: usize, a: &CosetMatrix) -> Result<SchurElement> {
    let mut x = SchurElement::basis_element(a, Basis::Bracket);
    for _ in 0..p {
        let mut next = SchurElement::zero(a.m, a.n, a.degree(), Basis::Bracket);
        for (b, c) in x.terms() {
            next.add_scaled(&mul_bracket_simple(plus, h, b)?, c)?;
        }
        x = next;
    }
    let fact = crate::exactalg::balanced_factorial(p as u32);
    let mut out = SchurElement::zero(a.m, a.n, a.degree(), Basis::Bracket);
    for (b, c) in x.terms() {
        let q = c.div_exact(&fact).ok_or_else(|| {
            Error::InternalInconsistency(format!("[{p}]! does not divide the coefficient of {b}"))
        })?;
        out.add_term(b.clone(), &q);
    }
    Ok(out)
}

/// The matrix of a generator over the `[A]` basis of `S(m|n, r)`:
/// `entries[i][j]` is the coefficient of `basis[i]` in `g [basis[j]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularRepMatrix {
    pub basis: Vec<CosetMatrix>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl RegularRepMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn identity(basis: Vec<CosetMatrix>) -> Self {
        let d = basis.len();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                    .collect()
            })
            .collect();
        Self { basis, entries }
    }

    pub fn mul(&self, other: &RegularRepMatrix) -> RegularRepMatrix {
        let d = self.dim();
        let entries = (0..d)
            .into_par_iter()
            .map(|i| {
                (0..d)
                    .map(|j| {
                        (0..d)
                            .filter(|&k| !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero())
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        RegularRepMatrix {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn add_scaled(&self, other: &RegularRepMatrix, c: &LaurentPoly) -> RegularRepMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| x + &(y * c)).collect())
            .collect();
        RegularRepMatrix {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> RegularRepMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x * c).collect())
            .collect();
        RegularRepMatrix {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(LaurentPoly::is_zero)
    }

    /// Column `j` as an element.
    pub fn column(&self, j: usize) -> SchurElement {
        let a = &self.basis[j];
        SchurElement::from_terms(
            a.m,
            a.n,
            a.degree(),
            Basis::Bracket,
            self.basis
                .iter()
                .zip(&self.entries)
                .map(|(b, row)| (b.clone(), row[j].clone())),
        )
    }

    /// Entries as coefficient strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn to_latex(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(LaurentPoly::to_latex).collect())
            .collect()
    }
}

/// Matrix of `g` acting on the `[A]` basis, columns built in parallel.
pub fn regular_rep_matrix(g: &GeneratorSpec, m: usize, n: usize, r: usize) -> Result<RegularRepMatrix> {
    let g = g.clone().validated(m, n, r)?;
    let basis = enumerate_matrices(m, n, r, MatrixVariant::All);
    let index: std::collections::HashMap<&CosetMatrix, usize> =
        basis.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let columns: Vec<SchurElement> = basis
        .par_iter()
        .map(|a| act_generator(&g, a))
        .collect::<Result<_>>()?;
    let d = basis.len();
    let mut entries = vec![vec![LaurentPoly::zero(); d]; d];
    for (j, col) in columns.iter().enumerate() {
        for (b, c) in col.terms() {
            entries[index[b]][j] = c.clone();
        }
    }
    Ok(RegularRepMatrix { basis, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qint;

    fn mat(m: usize, n: usize, rows: Vec<Vec<usize>>) -> CosetMatrix {
        CosetMatrix::new(m, n, rows).unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["K2", "E1", "E1p2", "F3p2", "F2"] {
            assert_eq!(s.parse::<GeneratorSpec>().unwrap().to_string(), s);
        }
        let one: GeneratorSpec = "1_2,0,1".parse().unwrap();
        assert_eq!(one.validated(2, 1, 3).unwrap().to_string(), "1_2,0,1");
        assert!("X1".parse::<GeneratorSpec>().is_err());
        assert!("Ep".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn validation() {
        assert!(GeneratorSpec::E { h: 1, p: 2 }.validated(1, 1, 3).is_err());
        assert!(GeneratorSpec::F { h: 1, p: 2 }.validated(2, 1, 3).is_ok());
        assert!(GeneratorSpec::E { h: 3, p: 1 }.validated(2, 1, 3).is_err());
        assert!(GeneratorSpec::K(4).validated(2, 1, 3).is_err());
        assert!(GeneratorSpec::One(Composition::new(vec![1, 1], 0)).validated(2, 1, 3).is_err());
    }

    #[test]
    fn one_one_examples() {
        // F_1 [A_0^+] = v^{-(r-1)} [[r]]_q 1_0 and E_1 [A_{a-1}^±] = v^{r-1} [[a]]_{q^{-1}} [A_a^+].
        for r in 2..=5 {
            let a0 = mat(1, 1, vec![vec![0, 1], vec![0, r - 1]]);
            let x = act_generator(&GeneratorSpec::f(1), &a0).unwrap();
            let one0 = mat(1, 1, vec![vec![0, 0], vec![0, r]]);
            assert_eq!(x.len(), 1);
            assert_eq!(x.coeff(&one0), qint(r as u32).shift(-(r as i32 - 1)));
            for a in 1..r {
                let pm = mat(1, 1, vec![vec![a - 1, 1], vec![1, r - a - 1]]);
                let plus = mat(1, 1, vec![vec![a, 1], vec![0, r - a - 1]]);
                let y = act_generator(&GeneratorSpec::e(1), &pm).unwrap();
                assert_eq!(y.len(), 1);
                assert_eq!(y.coeff(&plus), qint(a as u32).substitute_power(-1).shift(r as i32 - 1));
            }
        }
    }

    #[test]
    fn idempotents_and_k() {
        let r = 3;
        let basis = enumerate_matrices(2, 1, r, MatrixVariant::All);
        let mut total = RegularRepMatrix {
            basis: basis.clone(),
            entries: vec![vec![LaurentPoly::zero(); basis.len()]; basis.len()],
        };
        for lam in Composition::all(3, r, 2) {
            let m = regular_rep_matrix(&GeneratorSpec::One(lam), 2, 1, r).unwrap();
            assert_eq!(m.mul(&m), m);
            total = total.add_scaled(&m, &LaurentPoly::one());
        }
        assert_eq!(total, RegularRepMatrix::identity(basis.clone()));
        let a = mat(2, 1, vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 1, 1]]);
        assert_eq!(
            act_generator(&GeneratorSpec::K(3), &a).unwrap().coeff(&a),
            LaurentPoly::monomial(1, -2)
        );
    }

    #[test]
    fn odd_squares_vanish() {
        for r in 1..=4 {
            let e = regular_rep_matrix(&GeneratorSpec::e(1), 1, 1, r).unwrap();
            let f = regular_rep_matrix(&GeneratorSpec::f(1), 1, 1, r).unwrap();
            assert!(e.mul(&e).is_zero());
            assert!(f.mul(&f).is_zero());
        }
    }
}
