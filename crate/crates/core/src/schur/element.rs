use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::stats::bracket_scalar;
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symgroup::CosetMatrix;

/// Which basis the coefficients of a [`SchurElement`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `φ_A`.
    Phi,
    /// `[A] = (-1)^Â v^{-d(A)} φ_A`.
    Bracket,
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(Basis::Phi),
            "bracket" => Ok(Basis::Bracket),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// An element of `S(m|n, r)` as a finitely supported map from matrices in
/// `M(m|n, r)` to Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurElement {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub basis: Basis,
    coeffs: BTreeMap<CosetMatrix, LaurentPoly>,
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let label = match self.basis {
            Basis::Phi => "φ",
            Basis::Bracket => "",
        };
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(a, c)| format!("({c}){label}[{a}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl SchurElement {
    pub fn zero(m: usize, n: usize, r: usize, basis: Basis) -> Self {
        Self {
            m,
            n,
            r,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element labelled by `a`.
    pub fn basis_element(a: &CosetMatrix, basis: Basis) -> Self {
        let mut x = Self::zero(a.m, a.n, a.degree(), basis);
        x.coeffs.insert(a.clone(), LaurentPoly::one());
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (CosetMatrix, LaurentPoly)>>(
        m: usize,
        n: usize,
        r: usize,
        basis: Basis,
        iter: I,
    ) -> Self {
        let mut x = Self::zero(m, n, r, basis);
        for (a, c) in iter {
            x.add_term(a, &c);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: &CosetMatrix) -> LaurentPoly {
        self.coeffs.get(a).cloned().unwrap_or_default()
    }

    /// Terms in row-major lexicographic order of the labels.
    pub fn terms(&self) -> impl Iterator<Item = (&CosetMatrix, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &CosetMatrix> {
        self.coeffs.keys()
    }

    pub fn add_term(&mut self, a: CosetMatrix, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(a).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    /// `self += c * other`; both must use the same basis.
    pub fn add_scaled(&mut self, other: &SchurElement, c: &LaurentPoly) -> Result<()> {
        self.check_compatible(other)?;
        for (a, x) in &other.coeffs {
            self.add_term(a.clone(), &(x * c));
        }
        Ok(())
    }

    pub fn scale(&self, c: &LaurentPoly) -> SchurElement {
        let mut out = SchurElement::zero(self.m, self.n, self.r, self.basis);
        for (a, x) in &self.coeffs {
            out.add_term(a.clone(), &(x * c));
        }
        out
    }

    pub fn add(&self, other: &SchurElement) -> Result<SchurElement> {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &SchurElement) -> Result<SchurElement> {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1))?;
        Ok(out)
    }

    fn check_compatible(&self, other: &SchurElement) -> Result<()> {
        if (self.m, self.n) != (other.m, other.n) || self.basis != other.basis {
            return Err(Error::InvalidParameters(format!(
                "cannot combine elements of S({}|{}) in {:?} and S({}|{}) in {:?}",
                self.m, self.n, self.basis, other.m, other.n, other.basis
            )));
        }
        if self.r != other.r {
            return Err(Error::DegreeMismatch(self.r, other.r));
        }
        Ok(())
    }

    /// Rewrites the element in the requested basis.
    pub fn to_basis(&self, basis: Basis) -> SchurElement {
        if basis == self.basis {
            return self.clone();
        }
        let mut out = SchurElement::zero(self.m, self.n, self.r, basis);
        for (a, c) in &self.coeffs {
            let s = bracket_scalar(a);
            // s is a signed monomial, so its inverse is its bar with the same sign.
            let factor = match basis {
                Basis::Phi => s,
                Basis::Bracket => s.bar(),
            };
            out.add_term(a.clone(), &(c * &factor));
        }
        out
    }

    /// `{"1,0;0,1": "1", ...}`.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(a, c)| (a.key(), c.to_string()))
            .collect()
    }

    pub fn to_latex_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(a, c)| (a.key(), c.to_latex()))
            .collect()
    }

    pub fn from_string_map(
        m: usize,
        n: usize,
        r: usize,
        basis: Basis,
        map: &BTreeMap<String, String>,
    ) -> Result<SchurElement> {
        let mut out = SchurElement::zero(m, n, r, basis);
        for (k, v) in map {
            let a = CosetMatrix::parse_key(k, m, n)?;
            if a.degree() != r {
                return Err(Error::DegreeMismatch(r, a.degree()));
            }
            out.add_term(a, &v.parse::<LaurentPoly>()?);
        }
        Ok(out)
    }

    /// Coefficient map, for comparisons with the oracle.
    pub fn into_map(self) -> BTreeMap<CosetMatrix, LaurentPoly> {
        self.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{enumerate_matrices, MatrixVariant};

    #[test]
    fn basis_change_round_trip() {
        let mut x = SchurElement::zero(1, 1, 2, Basis::Bracket);
        for (i, a) in enumerate_matrices(1, 1, 2, MatrixVariant::All).into_iter().enumerate() {
            x.add_term(a, &LaurentPoly::monomial(i as i64 + 1, i as i32 - 3));
        }
        let phi = x.to_basis(Basis::Phi);
        assert_eq!(phi.to_basis(Basis::Bracket), x);
        let anti = CosetMatrix::new(1, 1, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let b = SchurElement::basis_element(&anti, Basis::Bracket).to_basis(Basis::Phi);
        assert_eq!(b.coeff(&anti), LaurentPoly::monomial(1, -1));
    }

    #[test]
    fn string_map_round_trip() {
        let a = CosetMatrix::new(1, 1, vec![vec![1, 1], vec![0, 0]]).unwrap();
        let mut x = SchurElement::basis_element(&a, Basis::Phi).scale(&LaurentPoly::from_terms([(0, 1), (2, 1)]));
        x.add_term(CosetMatrix::new(1, 1, vec![vec![2, 0], vec![0, 0]]).unwrap(), &LaurentPoly::constant(-3));
        let map = x.to_string_map();
        assert_eq!(map["1,1;0,0"], "1 + 1*v^2");
        assert_eq!(SchurElement::from_string_map(1, 1, 2, Basis::Phi, &map).unwrap(), x);
    }

    #[test]
    fn mismatched_combination_fails() {
        let a = CosetMatrix::new(1, 1, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let x = SchurElement::basis_element(&a, Basis::Phi);
        let y = SchurElement::basis_element(&a, Basis::Bracket);
        assert!(x.add(&y).is_err());
    }
}
